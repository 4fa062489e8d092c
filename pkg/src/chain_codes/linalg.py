"""
    chain_codes.linalg
    ~~~~~~~~~~~~~~~~~~

    Matrices over a chain ring: pivots and valuations, the row standard
    form (the canonical generator matrix of a code), inverses and the
    parity-check construction.

    Column indices are 0-based throughout. The pivot of a zero row is its
    first entry (column 0) with valuation ``s``.
"""
import logging
from dataclasses import dataclass
from typing import FrozenSet, List, Optional, Sequence, Tuple

from . import exceptions
from .environment import default_env
from .ring import Element, RingSpec


logger = logging.getLogger(__name__)


Row = Tuple[Element, ...]


class Mat:
    """An immutable ``k x ℓ`` matrix. A matrix may have no rows but keeps its column count."""
    __slots__ = ('ring', 'rows', 'ncols')

    def __init__(self, ring: RingSpec, rows: Sequence[Sequence] = (), ncols: Optional[int] = None) -> None:
        rows = tuple(tuple(ring.coerce(e) for e in row) for row in rows)
        if ncols is None:
            if not rows:
                raise exceptions.ShapeMismatch("the column count of a matrix without rows must be given")
            ncols = len(rows[0])
        for i, row in enumerate(rows):
            if len(row) != ncols:
                raise exceptions.ShapeMismatch(
                    "row {} has {} entries, expected {}".format(i, len(row), ncols), row=i)
        self.ring = ring
        self.rows = rows
        self.ncols = ncols

    @classmethod
    def from_ints(cls, ring: RingSpec, rows: Sequence[Sequence[int]], ncols: Optional[int] = None) -> 'Mat':
        return cls(ring, [[ring.from_int(x) for x in row] for row in rows], ncols)

    @classmethod
    def identity(cls, ring: RingSpec, n: int) -> 'Mat':
        return cls(ring, [[ring.one if i == j else ring.zero for j in range(n)] for i in range(n)], n)

    @classmethod
    def zero(cls, ring: RingSpec, nrows: int, ncols: int) -> 'Mat':
        return cls(ring, [[ring.zero] * ncols for _ in range(nrows)], ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, pos):
        i, j = pos
        return self.rows[i][j]

    def __iter__(self):
        return iter(self.rows)

    def __len__(self):
        return len(self.rows)

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return self.ring == other.ring and self.ncols == other.ncols and self.rows == other.rows

    def __hash__(self):
        return hash((self.ncols, self.rows))

    def __repr__(self):
        return 'Mat({}, {}x{}, [{}])'.format(self.ring.label, self.nrows, self.ncols, self.text().replace('\n', '; '))

    def text(self) -> str:
        return '\n'.join(' '.join(e.text() for e in row) for row in self.rows)

    def column(self, j: int) -> Row:
        return tuple(row[j] for row in self.rows)

    def transpose(self) -> 'Mat':
        return Mat(self.ring, [self.column(j) for j in range(self.ncols)], self.nrows)

    def __matmul__(self, other: 'Mat') -> 'Mat':
        if self.ncols != other.nrows:
            raise exceptions.ShapeMismatch("cannot multiply {}x{} by {}x{}".format(*self.shape, *other.shape))
        cols = [other.column(j) for j in range(other.ncols)]
        return Mat(self.ring, [[dot(row, col) for col in cols] for row in self.rows], other.ncols)

    def map(self, func, ring: Optional[RingSpec] = None) -> 'Mat':
        return Mat(ring or self.ring, [[func(e) for e in row] for row in self.rows], self.ncols)

    def permute_columns(self, perm: Sequence[int]) -> 'Mat':
        """The matrix whose column ``k`` is column ``perm[k]`` of `self`."""
        return Mat(self.ring, [[row[p] for p in perm] for row in self.rows], self.ncols)

    def stack(self, other: 'Mat') -> 'Mat':
        if other.ncols != self.ncols:
            raise exceptions.ShapeMismatch("cannot stack {} and {} columns".format(self.ncols, other.ncols))
        return Mat(self.ring, self.rows + other.rows, self.ncols)

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self.rows for e in row)


def dot(u: Sequence[Element], v: Sequence[Element]) -> Element:
    ret = None
    for a, b in zip(u, v):
        ret = a * b if ret is None else ret + a * b
    return ret


def _axpy(row: Row, factor: Element, other: Row) -> Row:
    # row - factor * other
    if factor.is_zero():
        return row
    return tuple(a - factor * b for a, b in zip(row, other))


def _scale(row: Row, factor: Element) -> Row:
    return tuple(factor * a for a in row)


def row_pivot(row: Sequence[Element], s: int) -> Tuple[int, int]:
    """The ``(valuation, column)`` of the pivot of `row`."""
    best_v, best_c = s, 0
    for c, e in enumerate(row):
        v = e.valuation()
        if v < best_v:
            best_v, best_c = v, c
    return best_v, best_c


def pivot_data(A: Mat) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """The valuation function ``ϑ_A`` and the pivot function ``ρ`` as tuples indexed by row."""
    data = [row_pivot(row, A.ring.s) for row in A.rows]
    return tuple(v for v, _ in data), tuple(c for _, c in data)


@dataclass(frozen=True)
class RsfCheck:
    """The outcome of :func:`is_rsf`; `condition` names the first violated condition."""
    ok: bool
    condition: Optional[str] = None
    row: Optional[int] = None
    column: Optional[int] = None
    message: str = ''

    def __bool__(self):
        return self.ok


def is_rsf(A: Mat) -> RsfCheck:
    ring = A.ring
    vals, cols = pivot_data(A)
    for i, row in enumerate(A.rows):
        if vals[i] == ring.s:
            return RsfCheck(False, 'zero-row', i, None, "row {} is zero".format(i))
    for i in range(1, A.nrows):
        if vals[i] < vals[i - 1]:
            return RsfCheck(False, 'increasing', i, cols[i],
                            "the valuation drops from {} to {} at row {}".format(vals[i - 1], vals[i], i))
        if vals[i] == vals[i - 1] and cols[i] <= cols[i - 1]:
            return RsfCheck(False, 'pivot-order', i, cols[i],
                            "rows {} and {} share valuation {} but their pivots are not left to right".format(
                                i - 1, i, vals[i]))
    if len(set(cols)) != len(cols):
        return RsfCheck(False, 'injective', None, None, "two rows share a pivot column")
    for i in range(A.nrows):
        c, v = cols[i], vals[i]
        if A[i, c] != ring.theta_powers[v]:
            return RsfCheck(False, 'pivot', i, c, "the pivot of row {} is {}, not θ^{}".format(i, A[i, c], v))
        for t in range(A.nrows):
            e = A[t, c]
            if t > i and not e.is_zero():
                return RsfCheck(False, 'below', t, c, "entry ({}, {}) below a pivot is not zero".format(t, c))
            if t < i and e.truncate(v) != e:
                message = "entry ({}, {}) above a pivot of valuation {} has degree {}".format(t, c, v, e.degree())
                return RsfCheck(False, 'above', t, c, message)
    return RsfCheck(True)


@dataclass(frozen=True)
class RsfReport:
    """
        The row standard form of a matrix.

        `pivots` lists ``(row, column, valuation)`` for the rows of `rsf`;
        `transform` records the elementary operations in the order applied,
        with rows named by their index in the input:

        - ``('scale', i, unit)``
        - ``('add', i, j, factor)`` meaning ``row_i -= factor * row_j``
        - ``('drop', i)``
        - ``('order', (i_0, i_1, ...))`` the input rows forming the output
    """
    rsf: Mat
    pivots: Tuple[Tuple[int, int, int], ...]
    transform: Tuple[tuple, ...]


def row_standard_form(A: Mat) -> RsfReport:
    """
        Hermite style elimination: the pending row with the smallest
        ``(valuation, pivot column, input index)`` becomes the next pivot
        row, is scaled so that its pivot is ``θ^ϑ``, clears its column in the
        pending rows and reduces its column in the finished rows to
        θ-adic degree below ``ϑ``.
    """
    ring = A.ring
    s = ring.s
    rows = dict(enumerate(A.rows))
    pending = list(range(A.nrows))
    done: List[Tuple[int, int, int]] = []
    ops: List[tuple] = []

    while pending:
        keyed = []
        for i in list(pending):
            v, c = row_pivot(rows[i], s)
            if v == s:
                pending.remove(i)
                ops.append(('drop', i))
            else:
                keyed.append((v, c, i))
        if not keyed:
            break
        v, c, i = min(keyed)
        pending.remove(i)

        unit = rows[i][c].divide_theta(v)
        if unit != 1:
            inverse = unit.inverse()
            rows[i] = _scale(rows[i], inverse)
            ops.append(('scale', i, inverse))
        pivot_row = rows[i]

        for j in pending:
            e = rows[j][c]
            if not e.is_zero():
                f = e.divide_theta(v)
                rows[j] = _axpy(rows[j], f, pivot_row)
                ops.append(('add', j, i, f))

        for j, _, _ in done:
            e = rows[j][c]
            trunc = e.truncate(v)
            if trunc != e:
                f = (e - trunc).divide_theta(v)
                rows[j] = _axpy(rows[j], f, pivot_row)
                ops.append(('add', j, i, f))

        done.append((i, c, v))

    order = tuple(i for i, _, _ in done)
    ops.append(('order', order))
    rsf = Mat(ring, [rows[i] for i in order], A.ncols)
    pivots = tuple((k, c, v) for k, (_, c, v) in enumerate(done))
    logger.debug("RSF of a %dx%d matrix over %s has %d rows", A.nrows, A.ncols, ring.label, len(order))
    return RsfReport(rsf, pivots, tuple(ops))


def rsf(A: Mat) -> Mat:
    return row_standard_form(A).rsf


def determinant(A: Mat) -> Element:
    """Laplace expansion along the first row."""
    if A.nrows != A.ncols:
        raise exceptions.ShapeMismatch("the determinant needs a square matrix, got {}x{}".format(*A.shape))
    ring = A.ring
    if A.nrows == 0:
        return ring.one
    if A.nrows == 1:
        return A[0, 0]
    ret = ring.zero
    for j, e in enumerate(A.rows[0]):
        if e.is_zero():
            continue
        minor = Mat(ring, [row[:j] + row[j + 1:] for row in A.rows[1:]], A.ncols - 1)
        term = e * determinant(minor)
        ret = ret + term if j % 2 == 0 else ret - term
    return ret


def mat_inverse(A: Mat) -> Mat:
    """Gauss-Jordan elimination with unit pivots."""
    n = A.nrows
    if n != A.ncols:
        raise exceptions.ShapeMismatch("only square matrices are invertible, got {}x{}".format(*A.shape))
    ring = A.ring
    left = [list(row) for row in A.rows]
    right = [list(row) for row in Mat.identity(ring, n).rows]
    for j in range(n):
        pivot = next((i for i in range(j, n) if left[i][j].is_unit()), None)
        if pivot is None:
            raise exceptions.NonUnitDeterminant("the determinant is not a unit")
        left[j], left[pivot] = left[pivot], left[j]
        right[j], right[pivot] = right[pivot], right[j]
        inverse = left[j][j].inverse()
        left[j] = [inverse * e for e in left[j]]
        right[j] = [inverse * e for e in right[j]]
        for i in range(n):
            f = left[i][j]
            if i != j and not f.is_zero():
                left[i] = [a - f * b for a, b in zip(left[i], left[j])]
                right[i] = [a - f * b for a, b in zip(right[i], right[j])]
    return Mat(ring, right, n)


def type_exponent(vals: Sequence[int], s: int) -> int:
    """``log_{q} |row span|`` of a matrix in row standard form with pivot valuations `vals`."""
    return sum(s - v for v in vals)


def kernel_dual(G: Mat) -> Mat:
    """
        The row standard form of a generator matrix of
        ``{x : G x^T = 0}``.

        The pivot columns of `G` are moved to the front so that the leading
        ``k x k`` block is upper triangular with diagonal ``θ^{ϑ_i}``. Column
        operations, recorded in ``C``, then clear everything except the
        diagonal; the kernel of ``diag(θ^{ϑ_i}) | 0`` is read off and mapped
        back through ``C`` and the permutation.
    """
    check = is_rsf(G)
    if not check:
        raise exceptions.NotRsfInput(check.message, condition=check.condition)
    ring = G.ring
    s = ring.s
    k, ell = G.nrows, G.ncols
    vals, cols = pivot_data(G)
    perm = list(cols) + [j for j in range(ell) if j not in cols]

    M = [list(row) for row in G.permute_columns(perm).rows]
    # C is stored by columns
    C = [[ring.one if i == j else ring.zero for i in range(ell)] for j in range(ell)]
    for t in range(k - 1, -1, -1):
        v = vals[t]
        for j in range(ell):
            if j == t or M[t][j].is_zero():
                continue
            f = M[t][j].divide_theta(v)
            for i in range(k):
                M[i][j] = M[i][j] - f * M[i][t]
            C[j] = [a - f * b for a, b in zip(C[j], C[t])]

    gens = [C[j] for j in range(k, ell)]
    for i in range(k):
        if vals[i] > 0:
            gens.append([ring.theta_powers[s - vals[i]] * e for e in C[i]])

    unpermuted = []
    for x in gens:
        y = [ring.zero] * ell
        for p, orig in enumerate(perm):
            y[orig] = x[p]
        unpermuted.append(y)
    H = rsf(Mat(ring, unpermuted, ell))

    dual_vals, _ = pivot_data(H)
    if type_exponent(vals, s) + type_exponent(dual_vals, s) != ell * s:
        raise exceptions.InternalError(
            "the dual of a code of exponent {} has exponent {} (length {}, s = {})".format(
                type_exponent(vals, s), type_exponent(dual_vals, s), ell, s))
    return H


def row_span(A: Mat, env=default_env) -> FrozenSet[Tuple[Element, ...]]:
    """All vectors of the row span of `A`, by enumeration."""
    ring = A.ring
    env.check_size(ring.size ** A.ncols, 'the ambient space of the row span', env.span_check_bits)
    elements = list(ring.elements())
    span = {(ring.zero,) * A.ncols}
    for row in A.rows:
        span = {tuple(a + c * b for a, b in zip(vec, row)) for vec in span for c in elements}
    return frozenset(span)
