"""
    chain_codes.codes
    ~~~~~~~~~~~~~~~~~

    Linear codes over the top ring of a :class:`Tower`, kept in row
    standard form. Codes over the base ring are codes over the trivial
    tower, so restriction and trace codes have the same type as their
    inputs.
"""
import functools
import itertools
import logging
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from sympy import divisors

from . import exceptions
from .environment import default_env
from .extension import Subgroup, Tower
from .linalg import Mat, kernel_dual, pivot_data, row_standard_form
from .ring import Element, RingSpec


logger = logging.getLogger(__name__)


EUCLIDEAN = 'euclidean'
HERMITIAN = 'hermitian'
FORMS = (EUCLIDEAN, HERMITIAN)


class Code:
    """
        An S-linear code of length `length`, identified by its row standard
        form `rsf`. Use :func:`code_from_generators` to build one from
        arbitrary generators.
    """

    def __init__(self, tower: Tower, length: int, rsf: Mat) -> None:
        self.tower = tower
        self.length = length
        self.rsf = rsf

    @property
    def ring(self) -> RingSpec:
        return self.tower.top

    @property
    def rows(self) -> Tuple[Tuple[Element, ...], ...]:
        return self.rsf.rows

    @functools.cached_property
    def pivots(self) -> Tuple[Tuple[int, int], ...]:
        """``(column, valuation)`` of every row."""
        vals, cols = pivot_data(self.rsf)
        return tuple(zip(cols, vals))

    @functools.cached_property
    def type(self) -> Tuple[int, ...]:
        """``(k_0, ..., k_{s-1})``: the number of rows of each pivot valuation."""
        counts = [0] * self.ring.s
        for _, v in self.pivots:
            counts[v] += 1
        return tuple(counts)

    @property
    def rank(self) -> int:
        return self.rsf.nrows

    @property
    def free_rank(self) -> int:
        return self.type[0]

    @property
    def exponent(self) -> int:
        """``Σ k_t (s - t)``, so that the code has ``q_S^exponent`` words."""
        s = self.ring.s
        return sum(k * (s - t) for t, k in enumerate(self.type))

    @property
    def cardinality(self) -> int:
        return self.ring.q ** self.exponent

    def type_text(self) -> str:
        return '({};{})'.format(self.length, ','.join(str(k) for k in self.type))

    def is_zero(self) -> bool:
        return self.rank == 0

    def is_full(self) -> bool:
        return self.type[0] == self.length

    def __eq__(self, other):
        if not isinstance(other, Code):
            return NotImplemented
        return self.tower == other.tower and self.length == other.length and self.rsf.rows == other.rsf.rows

    def __hash__(self):
        return hash((self.length, self.rsf.rows))

    def __repr__(self):
        return 'Code({}, {} {})'.format(self.tower.label, self.type_text(), self.rsf.text().replace('\n', '; '))

    def __contains__(self, word):
        return contains(self, word)

    def codewords(self, env=default_env, bits: Optional[int] = None) -> List[Tuple[Element, ...]]:
        """
            All codewords. Every word is ``Σ c_i r_i`` over the rows ``r_i``
            with ``c_i`` of θ-adic degree below ``s - ϑ_i``, uniquely.
        """
        env.check_size(self.cardinality, 'the code {}'.format(self.type_text()), bits)
        ring = self.ring
        words = [(ring.zero,) * self.length]
        for row, (_, v) in zip(self.rows, self.pivots):
            coeffs = truncations(ring, ring.s - v)
            words = [tuple(a + c * b for a, b in zip(w, row)) for w in words for c in coeffs]
        return words

    def is_subcode_of(self, other: 'Code') -> bool:
        _check_compatible(self, other)
        return all(contains(other, row) for row in self.rows)


@functools.lru_cache(maxsize=None)
def _truncations(ring: RingSpec, k: int) -> Tuple[Element, ...]:
    ret = [ring.zero]
    for t in range(k):
        ret = [a + g * ring.theta_powers[t] for a in ret for g in ring.teichmuller]
    return tuple(ret)


def truncations(ring: RingSpec, k: int) -> Tuple[Element, ...]:
    """The ``q^k`` elements of θ-adic degree below `k`: representatives of ``R / θ^k R``."""
    return _truncations(ring, min(k, ring.s))


def _check_compatible(a: Code, b: Code) -> None:
    if a.tower != b.tower:
        raise exceptions.Mismatch("codes over {} and {}".format(a.tower.label, b.tower.label))
    if a.length != b.length:
        raise exceptions.Mismatch("codes of lengths {} and {}".format(a.length, b.length))


def code_from_generators(tower: Tower, rows: Iterable[Sequence], length: Optional[int] = None) -> Code:
    if isinstance(rows, Mat):
        length = rows.ncols if length is None else length
        rows = rows.rows
    rows = [tuple(r) for r in rows]
    for i, row in enumerate(rows):
        if length is None:
            length = len(row)
        if len(row) != length:
            raise exceptions.LengthMismatch(
                "generator {} has length {}, expected {}".format(i, len(row), length), row=i)
    if length is None:
        raise exceptions.LengthMismatch("the length of a code without generators must be given")
    mat = Mat(tower.top, rows, length)
    return Code(tower, length, row_standard_form(mat).rsf)


def zero_code(tower: Tower, length: int) -> Code:
    return Code(tower, length, Mat(tower.top, [], length))


def full_code(tower: Tower, length: int) -> Code:
    return Code(tower, length, Mat.identity(tower.top, length))


def contains(code: Code, word: Sequence) -> bool:
    """Greedy reduction against the row standard form; the word is in the code iff nothing remains."""
    ring = code.ring
    w = [ring.coerce(x) for x in word]
    if len(w) != code.length:
        raise exceptions.LengthMismatch("a word of length {} cannot lie in a code of length {}".format(
            len(w), code.length))
    for row, (c, v) in zip(code.rows, code.pivots):
        e = w[c]
        if e.is_zero():
            continue
        if e.valuation() < v:
            return False
        f = e.divide_theta(v)
        w = [a - f * b for a, b in zip(w, row)]
    return all(a.is_zero() for a in w)


def code_sum(a: Code, b: Code) -> Code:
    _check_compatible(a, b)
    return code_from_generators(a.tower, a.rows + b.rows, a.length)


def dual(code: Code, form: str = EUCLIDEAN) -> Code:
    if form not in FORMS:
        raise exceptions.UsageError("unknown form '{}' (use {})".format(form, ' or '.join(FORMS)))
    if form == HERMITIAN:
        m = code.tower.m
        if m % 2:
            raise exceptions.HermitianRequiresEvenDegree(
                "the Hermitian form needs an even extension degree, got {}".format(m), m=m)
        code = apply_automorphism(code, m // 2)
    return Code(code.tower, code.length, kernel_dual(code.rsf))


def phi_prime(tower: Tower) -> str:
    """The Hermitian form for even extension degrees, the Euclidean one otherwise."""
    return HERMITIAN if tower.m % 2 == 0 else EUCLIDEAN


def intersect(a: Code, b: Code) -> Code:
    _check_compatible(a, b)
    return dual(code_sum(dual(a), dual(b)))


def apply_automorphism(code: Code, power: int = 1) -> Code:
    power %= code.tower.m
    if power == 0:
        return code
    frob = code.tower.frobenius
    return code_from_generators(code.tower, [[frob(e, power) for e in row] for row in code.rows], code.length)


def theta_multiple(code: Code, t: int) -> Code:
    """``θ^t B``"""
    if t >= code.ring.s:
        return zero_code(code.tower, code.length)
    scale = code.ring.theta_powers[t]
    return code_from_generators(code.tower, [[scale * e for e in row] for row in code.rows], code.length)


# restriction, trace and extension

def _base_code(tower: Tower, rows, length: int) -> Code:
    return code_from_generators(Tower.trivial(tower.base), rows, length)


def restriction(code: Code, method: str = 'interior') -> Code:
    """
        ``B ∩ R^ℓ`` as a code over the base ring.

        ``interior`` reads it off the row standard form of the Galois
        interior, whose entries all lie in the base ring. ``coordinates``
        writes ``S^ℓ`` as ``R^{mℓ}`` in the free basis and intersects the
        R-span of ``α_j b_i`` with the first coordinate block.
    """
    tower = code.tower
    if tower.is_trivial:
        return code
    if method == 'interior':
        inner = interior(code)
        try:
            rows = [[tower.to_base(e) for e in row] for row in inner.rows]
        except exceptions.NotInBaseRing:
            raise exceptions.InternalError("the Galois interior has entries outside the base ring")
        return _base_code(tower, rows, code.length)
    if method == 'coordinates':
        return _restriction_by_coordinates(code)
    raise exceptions.UsageError("unknown restriction method '{}'".format(method))


def _restriction_by_coordinates(code: Code) -> Code:
    tower = code.tower
    m, ell = tower.m, code.length
    base = tower.base
    trivial = Tower.trivial(base)

    def flat(word):
        return [c for e in word for c in tower.coordinates(e)]

    gens = [flat([alpha * e for e in row]) for row in code.rows for alpha in tower.basis]
    module = code_from_generators(trivial, gens, m * ell)
    block_complement = [[base.one if k == i * m + j else base.zero for k in range(m * ell)]
                        for i in range(ell) for j in range(1, m)]
    others = code_from_generators(trivial, block_complement, m * ell)
    meet = dual(code_sum(dual(module), others))
    return code_from_generators(trivial, [[row[i * m] for i in range(ell)] for row in meet.rows], ell)


def trace_code(code: Code) -> Code:
    """``Tr(B)``, spanned over R by ``Tr(α*_j b_i)`` for the rows ``b_i``."""
    tower = code.tower
    if tower.is_trivial:
        return code
    gens = [[tower.trace(d * e) for e in row] for row in code.rows for d in tower.dual_basis]
    return _base_code(tower, gens, code.length)


def extension(code: Code, tower: Tower) -> Code:
    """The S-span of a code over the base ring of `tower`."""
    if not code.tower.is_trivial or code.tower.base != tower.base:
        raise exceptions.Mismatch("{} is not a code over {}".format(code, tower.base.label))
    return code_from_generators(tower, [[tower.embed(e) for e in row] for row in code.rows], code.length)


# Galois closure and interior

def conjugate_codes(code: Code) -> List[Code]:
    return [apply_automorphism(code, j) for j in range(code.tower.m)]


def interior(code: Code) -> Code:
    """The largest Galois invariant subcode ``∩_σ σ(B)``."""
    ret = code
    for other in conjugate_codes(code)[1:]:
        ret = intersect(ret, other)
    return ret


def closure(code: Code) -> Code:
    """The smallest Galois invariant supercode ``Σ_σ σ(B)``."""
    return code_from_generators(code.tower, [row for c in conjugate_codes(code) for row in c.rows], code.length)


def interior_via_restriction(code: Code) -> Code:
    """``Ext(Res(B))`` with the restriction computed in coordinates."""
    return extension(restriction(code, 'coordinates'), code.tower)


def closure_via_trace(code: Code) -> Code:
    return extension(trace_code(code), code.tower)


def is_galois_invariant(code: Code) -> bool:
    """A code is Galois invariant iff its row standard form lies over the base ring."""
    return all(code.tower.in_base(e) for row in code.rows for e in row)


@dataclass(frozen=True)
class InvarianceRecord:
    rsf_over_base: bool
    sigma_fixed: bool
    trace_is_restriction: bool

    @property
    def consistent(self) -> bool:
        return self.rsf_over_base == self.sigma_fixed == self.trace_is_restriction


def invariance_record(code: Code) -> InvarianceRecord:
    return InvarianceRecord(
        rsf_over_base=is_galois_invariant(code),
        sigma_fixed=apply_automorphism(code, 1) == code,
        trace_is_restriction=trace_code(code) == restriction(code, 'coordinates'),
    )


@dataclass(frozen=True)
class DelsarteRecord:
    """``lhs = Tr(B^⊥)`` and ``rhs = Res(B)^⊥``, each computed on its own."""
    form: str
    lhs: Code
    rhs: Code

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def delsarte_check(code: Code, form: Optional[str] = None) -> DelsarteRecord:
    form = form or phi_prime(code.tower)
    lhs = trace_code(dual(code, form))
    rhs = dual(restriction(code))
    record = DelsarteRecord(form, lhs, rhs)
    if not record.equal:
        logger.error("Trace of the dual differs from the dual of the restriction for %s", code)
    return record


# the Galois correspondence on subcodes

def fixed_subcode(code: Code, subgroup: Subgroup) -> Code:
    """``Fix_B(H) = ∩_{σ ∈ H} σ(B)``"""
    ret = code
    for j in subgroup.powers()[1:]:
        ret = intersect(ret, apply_automorphism(code, j))
    return ret


def _fixed_subcode_by_enumeration(code: Code, subgroup: Subgroup, env=default_env) -> Code:
    # the S-span of the codewords with every entry in Fix_S(H)
    tower = code.tower
    ret = zero_code(tower, code.length)
    for word in code.codewords(env, env.span_check_bits):
        if all(tower.frobenius(e, subgroup.d) == e for e in word) and not contains(ret, word):
            ret = code_from_generators(tower, ret.rows + (word,), code.length)
    return ret


def subcode_correspondence(code: Code, subgroup: Subgroup, env=default_env) -> Code:
    """
        ``Fix_B(H)``. When `code` is small enough it is also built as the
        extension of ``B ∩ T^ℓ`` for ``T = Fix_S(H)`` by enumeration, and
        the two must agree.
    """
    if subgroup.m != code.tower.m:
        raise exceptions.InvalidSubgroup("{} is not a subgroup of the Galois group of {}".format(
            subgroup, code.tower.label))
    fixed = fixed_subcode(code, subgroup)
    if env.within(code.cardinality):
        spanned = _fixed_subcode_by_enumeration(code, subgroup, env)
        if spanned != fixed:
            raise exceptions.OracleFailure(
                "Fix_B({}) differs from the extension of B ∩ T^ℓ".format(subgroup), subgroup=str(subgroup))
    return fixed


def code_stabilizer(code: Code, subcode: Code) -> Subgroup:
    """The subgroup ``<σ^d>`` of automorphisms mapping `subcode` onto itself (least such ``d``)."""
    if not subcode.is_subcode_of(code):
        raise exceptions.NotSubcode("{} is not contained in {}".format(subcode, code))
    m = code.tower.m
    for d in divisors(m):
        if apply_automorphism(subcode, d) == subcode:
            return Subgroup(m, d)
    return Subgroup(m, m)


@dataclass(frozen=True)
class CorrespondenceEntry:
    subgroup: Subgroup
    fixed: Code
    stabilizer: Subgroup

    @property
    def round_trip(self) -> bool:
        return self.stabilizer == self.subgroup


def galois_correspondence(code: Code, env=default_env) -> List[CorrespondenceEntry]:
    """
        ``H -> Fix_B(H) -> Stab(Fix_B(H))`` for every subgroup ``H``. The
        round trip may enlarge ``H`` for degenerate codes; such entries are
        reported, not rejected.
    """
    ret = []
    m = code.tower.m
    for d in divisors(m):
        subgroup = Subgroup(m, d)
        fixed = subcode_correspondence(code, subgroup, env)
        ret.append(CorrespondenceEntry(subgroup, fixed, code_stabilizer(code, fixed)))
    return ret


def all_codes(tower: Tower, length: int, env=default_env) -> List[Code]:
    """Every code of the given length, by closing the cyclic submodules of ``S^ℓ`` under sums."""
    ring = tower.top
    env.check_size(ring.size ** length, 'the space of words of length {}'.format(length), env.span_check_bits)
    principal = {}
    for word in itertools.product(ring.elements(), repeat=length):
        c = code_from_generators(tower, [word], length)
        principal[c] = None
    found = set(principal)
    frontier = list(found)
    gens = list(principal)
    while frontier:
        nxt = []
        for a in frontier:
            for b in gens:
                c = code_sum(a, b)
                if c not in found:
                    found.add(c)
                    nxt.append(c)
        frontier = nxt
    return sorted(found, key=lambda c: (c.exponent, [[e.key for e in row] for row in c.rows]))
