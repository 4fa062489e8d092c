"""
    chain_codes.cyclic
    ~~~~~~~~~~~~~~~~~~

    Cyclic codes of length ℓ over a chain ring R with ``gcd(ℓ, q) = 1``.

    A word ``(c_0, ..., c_{ℓ-1})`` is identified with the polynomial
    ``c_0 + c_1 x + ... + c_{ℓ-1} x^{ℓ-1}`` modulo ``x^ℓ - 1``. The splitting
    ring S of ``x^ℓ - 1`` is the degree ``ord_ℓ(q)`` extension of R and
    ``ξ`` is a primitive ℓ-th root of unity in its Teichmüller set.
"""
import functools
import itertools
import logging
from dataclasses import dataclass
from math import gcd
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

from sympy import n_order

from . import exceptions
from .codes import (
    Code, closure, code_from_generators, code_sum, contains, dual, is_galois_invariant, restriction,
    theta_multiple, trace_code, zero_code,
)
from .environment import default_env
from .extension import Tower, extend
from .linalg import Mat, dot
from .poly import Polynomial, x_pow_minus_one, xgcd
from .ring import Element, RingSpec


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CosetTable:
    """The q-cyclotomic cosets modulo ℓ, keyed by their smallest member."""
    ell: int
    q: int
    cosets: Tuple[Tuple[int, ...], ...]

    @property
    def representatives(self) -> Tuple[int, ...]:
        return tuple(c[0] for c in self.cosets)

    @functools.cached_property
    def _by_member(self) -> Dict[int, Tuple[int, ...]]:
        return {a: coset for coset in self.cosets for a in coset}

    def coset(self, a: int) -> Tuple[int, ...]:
        return self._by_member[a % self.ell]

    def representative(self, a: int) -> int:
        return self.coset(a)[0]

    def size(self, a: int) -> int:
        return len(self.coset(a))

    @property
    def sizes(self) -> Tuple[int, ...]:
        return tuple(len(c) for c in self.cosets)

    def text(self) -> str:
        return ' '.join('{' + ','.join(str(a) for a in coset) + '}' for coset in self.cosets)


def cyclotomic_cosets(ell: int, q: int) -> CosetTable:
    if ell < 1 or gcd(ell, q) != 1:
        raise exceptions.NotCoprime("gcd({}, {}) != 1".format(ell, q), ell=ell, q=q)
    seen = set()
    cosets = []
    for a in range(ell):
        if a in seen:
            continue
        coset = []
        b = a
        while b not in coset:
            coset.append(b)
            b = (b * q) % ell
        seen.update(coset)
        cosets.append(tuple(sorted(coset)))
    return CosetTable(ell, q, tuple(cosets))


# defining sets

@dataclass(frozen=True)
class DefiningSet:
    ell: int
    members: FrozenSet[int]

    def __post_init__(self):
        bad = [a for a in self.members if not 0 <= a < self.ell]
        if bad:
            raise exceptions.InvalidDefiningSet(
                "{} not in 0..{}".format(sorted(bad), self.ell - 1), members=sorted(bad))

    @classmethod
    def of(cls, ell: int, members: Iterable[int]) -> 'DefiningSet':
        if isinstance(members, DefiningSet):
            return members
        return cls(ell, frozenset(members))

    @classmethod
    def full(cls, ell: int) -> 'DefiningSet':
        return cls(ell, frozenset(range(ell)))

    def __iter__(self):
        return iter(sorted(self.members))

    def __len__(self):
        return len(self.members)

    def __contains__(self, a):
        return a in self.members

    def __le__(self, other):
        return self.members <= other.members

    def text(self) -> str:
        return '{' + ','.join(str(a) for a in self) + '}'

    def q_closure(self, q: int) -> 'DefiningSet':
        """The union of the cyclotomic cosets meeting the set."""
        table = cyclotomic_cosets(self.ell, q)
        return DefiningSet(self.ell, frozenset(b for a in self.members for b in table.coset(a)))

    def is_q_invariant(self, q: int) -> bool:
        return all((a * q) % self.ell in self.members for a in self.members)

    def opposite(self) -> 'DefiningSet':
        """``-A = {(ℓ - a) mod ℓ}``"""
        return DefiningSet(self.ell, frozenset((self.ell - a) % self.ell for a in self.members))

    def complement(self) -> 'DefiningSet':
        return DefiningSet(self.ell, frozenset(range(self.ell)) - self.members)

    def multiples(self, u: int) -> 'DefiningSet':
        return DefiningSet(self.ell, frozenset((u * a) % self.ell for a in self.members))

    def _progression(self, w: int, u: int, v: int) -> FrozenSet[int]:
        return frozenset((w * (u + i)) % self.ell for i in range(v))

    def _steps(self) -> List[int]:
        return [w for w in range(self.ell) if gcd(w, self.ell) == 1]

    def interval_witness(self) -> Optional[Tuple[int, int, int]]:
        """``(w, u, v)`` with ``A = {wu, w(u+1), ..., w(u+v-1)} mod ℓ``, or None."""
        v = len(self.members)
        if v == 0:
            return None
        for w in self._steps():
            for u in range(self.ell):
                if self._progression(w, u, v) == self.members:
                    return (w, u, v)
        return None

    def is_interval(self) -> bool:
        return self.interval_witness() is not None

    def longest_interval(self) -> Optional[Tuple[int, int, int]]:
        """The ``(w, u, v)`` of a longest interval contained in the set, or None for the empty set."""
        best = None
        for w in self._steps():
            for u in range(self.ell):
                v = 0
                while v < self.ell and (w * (u + v)) % self.ell in self.members:
                    v += 1
                if v and (best is None or v > best[2]):
                    best = (w, u, v)
        return best


@dataclass(frozen=True)
class SetCalculus:
    members: DefiningSet
    q_closure: DefiningSet
    opposite: DefiningSet
    complement: DefiningSet
    multiples: DefiningSet
    is_q_invariant: bool
    interval: Optional[Tuple[int, int, int]]
    longest_interval: Optional[Tuple[int, int, int]]

    @property
    def is_interval(self) -> bool:
        return self.interval is not None


def set_calculus(A: DefiningSet, q: int, u: int = 1) -> SetCalculus:
    return SetCalculus(
        members=A, q_closure=A.q_closure(q), opposite=A.opposite(), complement=A.complement(),
        multiples=A.multiples(u), is_q_invariant=A.is_q_invariant(q), interval=A.interval_witness(),
        longest_interval=A.longest_interval())


# the context

class CyclicContext:
    """
        Everything attached to ``(R, ℓ)``: the cosets, the splitting tower,
        the root ξ, the basic irreducible factors ``Λ_a`` of ``x^ℓ - 1`` and
        the primitive idempotents ``e_a`` of ``R[x]/(x^ℓ - 1)``.
    """

    def __init__(self, ring: RingSpec, ell: int, env=default_env) -> None:
        self.ring = ring
        self.ell = ell
        self.q = ring.q
        self.cosets = cyclotomic_cosets(ell, self.q)
        self.m = 1 if ell == 1 else int(n_order(self.q, ell))
        self.tower = extend(ring, self.m, env)
        self.base_tower = Tower.trivial(ring)
        self.xi = self.tower.primitive_root(ell)
        self.modulus = x_pow_minus_one(ring, ell)
        self.factors = {a: self._factor(a) for a in self.cosets.representatives}
        self._check_factorization()
        self.idempotents = {a: self._idempotent(a) for a in self.cosets.representatives}
        logger.info("Cyclic context for length %d over %s: m = %d, cosets %s",
                    ell, ring.label, self.m, self.cosets.text())

    def __repr__(self):
        return 'CyclicContext({}, ell={})'.format(self.ring.label, self.ell)

    @property
    def s(self) -> int:
        return self.ring.s

    @property
    def representatives(self) -> Tuple[int, ...]:
        return self.cosets.representatives

    def xi_power(self, k: int) -> Element:
        return self.xi ** (k % self.ell)

    def _factor(self, a: int) -> Polynomial:
        top = self.tower.top
        prod = Polynomial.constant(top, 1)
        for j in self.cosets.coset(a):
            prod = prod * Polynomial.linear_factor(self.xi_power(j))
        try:
            return prod.map(self.tower.to_base, self.ring)
        except exceptions.NotInBaseRing:
            raise exceptions.OracleFailure("the coset product for {} has coefficients outside {}".format(
                a, self.ring.label))

    def _check_factorization(self) -> None:
        prod = Polynomial.constant(self.ring, 1)
        for f in self.factors.values():
            prod = prod * f
        if prod != self.modulus:
            raise exceptions.OracleFailure("the coset products do not multiply to x^{} - 1".format(self.ell))

    def cyclic_mul(self, a: Polynomial, b: Polynomial) -> Polynomial:
        return (a * b) % self.modulus

    def _idempotent(self, a: int) -> Polynomial:
        factor = self.factors[a]
        cofactor = self.modulus.exact_div(factor)
        one, _, v = xgcd(factor.residue(), cofactor.residue())
        if one.degree != 0:
            raise exceptions.OracleFailure("Λ_{} is not coprime to its cofactor".format(a))
        residue_mod = self.modulus.residue()
        e = ((v * cofactor.residue()) % residue_mod).lift(self.ring)
        for _ in range(self.s + 2):
            sq = self.cyclic_mul(e, e)
            if sq == e:
                return e
            e = (sq * 3 - self.cyclic_mul(sq, e) * 2) % self.modulus
        raise exceptions.OracleFailure("the idempotent lift for {} did not converge".format(a))

    def check_idempotents(self) -> bool:
        """``e_a^2 = e_a``, ``e_a e_b = 0`` for ``a != b`` and ``Σ e_a = 1``."""
        total = Polynomial(self.ring)
        for a, e in self.idempotents.items():
            total = total + e
            for b, f in self.idempotents.items():
                prod = self.cyclic_mul(e, f)
                if prod != (e if a == b else Polynomial(self.ring)):
                    return False
        return total == Polynomial.constant(self.ring, 1)

    def word(self, poly: Polynomial) -> Tuple[Element, ...]:
        return (poly % x_pow_minus_one(poly.ring, self.ell)).padded(self.ell)

    def ideal_code(self, poly: Polynomial, tower: Optional[Tower] = None) -> Code:
        """The code of the ideal generated by `poly` in ``T[x]/(x^ℓ - 1)``."""
        tower = tower or self.base_tower
        word = self.word(poly)
        return code_from_generators(tower, [shift(word, k) for k in range(self.ell)], self.ell)

    def check_level(self, t: int) -> int:
        if not 0 <= t <= self.s:
            raise exceptions.InvalidLevel("{} is not in 0..{}".format(t, self.s), level=t)
        return t

    def defining_set(self, members) -> DefiningSet:
        return DefiningSet.of(self.ell, members)


@functools.lru_cache(maxsize=None)
def _context(ring: RingSpec, ell: int) -> CyclicContext:
    return CyclicContext(ring, ell)


def cyclic_context(ring: RingSpec, ell: int, env=default_env) -> CyclicContext:
    cyclotomic_cosets(ell, ring.q)
    m = 1 if ell == 1 else int(n_order(ring.q, ell))
    env.check_size(ring.size ** m, 'the splitting ring of x^{} - 1 over {}'.format(ell, ring.label))
    return _context(ring, ell)


def shift(word: Sequence[Element], k: int = 1) -> Tuple[Element, ...]:
    """The cyclic shift by `k` places to the right."""
    k %= len(word)
    return tuple(word[-k:]) + tuple(word[:-k]) if k else tuple(word)


def is_cyclic(code: Code) -> bool:
    return all(contains(code, shift(row)) for row in code.rows)


# minimal codes and multi-indices

def minimal_code(ctx: CyclicContext, a: int) -> Code:
    """The minimal cyclic code ``C_a`` generated by the idempotent ``e_a``; free of rank ``z_a``."""
    if a not in ctx.idempotents:
        raise exceptions.UnknownRepresentative(
            "{} is not a coset representative (use one of {})".format(a, list(ctx.representatives)), index=a)
    return _minimal_code(ctx, a)


@functools.lru_cache(maxsize=None)
def _minimal_code(ctx: CyclicContext, a: int) -> Code:
    return ctx.ideal_code(ctx.idempotents[a])


def subcode_chain(ctx: CyclicContext, a: int) -> List[Code]:
    """``C_a, θ C_a, ..., θ^s C_a = 0``"""
    base = minimal_code(ctx, a)
    return [theta_multiple(base, t) for t in range(ctx.s + 1)]


@dataclass(frozen=True)
class MultiIndex:
    """A level ``t_a`` in ``0..s`` for every coset representative ``a``."""
    levels: Tuple[Tuple[int, int], ...]

    @classmethod
    def of(cls, ctx: CyclicContext, levels: Mapping[int, int]) -> 'MultiIndex':
        levels = dict(levels)
        reps = set(ctx.representatives)
        if set(levels) != reps:
            missing = sorted(reps - set(levels))
            extra = sorted(set(levels) - reps)
            raise exceptions.InvalidMultiIndex(
                "the multi-index must assign exactly the representatives {} (missing {}, unexpected {})".format(
                    sorted(reps), missing, extra))
        for a, t in levels.items():
            if not 0 <= t <= ctx.s:
                raise exceptions.InvalidMultiIndex("level {} of {} is not in 0..{}".format(t, a, ctx.s))
        return cls(tuple(sorted(levels.items())))

    @classmethod
    def constant(cls, ctx: CyclicContext, t: int) -> 'MultiIndex':
        return cls.of(ctx, {a: t for a in ctx.representatives})

    def __getitem__(self, a: int) -> int:
        return dict(self.levels)[a]

    def items(self):
        return iter(self.levels)

    def complement(self, s: int) -> 'MultiIndex':
        """``s - t``"""
        return MultiIndex(tuple((a, s - t) for a, t in self.levels))

    def text(self) -> str:
        return ' '.join('{}:{}'.format(a, t) for a, t in self.levels)


def all_multiindices(ctx: CyclicContext) -> List[MultiIndex]:
    reps = ctx.representatives
    return [MultiIndex(tuple(zip(reps, ts))) for ts in itertools.product(range(ctx.s + 1), repeat=len(reps))]


def code_from_multiindex(ctx: CyclicContext, index: MultiIndex) -> Code:
    """``⊕_a θ^{t_a} C_a``"""
    rows = []
    for a, t in index.items():
        rows.extend(theta_multiple(minimal_code(ctx, a), t).rows)
    return code_from_generators(ctx.base_tower, rows, ctx.ell)


def multiindex_of(ctx: CyclicContext, code: Code) -> MultiIndex:
    """The unique multi-index of a cyclic code over R: ``C ∩ C_a = θ^{t_a} C_a``."""
    if code.tower != ctx.base_tower or code.length != ctx.ell:
        raise exceptions.Mismatch("{} is not a code of length {} over {}".format(code, ctx.ell, ctx.ring.label))
    if not is_cyclic(code):
        raise exceptions.NotCyclic("{} is not closed under the cyclic shift".format(code))
    levels = {}
    for a in ctx.representatives:
        for t, sub in enumerate(subcode_chain(ctx, a)):
            if all(contains(code, row) for row in sub.rows):
                levels[a] = t
                break
    return MultiIndex.of(ctx, levels)


# evaluation codes

def vandermonde(ctx: CyclicContext, A: DefiningSet) -> Mat:
    """``W_A``: the rows ``(ξ^{ja})_{j < ℓ}`` for ``a`` in `A`."""
    A = ctx.defining_set(A)
    return Mat(ctx.tower.top, [[ctx.xi_power(j * a) for j in range(ctx.ell)] for a in A], ctx.ell)


def eval_code(ctx: CyclicContext, A, t: int = 0) -> Code:
    """``B_t(A) = θ^t B(A)``, spanned by the rows of ``W_A``."""
    ctx.check_level(t)
    A = ctx.defining_set(A)
    if t == ctx.s or not len(A):
        return zero_code(ctx.tower, ctx.ell)
    scale = ctx.tower.top.theta_powers[t]
    rows = [[scale * e for e in row] for row in vandermonde(ctx, A).rows]
    return code_from_generators(ctx.tower, rows, ctx.ell)


def generator_polynomial(ctx: CyclicContext, A) -> Polynomial:
    """``g = Π_{a ∉ A} (x - ξ^{-a})``; ``B(A)`` is the ideal generated by ``g``."""
    A = ctx.defining_set(A)
    if not len(A):
        raise exceptions.EmptyDefiningSet("B(∅) has no generator polynomial")
    g = Polynomial.constant(ctx.tower.top, 1)
    for a in A.complement():
        g = g * Polynomial.linear_factor(ctx.xi_power(-a))
    return g


def check_generator_polynomial(ctx: CyclicContext, A) -> bool:
    g = generator_polynomial(ctx, A)
    return ctx.ideal_code(g, ctx.tower) == eval_code(ctx, A)


def dual_by_defining_set(ctx: CyclicContext, A, t: int) -> Code:
    """``B_t(A)^⊥ = B(-Ā) ⊕ θ^{s-t} B(-A)``"""
    A = ctx.defining_set(A)
    return code_sum(eval_code(ctx, A.complement().opposite()), eval_code(ctx, A.opposite(), ctx.s - t))


def orthogonal(a: Code, b: Code) -> bool:
    return all(dot(u, v).is_zero() for u in a.rows for v in b.rows)


@dataclass(frozen=True)
class InvarianceRecord:
    defining_set: DefiningSet
    level: int
    galois_invariant: bool
    q_invariant: bool
    closure_is_q_closure: bool

    @property
    def consistent(self) -> bool:
        return self.galois_invariant == self.q_invariant and self.closure_is_q_closure


def invariance_and_closure(ctx: CyclicContext, A, t: int = 0) -> InvarianceRecord:
    A = ctx.defining_set(A)
    code = eval_code(ctx, A, t)
    record = InvarianceRecord(
        defining_set=A,
        level=t,
        galois_invariant=is_galois_invariant(code),
        q_invariant=A.is_q_invariant(ctx.q),
        closure_is_q_closure=closure(eval_code(ctx, A)) == eval_code(ctx, A.q_closure(ctx.q)),
    )
    if not record.consistent:
        raise exceptions.OracleFailure(
            "invariance of B_{}({}) disagrees with its defining set".format(t, A.text()))
    return record


def galois_invariant_code(ctx: CyclicContext, index: MultiIndex) -> Code:
    """``⊕_a B_{t_a}(Z_a)`` over S."""
    rows = []
    for a, t in index.items():
        rows.extend(eval_code(ctx, ctx.cosets.coset(a), t).rows)
    return code_from_generators(ctx.tower, rows, ctx.ell)


# restricted codes

def _require_q_invariant(ctx: CyclicContext, A: DefiningSet) -> None:
    if not A.is_q_invariant(ctx.q):
        raise exceptions.NotQInvariant("{} is not {}-invariant modulo {}".format(A.text(), ctx.q, ctx.ell))


def restricted_pipelines(ctx: CyclicContext, A, t: int) -> Dict[str, Code]:
    """
        ``Tr(B_{s-t}(A))^⊥`` three ways: as the dual of a trace code, as the
        restriction of a dual and as the restriction of
        ``B(-Ā) ⊕ θ^t B(-A)``.
    """
    A = ctx.defining_set(A)
    ctx.check_level(t)
    _require_q_invariant(ctx, A)
    scaled = eval_code(ctx, A, ctx.s - t)
    return {
        'trace-dual': dual(trace_code(scaled)),
        'restriction-of-dual': restriction(dual(scaled)),
        'defining-set': restriction(dual_by_defining_set(ctx, A, ctx.s - t)),
    }


def restricted_code(ctx: CyclicContext, A, t: int) -> Code:
    pipelines = restricted_pipelines(ctx, A, t)
    codes = list(pipelines.values())
    if any(c != codes[0] for c in codes[1:]):
        raise exceptions.OracleFailure("the restricted code pipelines disagree for {} at level {}".format(
            ctx.defining_set(A).text(), t))
    return codes[0]


@dataclass(frozen=True)
class RestrictedMultiIndex:
    index: MultiIndex
    matrix: Mat
    dual_code: Code
    code: Code
    expected_rank: int


def restricted_multiindex(ctx: CyclicContext, index: MultiIndex) -> RestrictedMultiIndex:
    """
        ``Res(⊕_a B_{s-t_a}(-Z_a))`` together with the stacked generator
        matrix of ``θ^{s-t_a} W_{-Z_a}``. Its rank is the total size of the
        cosets with ``t_a > 0`` and it coincides with the multi-index code
        of ``s - t``.
    """
    top = ctx.tower.top
    rows = []
    for a, t in index.items():
        opposite = ctx.defining_set(ctx.cosets.coset(a)).opposite()
        scale = top.theta_powers[ctx.s - t] if t > 0 else top.zero
        rows.extend([scale * e for e in row] for row in vandermonde(ctx, opposite).rows)
    matrix = Mat(top, rows, ctx.ell)
    dual_code = code_from_generators(ctx.tower, matrix)
    code = restriction(dual_code)
    expected = sum(ctx.cosets.size(a) for a, t in index.items() if t > 0)
    if code.rank != expected or code != code_from_multiindex(ctx, index.complement(ctx.s)):
        raise exceptions.OracleFailure("the restricted code of {} is inconsistent".format(index.text()))
    return RestrictedMultiIndex(index, matrix, dual_code, code, expected)


# minimum weight and the BCH bound

def weight(word: Sequence[Element]) -> int:
    return sum(1 for e in word if not e.is_zero())


def min_weight(code: Code, env=default_env) -> int:
    if code.is_zero():
        raise exceptions.ZeroCode("the zero code has no minimum weight")
    words = code.codewords(env, env.weight_guard_bits)
    return min(weight(w) for w in words if weight(w))


def bch_code(ctx: CyclicContext, A, t: int) -> Code:
    """
        ``Res(θ^{s-t} B(-Ā))``: orthogonal to ``B(A)``, hence of weight above
        any interval in `A`.

        For ``t < s`` this differs from :func:`restricted_code`, which is
        ``Tr(B_{s-t}(A))^⊥``; at ``t = 0`` that code is all of ``R^ℓ`` and has
        words of weight one.
    """
    A = ctx.defining_set(A)
    ctx.check_level(t)
    return restriction(eval_code(ctx, A.complement().opposite(), ctx.s - t))


@dataclass(frozen=True)
class BchRecord:
    defining_set: DefiningSet
    level: int
    interval: Tuple[int, int, int]
    q_invariant: bool
    code: Code
    min_weight: Optional[int]

    @property
    def designed_distance(self) -> int:
        return self.interval[2] + 1

    @property
    def holds(self) -> bool:
        return self.min_weight is None or self.min_weight >= self.designed_distance


def bch_check(ctx: CyclicContext, A, t: int, env=default_env) -> BchRecord:
    A = ctx.defining_set(A)
    interval = A.longest_interval()
    if interval is None:
        raise exceptions.NotAnInterval("{} contains no interval".format(A.text()))
    code = bch_code(ctx, A, t)
    mw = None if code.is_zero() else min_weight(code, env)
    record = BchRecord(A, t, interval, A.is_q_invariant(ctx.q), code, mw)
    if not record.holds:
        logger.error("BCH bound fails for %s at level %d: weight %s < %d",
                     A.text(), t, mw, record.designed_distance)
    return record


# exhaustive enumeration

def enumerate_cyclic_codes(ring: RingSpec, ell: int, env=default_env) -> FrozenSet[Code]:
    """
        All cyclic codes of length ℓ over `ring`, found without the
        idempotents: the principal ideals of ``R[x]/(x^ℓ - 1)`` closed under
        sums.
    """
    env.check_size(ring.size ** ell, 'the words of length {} over {}'.format(ell, ring.label), env.span_check_bits)
    tower = Tower.trivial(ring)
    units = [u for u in ring.elements() if u.is_unit()]
    seen = set()
    principal = set()
    for word in itertools.product(ring.elements(), repeat=ell):
        key = tuple(e.key for e in word)
        if key in seen:
            continue
        for k in range(ell):
            shifted = shift(word, k)
            for u in units:
                seen.add(tuple((u * e).key for e in shifted))
        principal.add(code_from_generators(tower, [shift(word, k) for k in range(ell)], ell))

    found = set(principal)
    frontier = list(found)
    while frontier:
        nxt = []
        for a in frontier:
            for b in principal:
                c = code_sum(a, b)
                if c not in found:
                    found.add(c)
                    nxt.append(c)
        frontier = nxt
    logger.info("Found %d cyclic codes of length %d over %s", len(found), ell, ring.label)
    return frozenset(found)
