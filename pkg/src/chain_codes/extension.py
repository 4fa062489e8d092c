"""
    chain_codes.extension
    ~~~~~~~~~~~~~~~~~~~~~

    Unramified Galois extensions ``S = R[y]/(h)`` of a chain ring, their
    Frobenius generator σ, the trace map, trace-dual bases, Teichmüller
    lifts, primitive roots of unity and the correspondence between
    subgroups ``<σ^d>`` and intermediate rings.
"""
import functools
import logging
from dataclasses import dataclass
from math import gcd
from typing import List, Sequence, Tuple

from sympy import divisors, primefactors

from . import exceptions
from .environment import default_env
from .linalg import Mat, mat_inverse
from .poly import first_irreducible, hensel_lift_poly  # noqa: F401
from .ring import Element, RingSpec


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Subgroup:
    """The subgroup ``<σ^d>`` of the cyclic group of order `m`."""
    m: int
    d: int

    def __post_init__(self):
        if self.d < 1 or self.m % self.d:
            raise exceptions.InvalidSubgroup("{} does not divide {}".format(self.d, self.m), m=self.m, d=self.d)

    @property
    def order(self) -> int:
        return self.m // self.d

    def powers(self) -> Tuple[int, ...]:
        """The exponents ``j`` with ``σ^j`` in the subgroup."""
        return tuple(range(0, self.m, self.d))


class Tower:
    """
        The extension ``S|R`` of degree `m`.

        `top` is either ``base[y]/(h)`` or, for the trivial extension, the
        base ring itself. The free basis is ``1, y, ..., y^{m-1}``.
    """

    def __init__(self, base: RingSpec, top: RingSpec) -> None:
        self.base = base
        self.top = top
        self.m = 1 if top == base else top.relative_degree

    @classmethod
    def trivial(cls, ring: RingSpec) -> 'Tower':
        return cls(ring, ring)

    def __eq__(self, other):
        if not isinstance(other, Tower):
            return NotImplemented
        return self.base == other.base and self.top == other.top

    def __hash__(self):
        return hash((self.base, self.top))

    def __repr__(self):
        return 'Tower({} | {})'.format(self.top.label, self.base.label)

    @property
    def label(self) -> str:
        if self.is_trivial:
            return self.base.label
        return '{}|{}'.format(self.top.label, self.base.label)

    @property
    def is_trivial(self) -> bool:
        return self.m == 1

    @property
    def q(self) -> int:
        """The size of the residue field of the base ring."""
        return self.base.q

    @property
    def group(self) -> Subgroup:
        return Subgroup(self.m, 1)

    @property
    def modulus(self):
        """The defining polynomial ``h`` as base ring elements, constant term first."""
        if self.is_trivial:
            return (self.base.zero, self.base.one)
        return tuple(Element(self.base, c) for c in self.top.modulus)

    @functools.cached_property
    def basis(self) -> Tuple[Element, ...]:
        if self.is_trivial:
            return (self.top.one,)
        y = self.top.element([self.base.arith.zero, self.base.arith.one] + [self.base.arith.zero] * (self.m - 2))
        ret = [self.top.one]
        for _ in range(self.m - 1):
            ret.append(ret[-1] * y)
        return tuple(ret)

    # R <-> S

    def embed(self, a: Element) -> Element:
        if self.is_trivial:
            return self.base.coerce(a)
        if isinstance(a, int):
            return self.top.from_int(a)
        return self.top.embed_base(a)

    def in_base(self, b: Element) -> bool:
        b = self.top.coerce(b)
        if self.is_trivial:
            return True
        zero = self.base.arith.zero
        return all(c == zero for c in b.coeffs[1:])

    def to_base(self, b: Element) -> Element:
        if not self.in_base(b):
            raise exceptions.NotInBaseRing("{} does not lie in {}".format(b, self.base.label))
        if self.is_trivial:
            return b
        return Element(self.base, b.coeffs[0])

    # the Galois group

    def frobenius_definitional(self, a: Element) -> Element:
        """``σ(a) = Σ γ_t(a)^q θ^t`` on the θ-adic coordinates of `a`."""
        a = self.top.coerce(a)
        ret = self.top.zero
        for t, g in enumerate(a.theta_adic()):
            ret = ret + g ** self.q * self.top.theta_powers[t]
        return ret

    @functools.cached_property
    def _image_powers(self) -> List[Tuple[Element, ...]]:
        # _image_powers[j][i] = σ^j(y)^i
        ret = [self.basis]
        if self.is_trivial:
            return ret
        image = self.basis[1]
        for _ in range(1, self.m):
            image = self.frobenius_definitional(image)
            powers = [self.top.one]
            for _ in range(self.m - 1):
                powers.append(powers[-1] * image)
            ret.append(tuple(powers))
        return ret

    def frobenius(self, a: Element, power: int = 1) -> Element:
        """``σ^power(a)``, evaluating `a` as a polynomial in ``σ^power(y)``."""
        a = self.top.coerce(a)
        power %= self.m
        if power == 0:
            return a
        images = self._image_powers[power]
        ret = self.top.zero
        for c, img in zip(a.coeffs, images):
            ret = ret + self.top.embed_base(Element(self.base, c)) * img
        return ret

    def conjugates(self, a: Element) -> Tuple[Element, ...]:
        return tuple(self.frobenius(a, j) for j in range(self.m))

    def period(self, a: Element) -> int:
        """The least ``d >= 1`` with ``σ^d(a) = a``; always a divisor of `m`."""
        for d in divisors(self.m):
            if self.frobenius(a, d) == a:
                return d
        return self.m

    def trace(self, a: Element) -> Element:
        a = self.top.coerce(a)
        total = self.top.zero
        for c in self.conjugates(a):
            total = total + c
        return self.to_base(total)

    @functools.cached_property
    def gram(self) -> Mat:
        rows = [[self.trace(a * b) for b in self.basis] for a in self.basis]
        return Mat(self.base, rows, self.m)

    @functools.cached_property
    def dual_basis(self) -> Tuple[Element, ...]:
        try:
            inverse = mat_inverse(self.gram)
        except exceptions.NonUnitDeterminant:
            raise exceptions.SingularGram("the trace form of {} is degenerate".format(self.label))
        ret = []
        for j in range(self.m):
            acc = self.top.zero
            for i, alpha in enumerate(self.basis):
                acc = acc + self.embed(inverse.rows[j][i]) * alpha
            ret.append(acc)
        return tuple(ret)

    def coordinates(self, a: Element) -> Tuple[Element, ...]:
        """The base ring coordinates ``Tr(α*_j a)`` of `a` in the free basis."""
        return tuple(self.trace(d * a) for d in self.dual_basis)

    def is_biorthogonal(self) -> bool:
        """``Σ_t σ^i(α_t) σ^j(α*_t) = δ_ij`` for all ``i, j < m``."""
        for i in range(self.m):
            for j in range(self.m):
                acc = self.top.zero
                for a, d in zip(self.basis, self.dual_basis):
                    acc = acc + self.frobenius(a, i) * self.frobenius(d, j)
                if acc != (1 if i == j else 0):
                    return False
        return True

    # roots of unity

    def teichmuller_lift(self, r: Element) -> Element:
        x = self.top.lift(r)
        size = self.top.q
        for _ in range(self.top.s + 1):
            nxt = x ** size
            if nxt == x:
                return x
            x = nxt
        raise exceptions.InternalError("the Teichmüller iteration for {} did not settle".format(r))

    @functools.cached_property
    def residue_generator(self) -> Element:
        """The smallest generator of the multiplicative group of the residue field of `top`."""
        field = self.top.residue
        order = field.q - 1
        primes = primefactors(order)
        for g in field.elements():
            if g.is_zero():
                continue
            if all(g ** (order // r) != 1 for r in primes):
                return g
        raise exceptions.InternalError("{} has no multiplicative generator".format(field.label))

    def primitive_root(self, ell: int) -> Element:
        order = self.top.q - 1
        if ell < 1 or gcd(ell, self.q) != 1:
            raise exceptions.NotCoprime("gcd({}, {}) != 1".format(ell, self.q), ell=ell, q=self.q)
        if order % ell:
            raise exceptions.OrderUnavailable(
                "{} does not divide {}".format(ell, order), ell=ell, order=order)
        if ell == 1:
            return self.top.one
        return self.teichmuller_lift(self.residue_generator ** (order // ell))

    # intermediate rings

    def fixed_ring(self, subgroup: Subgroup) -> 'IntermediateRing':
        if subgroup.m != self.m:
            raise exceptions.InvalidSubgroup("{} is not a subgroup of a group of order {}".format(subgroup, self.m))
        return IntermediateRing(self, subgroup)

    def stabilizer(self, intermediate: 'IntermediateRing') -> Subgroup:
        return self.stabilizer_of(intermediate.basis)

    def stabilizer_of(self, elements: Sequence[Element]) -> Subgroup:
        """The largest subgroup fixing every one of `elements`."""
        for d in divisors(self.m):
            if all(self.frobenius(a, d) == a for a in elements):
                return Subgroup(self.m, d)
        return Subgroup(self.m, self.m)

    def fixed_elements(self, d: int, env=default_env) -> List[Element]:
        """All elements of `top` fixed by ``σ^d``, by enumeration."""
        env.check_size(self.top.size, self.top.label)
        return [a for a in self.top.elements() if self.frobenius(a, d) == a]


@dataclass(frozen=True)
class IntermediateRing:
    """
        The subring of `tower.top` fixed by `subgroup`; the unramified
        extension of the base of degree ``subgroup.d``.
    """
    tower: Tower
    subgroup: Subgroup

    @property
    def degree(self) -> int:
        return self.subgroup.d

    @property
    def size(self) -> int:
        return self.tower.base.size ** self.degree

    @functools.cached_property
    def generator(self) -> Element:
        tower = self.tower
        order = tower.top.q - 1
        sub_order = tower.q ** self.degree - 1
        return tower.teichmuller_lift(tower.residue_generator ** (order // sub_order))

    @functools.cached_property
    def basis(self) -> Tuple[Element, ...]:
        ret = [self.tower.top.one]
        for _ in range(self.degree - 1):
            ret.append(ret[-1] * self.generator)
        return tuple(ret)

    def contains(self, a: Element) -> bool:
        return self.tower.frobenius(a, self.degree) == a

    def elements(self, env=default_env) -> List[Element]:
        """The elements ``Σ c_i β^i`` with ``c_i`` in the base ring, in canonical order."""
        env.check_size(self.size, 'the fixed ring of {}'.format(self.subgroup))
        ret = {self.tower.top.zero}
        for b in self.basis:
            ret = {x + self.tower.embed(c) * b for x in ret for c in self.tower.base.elements()}
        return sorted(ret, key=lambda a: a.key)


@functools.lru_cache(maxsize=None)
def _extend(base: RingSpec, m: int) -> Tower:
    if m == 1:
        return Tower.trivial(base)
    h = hensel_lift_poly(base, first_irreducible(base.residue, m))
    top = RingSpec(base.family, base.p, base.n * m, base.s, tuple(c.coeffs for c in h.coeffs), base=base)
    logger.info("Built the degree %d extension of %s", m, base.label)
    return Tower(base, top)


def extend(base: RingSpec, m: int, env=default_env) -> Tower:
    if m < 1:
        raise exceptions.InvalidRingParameters("the extension degree must be positive (got {})".format(m))
    env.check_size(base.size ** m, 'the degree {} extension of {}'.format(m, base.label))
    return _extend(base, m)


def frobenius(tower: Tower, a: Element, power: int = 1) -> Element:
    return tower.frobenius(a, power)


def trace(tower: Tower, a: Element) -> Element:
    return tower.trace(a)


def gram_matrix(tower: Tower) -> Mat:
    return tower.gram


def dual_basis(tower: Tower) -> Tuple[Element, ...]:
    return tower.dual_basis


def teichmuller_lift(tower: Tower, r: Element) -> Element:
    return tower.teichmuller_lift(r)


def primitive_root(tower: Tower, ell: int) -> Element:
    return tower.primitive_root(ell)


def fixed_ring(tower: Tower, subgroup: Subgroup) -> IntermediateRing:
    return tower.fixed_ring(subgroup)


def stabilizer(tower: Tower, intermediate: IntermediateRing) -> Subgroup:
    return tower.stabilizer(intermediate)
