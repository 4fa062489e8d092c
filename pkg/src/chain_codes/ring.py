"""
    chain_codes.ring
    ~~~~~~~~~~~~~~~~

    Exact arithmetic in finite chain rings.

    Two families are realized: unramified Galois rings ``Z_{p^s}[x]/(f)``
    whose maximal ideal is generated by ``θ = p`` and equal-characteristic
    rings ``F_{p^n}[u]/(u^s)`` with ``θ = u``. A ring may also be the top of
    an extension ``R[y]/(h)`` (see :mod:`chain_codes.extension`); its
    elements are then tuples of base ring coefficients.

    Elements are stored in coefficient form. The θ-adic coordinates
    ``a = γ_0 + γ_1 θ + ... + γ_{s-1} θ^{s-1}`` with Teichmüller digits
    ``γ_t`` are a derived view.
"""
import enum
import functools
import itertools
import logging
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence, Tuple

from sympy import isprime
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_irreducible_p

from . import defaults
from . import exceptions


logger = logging.getLogger(__name__)


class Family(enum.Enum):
    UNRAMIFIED = 'unramified'
    EQUAL_CHARACTERISTIC = 'equal-characteristic'


class _NegativeInfinity:
    """The degree of zero. Compares below every integer, supports no arithmetic."""
    __slots__ = ()

    def __repr__(self):
        return '-inf'

    def __lt__(self, other):
        return not isinstance(other, _NegativeInfinity)

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return isinstance(other, _NegativeInfinity)

    def __eq__(self, other):
        return isinstance(other, _NegativeInfinity)

    def __hash__(self):
        return hash('-inf')


NEG_INFINITY = _NegativeInfinity()


class _IntegersMod:
    """Arithmetic of ``Z/N`` on plain ints."""

    def __init__(self, modulus: int) -> None:
        self.modulus = modulus
        self.zero = 0
        self.one = 1 % modulus

    def add(self, a, b):
        return (a + b) % self.modulus

    def sub(self, a, b):
        return (a - b) % self.modulus

    def neg(self, a):
        return (-a) % self.modulus

    def mul(self, a, b):
        return (a * b) % self.modulus

    def from_int(self, k):
        return k % self.modulus


class _Quotient:
    """Arithmetic of ``C[y]/(h)`` for a monic ``h`` over the coefficient arithmetic ``C``."""

    def __init__(self, coef, modulus: Sequence) -> None:
        self.coef = coef
        self.degree = len(modulus) - 1
        self.tail = tuple(modulus[:-1])
        self.zero = (coef.zero,) * self.degree
        self.one = (coef.one,) + (coef.zero,) * (self.degree - 1)

    def add(self, a, b):
        add = self.coef.add
        return tuple(add(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        sub = self.coef.sub
        return tuple(sub(x, y) for x, y in zip(a, b))

    def neg(self, a):
        neg = self.coef.neg
        return tuple(neg(x) for x in a)

    def mul(self, a, b):
        coef = self.coef
        zero = coef.zero
        d = self.degree
        prod = [zero] * (2 * d - 1)
        for i, x in enumerate(a):
            if x == zero:
                continue
            for j, y in enumerate(b):
                if y != zero:
                    prod[i + j] = coef.add(prod[i + j], coef.mul(x, y))
        # y^d = -sum(tail[i] y^i)
        for k in range(2 * d - 2, d - 1, -1):
            c = prod[k]
            if c == zero:
                continue
            for i, h in enumerate(self.tail):
                if h != zero:
                    prod[k - d + i] = coef.sub(prod[k - d + i], coef.mul(c, h))
        return tuple(prod[:d])

    def from_int(self, k):
        return (self.coef.from_int(k),) + (self.coef.zero,) * (self.degree - 1)


def _int_valuation(x: int, p: int, s: int) -> int:
    if x == 0:
        return s
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


@dataclass(frozen=True)
class RingSpec:
    """
        A finite chain ring.

        For the two base families ``modulus`` is the integer coefficient
        list (constant term first) of the degree-``n`` defining polynomial.
        When ``base`` is set the ring is ``base[y]/(modulus)`` and the
        modulus coefficients are base ring coefficient tuples; ``n`` is then
        the total residue degree over ``F_p``.
    """
    family: Family
    p: int
    n: int
    s: int
    modulus: tuple
    base: Optional['RingSpec'] = field(default=None, repr=False)

    @property
    def q(self) -> int:
        return self.p ** self.n

    @property
    def size(self) -> int:
        return self.q ** self.s

    @property
    def unit_count(self) -> int:
        return self.q ** (self.s - 1) * (self.q - 1)

    @property
    def relative_degree(self) -> int:
        """Degree over ``base`` (1 for the base families)."""
        if self.base is None:
            return 1
        return len(self.modulus) - 1

    @property
    def label(self) -> str:
        if self.base is not None:
            return '{}[y]/(h{})'.format(self.base.label, self.relative_degree)
        if self.s == 1:
            return 'F{}'.format(self.q)
        if self.family is Family.UNRAMIFIED:
            if self.n == 1:
                return 'Z{}'.format(self.p ** self.s)
            return 'GR({},{})'.format(self.p ** self.s, self.n)
        return 'F{}[u]/(u^{})'.format(self.q, self.s)

    def __str__(self):
        return self.label

    @functools.cached_property
    def arith(self):
        if self.base is not None:
            return _Quotient(self.base.arith, self.modulus)
        if self.family is Family.UNRAMIFIED:
            return _Quotient(_IntegersMod(self.p ** self.s), self.modulus)
        residue = _Quotient(_IntegersMod(self.p), self.modulus)
        return _Quotient(residue, (residue.zero,) * self.s + (residue.one,))

    @functools.cached_property
    def _products(self) -> Optional[dict]:
        return {} if self.size <= 2 ** defaults.PRODUCT_TABLE_BITS else None

    @functools.cached_property
    def _memo(self) -> Optional[dict]:
        """Inverses, θ-adic digits and truncations keyed by ``(kind, coeffs)``."""
        return {} if self.size <= 2 ** defaults.ELEMENT_MEMO_BITS else None

    def multiply(self, a, b):
        """The product of two coefficient forms."""
        table = self._products
        if table is None:
            return self.arith.mul(a, b)
        key = (a, b)
        ret = table.get(key)
        if ret is None:
            ret = table[key] = self.arith.mul(a, b)
        return ret

    @functools.cached_property
    def zero(self) -> 'Element':
        return Element(self, self.arith.zero)

    @functools.cached_property
    def one(self) -> 'Element':
        return Element(self, self.arith.one)

    @functools.cached_property
    def theta(self) -> 'Element':
        """The generator of the maximal ideal."""
        if self.base is not None:
            return self.embed_base(self.base.theta)
        if self.family is Family.UNRAMIFIED:
            return self.from_int(self.p)
        if self.s == 1:
            return self.zero
        fq = self.arith.coef
        return Element(self, (fq.zero, fq.one) + (fq.zero,) * (self.s - 2))

    @functools.cached_property
    def residue(self) -> 'RingSpec':
        """The residue field ``R/θR`` as a chain ring with ``s = 1``."""
        if self.s == 1:
            return self
        if self.base is not None:
            modulus = tuple(self.base._project(h) for h in self.modulus)
            return RingSpec(self.family, self.p, self.n, 1, modulus, base=self.base.residue)
        if self.family is Family.UNRAMIFIED:
            return RingSpec(self.family, self.p, self.n, 1, tuple(c % self.p for c in self.modulus))
        return RingSpec(self.family, self.p, self.n, 1, self.modulus)

    @functools.cached_property
    def teichmuller(self) -> Tuple['Element', ...]:
        """The Teichmüller set Γ(R), ordered like the residue field."""
        return tuple(self.lift(r).teichmuller() for r in self.residue.elements())

    @functools.cached_property
    def theta_powers(self) -> Tuple['Element', ...]:
        ret = [self.one]
        for _ in range(self.s):
            ret.append(ret[-1] * self.theta)
        return tuple(ret)

    # construction of elements

    def element(self, coeffs) -> 'Element':
        return Element(self, self._canonical(coeffs))

    def from_int(self, k: int) -> 'Element':
        return Element(self, self.arith.from_int(k))

    def from_key(self, ints: Sequence[int]) -> 'Element':
        """Builds an element from its flattened integer coefficients."""
        moduli = self._slot_moduli
        if len(ints) != len(moduli):
            raise exceptions.MalformedElement(
                "{} expects {} coefficients, got {}".format(self.label, len(moduli), len(ints)))
        return Element(self, self._unflatten(tuple(x % m for x, m in zip(ints, moduli))))

    def coerce(self, value) -> 'Element':
        if isinstance(value, Element):
            if value.ring is not self and value.ring != self:
                raise exceptions.RingMismatch("{} is not an element of {}".format(value, self.label))
            return value
        if isinstance(value, int):
            return self.from_int(value)
        return self.element(value)

    def lift(self, r: 'Element') -> 'Element':
        """A (non canonical) preimage of the residue element `r`."""
        if r.ring != self.residue:
            raise exceptions.RingMismatch("{} is not a residue of {}".format(r, self.label))
        return Element(self, self._lift(r.coeffs))

    def embed_base(self, a: 'Element') -> 'Element':
        """The image of a base ring element under ``R -> R[y]/(h)``."""
        if a.ring != self.base:
            raise exceptions.RingMismatch("{} is not in the base of {}".format(a, self.label))
        return Element(self, (a.coeffs,) + (self.base.arith.zero,) * (self.relative_degree - 1))

    def elements(self) -> Iterator['Element']:
        """All elements in canonical order (lexicographic on the flattened coefficients)."""
        for ints in itertools.product(*(range(m) for m in self._slot_moduli)):
            yield Element(self, self._unflatten(ints))

    # coefficient level helpers, recursive over towers

    @functools.cached_property
    def _slot_moduli(self) -> Tuple[int, ...]:
        if self.base is not None:
            return self.base._slot_moduli * self.relative_degree
        if self.family is Family.UNRAMIFIED:
            return (self.p ** self.s,) * self.n
        return (self.p,) * (self.n * self.s)

    def _flatten(self, c) -> Tuple[int, ...]:
        if self.base is not None:
            return tuple(itertools.chain.from_iterable(self.base._flatten(x) for x in c))
        if self.family is Family.UNRAMIFIED:
            return c
        return tuple(itertools.chain.from_iterable(c))

    def _unflatten(self, ints):
        if self.base is not None:
            w = len(self.base._slot_moduli)
            return tuple(self.base._unflatten(ints[i * w:(i + 1) * w]) for i in range(self.relative_degree))
        if self.family is Family.UNRAMIFIED:
            return tuple(ints)
        n = self.n
        return tuple(tuple(ints[i * n:(i + 1) * n]) for i in range(self.s))

    def _canonical(self, c):
        try:
            c = tuple(c)
        except TypeError:
            raise exceptions.MalformedElement("{!r} is not a coefficient sequence of {}".format(c, self.label))
        if self.base is not None:
            if len(c) != self.relative_degree:
                raise exceptions.MalformedElement(
                    "{} expects {} coefficients, got {}".format(self.label, self.relative_degree, len(c)))
            return tuple(self.base._canonical(x) for x in c)
        if self.family is Family.UNRAMIFIED:
            if len(c) != self.n or not all(isinstance(x, int) for x in c):
                raise exceptions.MalformedElement(
                    "{} expects {} integers, got {!r}".format(self.label, self.n, c))
            return tuple(x % self.p ** self.s for x in c)
        if len(c) != self.s:
            raise exceptions.MalformedElement(
                "{} expects {} coefficients of u, got {}".format(self.label, self.s, len(c)))
        ret = []
        for x in c:
            x = tuple(x) if not isinstance(x, int) else (x,)
            if len(x) != self.n or not all(isinstance(y, int) for y in x):
                raise exceptions.MalformedElement(
                    "F{} coefficients need {} integers, got {!r}".format(self.q, self.n, x))
            ret.append(tuple(y % self.p for y in x))
        return tuple(ret)

    def _valuation(self, c) -> int:
        if self.base is not None:
            return min(self.base._valuation(x) for x in c)
        if self.family is Family.UNRAMIFIED:
            return min(_int_valuation(x, self.p, self.s) for x in c)
        for t, x in enumerate(c):
            if any(x):
                return t
        return self.s

    def _divide_theta(self, c, k: int):
        if self.base is not None:
            return tuple(self.base._divide_theta(x, k) for x in c)
        if self.family is Family.UNRAMIFIED:
            d = self.p ** k
            return tuple(x // d for x in c)
        return c[k:] + (self.arith.coef.zero,) * k

    def _project(self, c):
        if self.base is not None:
            return tuple(self.base._project(x) for x in c)
        if self.family is Family.UNRAMIFIED:
            return tuple(x % self.p for x in c)
        return (c[0],)

    def _lift(self, r):
        if self.base is not None:
            return tuple(self.base._lift(x) for x in r)
        if self.family is Family.UNRAMIFIED:
            return tuple(r)
        return (r[0],) + (self.arith.coef.zero,) * (self.s - 1)


class Element:
    """An immutable element of a :class:`RingSpec`."""
    __slots__ = ('ring', 'coeffs')

    def __init__(self, ring: RingSpec, coeffs) -> None:
        self.ring = ring
        self.coeffs = coeffs

    def _other(self, other) -> 'Element':
        if isinstance(other, Element):
            if other.ring is not self.ring and other.ring != self.ring:
                raise exceptions.RingMismatch(
                    "cannot combine elements of {} and {}".format(self.ring.label, other.ring.label))
            return other
        if isinstance(other, int):
            return self.ring.from_int(other)
        return NotImplemented

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return Element(self.ring, self.ring.arith.add(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return Element(self.ring, self.ring.arith.sub(self.coeffs, other.coeffs))

    def __rsub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return Element(self.ring, self.ring.arith.sub(other.coeffs, self.coeffs))

    def __neg__(self):
        return Element(self.ring, self.ring.arith.neg(self.coeffs))

    def __mul__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return Element(self.ring, self.ring.multiply(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        ret = self.ring.one
        base = self
        while k:
            if k & 1:
                ret = ret * base
            k >>= 1
            if k:
                base = base * base
        return ret

    def __eq__(self, other):
        if isinstance(other, int):
            return self.coeffs == self.ring.arith.from_int(other)
        if not isinstance(other, Element):
            return NotImplemented
        return self.coeffs == other.coeffs and (self.ring is other.ring or self.ring == other.ring)

    def __ne__(self, other):
        ret = self.__eq__(other)
        if ret is NotImplemented:
            return ret
        return not ret

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return 'Element({}, {})'.format(self.ring.label, self.text())

    def __str__(self):
        return self.text()

    def text(self) -> str:
        """Text encoding: a plain integer for ``Z_{p^s}``, comma separated coefficients otherwise."""
        ints = self.key
        if self.ring.base is None and self.ring.family is Family.UNRAMIFIED and self.ring.n == 1:
            return str(ints[0])
        return ','.join(str(x) for x in ints)

    @property
    def key(self) -> Tuple[int, ...]:
        """Flattened integer coefficients; the canonical element order compares these."""
        return self.ring._flatten(self.coeffs)

    def is_zero(self) -> bool:
        return self.coeffs == self.ring.arith.zero

    def is_unit(self) -> bool:
        return self.valuation() == 0

    def valuation(self) -> int:
        return self.ring._valuation(self.coeffs)

    def degree(self):
        digits = self.theta_adic()
        for t in range(len(digits) - 1, -1, -1):
            if not digits[t].is_zero():
                return t
        return NEG_INFINITY

    def _memoized(self, kind, compute):
        memo = self.ring._memo
        if memo is None:
            return compute()
        key = (kind, self.coeffs)
        ret = memo.get(key)
        if ret is None:
            ret = memo[key] = compute()
        return ret

    def inverse(self) -> 'Element':
        if not self.is_unit():
            raise exceptions.NonUnit("{} is not a unit of {}".format(self, self.ring.label))
        return self._memoized('inverse', lambda: self ** (self.ring.unit_count - 1))

    def divide_theta(self, k: int) -> 'Element':
        """The canonical quotient ``a / θ^k``; requires ``ϑ(a) >= k``."""
        if k == 0:
            return self
        if self.valuation() < k:
            raise exceptions.NotDivisible("{} is not divisible by θ^{}".format(self, k))
        return Element(self.ring, self.ring._divide_theta(self.coeffs, k))

    def residue(self) -> 'Element':
        """The projection π onto the residue field."""
        return Element(self.ring.residue, self.ring._project(self.coeffs))

    def teichmuller(self) -> 'Element':
        """The Teichmüller representative of the class of `self` modulo θ."""
        if not self.is_unit():
            return self.ring.zero
        ring = self.ring
        return self ** (ring.q ** (ring.s - 1))

    def theta_adic(self) -> Tuple['Element', ...]:
        return self._memoized('digits', self._theta_adic)

    def _theta_adic(self) -> Tuple['Element', ...]:
        ring = self.ring
        digits = []
        rest = self
        for t in range(ring.s):
            g = rest.teichmuller()
            digits.append(g)
            if t < ring.s - 1:
                rest = (rest - g).divide_theta(1)
        return tuple(digits)

    def truncate(self, k: int) -> 'Element':
        """``Σ_{t<k} γ_t θ^t``, the canonical representative modulo θ^k."""
        if k >= self.ring.s:
            return self
        return self._memoized(('truncate', k), lambda: self._truncate(k))

    def _truncate(self, k: int) -> 'Element':
        ret = self.ring.zero
        for t, g in enumerate(self.theta_adic()[:k]):
            ret = ret + g * self.ring.theta_powers[t]
        return ret


# Module level operations

def _smallest_irreducible_mod_p(p: int, n: int) -> Tuple[int, ...]:
    # monic candidates ordered lexicographically from the highest coefficient down
    for tail in itertools.product(range(p), repeat=n):
        high_first = [1] + list(tail)
        if gf_irreducible_p(high_first, p, ZZ):
            return tuple(reversed(high_first))
    raise exceptions.InternalError("no irreducible polynomial of degree {} over F{}".format(n, p))


@functools.lru_cache(maxsize=None)
def _make_ring(family: Family, p: int, n: int, s: int, modulus: Optional[Tuple[int, ...]]) -> RingSpec:
    if modulus is None:
        residue_mod = _smallest_irreducible_mod_p(p, n)
        if family is Family.UNRAMIFIED and n > 1 and s > 1:
            from . import poly
            integers = _make_ring(family, p, 1, s, None)
            lifted = poly.hensel_lift_poly(integers, poly.Polynomial.from_ints(integers.residue, residue_mod))
            modulus = tuple(c.coeffs[0] for c in lifted.coeffs)
        else:
            modulus = residue_mod
    ring = RingSpec(family, p, n, s, modulus)
    logger.debug("Constructed %s with modulus %s", ring.label, modulus)
    return ring


def make_ring(family, p: int, n: int, s: int, modulus: Optional[Sequence[int]] = None) -> RingSpec:
    """
        Constructs a chain ring of the given family.

        Without a `modulus` the lexicographically smallest monic irreducible
        polynomial of degree `n` over ``F_p`` is used; for the unramified
        family it is Hensel lifted so that ``x`` is a Teichmüller element.
    """
    family = Family(family)
    if not isinstance(p, int) or not isprime(p):
        raise exceptions.NotPrime("{} is not a prime".format(p), p=p)
    if n < 1 or s < 1:
        raise exceptions.InvalidRingParameters("n and s must be positive (got n={}, s={})".format(n, s))
    if modulus is not None:
        modulus = tuple(int(c) for c in modulus)
        char = p ** s if family is Family.UNRAMIFIED else p
        modulus = tuple(c % char for c in modulus)
        if len(modulus) != n + 1 or modulus[-1] != 1 % char:
            raise exceptions.DegreeMismatch("modulus must be monic of degree {}".format(n), modulus=modulus)
        residue = [c % p for c in reversed(modulus)]
        if not gf_irreducible_p(residue, p, ZZ):
            raise exceptions.ReducibleModulus("modulus is reducible modulo {}".format(p), modulus=modulus)
    return _make_ring(family, p, n, s, modulus)


def add(a: Element, b: Element) -> Element:
    return a + b


def mul(a: Element, b: Element) -> Element:
    return a * b


def neg(a: Element) -> Element:
    return -a


def inv(a: Element) -> Element:
    return a.inverse()


def teichmuller_set(ring: RingSpec) -> Tuple[Element, ...]:
    return ring.teichmuller


def is_teichmuller(a: Element) -> bool:
    return a ** a.ring.q == a


def theta_adic(a: Element) -> Tuple[Element, ...]:
    return a.theta_adic()


def from_theta_adic(ring: RingSpec, coords: Sequence[Element]) -> Element:
    if len(coords) != ring.s:
        raise exceptions.MalformedElement("{} needs {} θ-adic coordinates".format(ring.label, ring.s))
    ret = ring.zero
    for t, g in enumerate(coords):
        g = ring.coerce(g)
        if not is_teichmuller(g):
            raise exceptions.NotTeichmuller("{} is not a Teichmüller element of {}".format(g, ring.label))
        ret = ret + g * ring.theta_powers[t]
    return ret


def valuation(a: Element) -> int:
    return a.valuation()


def degree(a: Element):
    return a.degree()


def residue_project(a: Element) -> Element:
    return a.residue()
