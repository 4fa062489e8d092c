"""
    chain_codes.poly
    ~~~~~~~~~~~~~~~~

    Univariate polynomials over a chain ring, with the residue field
    algorithms (extended Euclid, irreducibility) needed to find and Hensel
    lift the moduli of unramified extensions.
"""
import itertools
import logging
from typing import Callable, Iterable, Sequence, Tuple

from sympy import primefactors

from . import exceptions
from .ring import Element, RingSpec


logger = logging.getLogger(__name__)


class Polynomial:
    """
        An immutable polynomial with coefficients in `ring`, stored constant
        term first without trailing zeros. The zero polynomial has degree -1.
    """
    __slots__ = ('ring', 'coeffs')

    def __init__(self, ring: RingSpec, coeffs: Iterable[Element] = ()) -> None:
        coeffs = list(coeffs)
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        self.ring = ring
        self.coeffs = tuple(coeffs)

    @classmethod
    def from_ints(cls, ring: RingSpec, ints: Sequence[int]) -> 'Polynomial':
        return cls(ring, [ring.from_int(c) for c in ints])

    @classmethod
    def constant(cls, ring: RingSpec, c) -> 'Polynomial':
        return cls(ring, [ring.coerce(c)])

    @classmethod
    def x(cls, ring: RingSpec) -> 'Polynomial':
        return cls(ring, [ring.zero, ring.one])

    @classmethod
    def monomial(cls, ring: RingSpec, k: int, c=None) -> 'Polynomial':
        c = ring.one if c is None else ring.coerce(c)
        return cls(ring, [ring.zero] * k + [c])

    @classmethod
    def linear_factor(cls, root: Element) -> 'Polynomial':
        """``x - root``"""
        return cls(root.ring, [-root, root.ring.one])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Element:
        if not self.coeffs:
            return self.ring.zero
        return self.coeffs[-1]

    def coeff(self, k: int) -> Element:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.ring.zero

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.lead == self.ring.one

    def padded(self, length: int) -> Tuple[Element, ...]:
        """The coefficients padded with zeros (or cut) to `length` entries."""
        ret = self.coeffs[:length]
        return ret + (self.ring.zero,) * (length - len(ret))

    def _other(self, other) -> 'Polynomial':
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise exceptions.RingMismatch(
                    "cannot combine polynomials over {} and {}".format(self.ring.label, other.ring.label))
            return other
        return Polynomial.constant(self.ring, other)

    def __add__(self, other):
        other = self._other(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self.ring, [self.coeff(i) + other.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._other(other))

    def __rsub__(self, other):
        return self._other(other) - self

    def __mul__(self, other):
        if isinstance(other, (Element, int)):
            c = self.ring.coerce(other)
            return Polynomial(self.ring, [c * a for a in self.coeffs])
        other = self._other(other)
        if self.is_zero() or other.is_zero():
            return Polynomial(self.ring)
        zero = self.ring.zero
        prod = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                prod[i + j] = prod[i + j] + a * b
        return Polynomial(self.ring, prod)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> 'Polynomial':
        ret = Polynomial.constant(self.ring, 1)
        base = self
        while k:
            if k & 1:
                ret = ret * base
            k >>= 1
            if k:
                base = base * base
        return ret

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x: Element) -> Element:
        ret = x.ring.zero
        for c in reversed(self.coeffs):
            ret = ret * x + c
        return ret

    def __repr__(self):
        return 'Polynomial({}, [{}])'.format(self.ring.label, ' '.join(c.text() for c in self.coeffs))

    def divmod(self, divisor: 'Polynomial') -> Tuple['Polynomial', 'Polynomial']:
        """Division with remainder by a polynomial whose leading coefficient is a unit."""
        divisor = self._other(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lead_inv = divisor.lead.inverse()
        d = divisor.degree
        rem = list(self.coeffs)
        quot = [self.ring.zero] * max(len(rem) - d, 0)
        for k in range(len(rem) - 1, d - 1, -1):
            c = rem[k]
            if c.is_zero():
                continue
            f = c * lead_inv
            quot[k - d] = f
            for i, b in enumerate(divisor.coeffs):
                rem[k - d + i] = rem[k - d + i] - f * b
        return Polynomial(self.ring, quot), Polynomial(self.ring, rem[:d])

    def __floordiv__(self, divisor):
        return self.divmod(divisor)[0]

    def __mod__(self, divisor):
        return self.divmod(divisor)[1]

    def exact_div(self, divisor: 'Polynomial') -> 'Polynomial':
        quot, rem = self.divmod(divisor)
        if not rem.is_zero():
            raise exceptions.InternalError("{} does not divide {}".format(divisor, self))
        return quot

    def monic(self) -> 'Polynomial':
        return self * self.lead.inverse()

    def map(self, func: Callable[[Element], Element], ring: RingSpec = None) -> 'Polynomial':
        """Applies `func` to every coefficient; the result lives over `ring` (default: the same ring)."""
        return Polynomial(ring or self.ring, [func(c) for c in self.coeffs])

    def residue(self) -> 'Polynomial':
        return self.map(lambda c: c.residue(), self.ring.residue)

    def lift(self, ring: RingSpec) -> 'Polynomial':
        """The coefficientwise lift of a residue polynomial to `ring`."""
        return Polynomial(ring, [ring.lift(c) for c in self.coeffs])

    def divide_theta(self, k: int) -> 'Polynomial':
        return self.map(lambda c: c.divide_theta(k))


def x_pow_minus_one(ring: RingSpec, ell: int) -> Polynomial:
    """``x^ℓ - 1``"""
    return Polynomial.monomial(ring, ell) - 1


def xgcd(a: Polynomial, b: Polynomial) -> Tuple[Polynomial, Polynomial, Polynomial]:
    """
        The extended Euclidean algorithm over a residue field.

        Returns ``(g, u, v)`` with ``g = u a + v b`` monic (or zero when both
        inputs are zero).
    """
    ring = a.ring
    r0, r1 = a, b
    s0, s1 = Polynomial.constant(ring, 1), Polynomial(ring)
    t0, t1 = Polynomial(ring), Polynomial.constant(ring, 1)
    while not r1.is_zero():
        quot, rem = r0.divmod(r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - quot * s1
        t0, t1 = t1, t0 - quot * t1
    if r0.is_zero():
        return r0, s0, t0
    c = r0.lead.inverse()
    return r0 * c, s0 * c, t0 * c


def powmod(a: Polynomial, k: int, modulus: Polynomial) -> Polynomial:
    ret = Polynomial.constant(a.ring, 1) % modulus
    base = a % modulus
    while k:
        if k & 1:
            ret = (ret * base) % modulus
        k >>= 1
        if k:
            base = (base * base) % modulus
    return ret


def is_irreducible(f: Polynomial) -> bool:
    """
        Rabin's test over a residue field ``F_q``: a polynomial of degree
        ``d`` is irreducible iff ``x^{q^d} = x`` modulo `f` and
        ``gcd(x^{q^{d/r}} - x, f) = 1`` for every prime ``r | d``.
    """
    field = f.ring
    if field.s != 1:
        raise exceptions.InternalError("irreducibility is decided over residue fields only")
    d = f.degree
    if d < 1:
        return False
    if d == 1:
        return True
    f = f.monic()
    x = Polynomial.x(field)
    frob = [x % f]
    for _ in range(d):
        frob.append(powmod(frob[-1], field.q, f))
    if frob[d] != frob[0]:
        return False
    for r in primefactors(d):
        g, _, _ = xgcd(frob[d // r] - x, f)
        if g.degree > 0:
            return False
    return True


def monic_polynomials(field: RingSpec, d: int) -> Iterable[Polynomial]:
    """Monic degree `d` polynomials, lexicographically from the highest coefficient down."""
    elements = list(field.elements())
    for high_first in itertools.product(elements, repeat=d):
        yield Polynomial(field, list(reversed(high_first)) + [field.one])


def first_irreducible(field: RingSpec, d: int) -> Polynomial:
    for f in monic_polynomials(field, d):
        if is_irreducible(f):
            return f
    raise exceptions.InternalError("no irreducible polynomial of degree {} over {}".format(d, field.label))


def hensel_lift_poly(ring: RingSpec, fbar: Polynomial) -> Polynomial:
    """
        Lifts a monic irreducible residue polynomial `fbar` to the basic
        irreducible factor of ``x^{Q-1} - 1`` over `ring` with residue
        `fbar`, where ``Q = q^deg(fbar)``.

        The factorization ``x^{Q-1} - 1 = f g`` is lifted one θ-adic digit at
        a time using a fixed Bézout identity ``1 = u f + v g`` over the
        residue field.
    """
    if fbar.ring != ring.residue:
        raise exceptions.RingMismatch("{} is not over the residue field of {}".format(fbar, ring.label))
    fbar = fbar.monic()
    if fbar == Polynomial.x(fbar.ring) or ring.s == 1:
        return fbar.lift(ring)
    field = fbar.ring
    order = ring.q ** fbar.degree - 1
    gbar = x_pow_minus_one(field, order).exact_div(fbar)
    one, _, v = xgcd(fbar, gbar)
    if one.degree != 0:
        raise exceptions.ReducibleModulus("{} is not coprime to its cofactor".format(fbar))
    target = x_pow_minus_one(ring, order)
    f, g = fbar.lift(ring), gbar.lift(ring)
    for k in range(1, ring.s):
        err = (target - f * g).divide_theta(k).residue()
        a = (err * v) % fbar
        b = (err - a * gbar).exact_div(fbar)
        scale = ring.theta_powers[k]
        f = f + a.lift(ring) * scale
        g = g + b.lift(ring) * scale
    logger.debug("Hensel lift of %s over %s: %s", fbar, ring.label, f)
    return f
