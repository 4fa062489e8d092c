from pytest import raises

from chain_codes import exceptions
from chain_codes.poly import (
    Polynomial, first_irreducible, hensel_lift_poly, is_irreducible, x_pow_minus_one, xgcd,
)
from chain_codes.ring import make_ring


Z4 = make_ring('unramified', 2, 1, 2)
F2 = Z4.residue


def P(ring, *ints):
    return Polynomial.from_ints(ring, ints)


def test_normalized():
    p = P(Z4, 1, 2, 0, 4)
    assert p.degree == 1
    assert Polynomial(Z4).degree == -1
    assert P(Z4, 0, 1) == Polynomial.x(Z4)


def test_arithmetic():
    assert P(Z4, 1, 1) * P(Z4, 1, 1) == P(Z4, 1, 2, 1)
    assert P(Z4, 1, 1) * 2 == P(Z4, 2, 2)
    assert P(Z4, 1, 3) + P(Z4, 3, 1) == Polynomial(Z4)
    assert P(Z4, 1, 1) ** 2 == P(Z4, 1, 2, 1)
    assert P(Z4, 1, 2, 3)(Z4.from_int(1)) == 2


def test_divmod():
    quot, rem = x_pow_minus_one(Z4, 3).divmod(P(Z4, 1, 1))
    assert quot == P(Z4, 1, 3, 1)
    assert rem == P(Z4, 2)
    assert x_pow_minus_one(Z4, 3).exact_div(P(Z4, 3, 1)) == P(Z4, 1, 1, 1)
    with raises(exceptions.InternalError):
        x_pow_minus_one(Z4, 3).exact_div(P(Z4, 1, 1))
    with raises(ZeroDivisionError):
        P(Z4, 1).divmod(Polynomial(Z4))


def test_xgcd():
    a, b = P(F2, 1, 1, 1), P(F2, 1, 1)
    g, u, v = xgcd(a, b)
    assert g == P(F2, 1)
    assert u * a + v * b == g
    g, _, _ = xgcd(P(F2, 1, 0, 1), P(F2, 1, 1))
    assert g == P(F2, 1, 1)


def test_irreducible():
    assert is_irreducible(P(F2, 1, 1, 1))
    assert not is_irreducible(P(F2, 1, 0, 1))
    assert is_irreducible(P(F2, 1, 1, 0, 1))
    assert first_irreducible(F2, 3) == P(F2, 1, 1, 0, 1)
    with raises(exceptions.InternalError):
        is_irreducible(P(Z4, 1, 1, 1))


def test_hensel_lift():
    fbar = first_irreducible(F2, 3)
    f = hensel_lift_poly(Z4, fbar)
    assert f.is_monic()
    assert f.residue() == fbar
    assert (x_pow_minus_one(Z4, 7) % f).is_zero()


def test_residue_and_lift():
    p = P(Z4, 3, 2, 1)
    assert p.residue() == P(F2, 1, 0, 1)
    assert p.residue().lift(Z4) == P(Z4, 1, 0, 1)


def test_mismatch():
    z9 = make_ring('unramified', 3, 1, 2)
    with raises(exceptions.RingMismatch):
        P(Z4, 1, 1) + P(z9, 1, 1)
