from pytest import raises

import chain_codes.ring as r
from chain_codes import exceptions
from chain_codes.ring import Family, make_ring


def test_labels():
    assert make_ring('unramified', 2, 1, 2).label == 'Z4'
    assert make_ring('unramified', 2, 2, 2).label == 'GR(4,2)'
    assert make_ring('unramified', 2, 2, 1).label == 'F4'
    assert make_ring(Family.EQUAL_CHARACTERISTIC, 2, 1, 2).label == 'F2[u]/(u^2)'


def test_sizes():
    z4 = make_ring('unramified', 2, 1, 2)
    assert (z4.q, z4.size, z4.unit_count) == (2, 4, 2)
    gr = make_ring('unramified', 2, 2, 2)
    assert (gr.q, gr.size, gr.unit_count) == (4, 16, 12)
    assert sum(1 for e in gr.elements() if e.is_unit()) == gr.unit_count


def test_canonical_order():
    z4 = make_ring('unramified', 2, 1, 2)
    assert [e.key for e in z4.elements()] == [(0,), (1,), (2,), (3,)]
    assert [e.text() for e in z4.elements()] == ['0', '1', '2', '3']


def test_theta():
    z9 = make_ring('unramified', 3, 1, 2)
    assert z9.theta == 3
    assert [t.text() for t in z9.theta_powers] == ['1', '3', '0']
    f2u2 = make_ring('equal-characteristic', 2, 1, 2)
    assert f2u2.theta.key == (0, 1)
    assert f2u2.theta.text() == '0,1'
    assert (f2u2.theta * f2u2.theta).is_zero()


def test_teichmuller():
    z9 = make_ring('unramified', 3, 1, 2)
    assert [g.text() for g in z9.teichmuller] == ['0', '1', '8']
    assert all(r.is_teichmuller(g) for g in z9.teichmuller)
    assert not r.is_teichmuller(z9.from_int(2))


def test_theta_adic():
    z9 = make_ring('unramified', 3, 1, 2)
    five = z9.from_int(5)
    assert [g.text() for g in five.theta_adic()] == ['8', '8']
    assert r.from_theta_adic(z9, five.theta_adic()) == five
    assert five.truncate(1) == 8
    with raises(exceptions.NotTeichmuller):
        r.from_theta_adic(z9, [z9.from_int(2), z9.zero])
    with raises(exceptions.MalformedElement):
        r.from_theta_adic(z9, [z9.one])


def test_valuation_and_degree():
    z9 = make_ring('unramified', 3, 1, 2)
    assert z9.from_int(3).valuation() == 1
    assert z9.from_int(3).degree() == 1
    assert z9.from_int(1).degree() == 0
    assert z9.zero.valuation() == 2
    assert z9.zero.degree() == r.NEG_INFINITY
    assert r.NEG_INFINITY < 0


def test_inverse():
    z9 = make_ring('unramified', 3, 1, 2)
    assert z9.from_int(2).inverse() == 5
    with raises(exceptions.NonUnit):
        z9.from_int(6).inverse()


def test_divide_theta():
    z9 = make_ring('unramified', 3, 1, 2)
    assert z9.from_int(6).divide_theta(1) == 2
    with raises(exceptions.NotDivisible):
        z9.from_int(4).divide_theta(1)
    f2u2 = make_ring('equal-characteristic', 2, 1, 2)
    u = f2u2.theta
    assert u.divide_theta(1) == 1


def test_residue():
    gr = make_ring('unramified', 2, 2, 2)
    a = gr.from_key([3, 2])
    assert a.residue().key == (1, 0)
    assert a.residue().ring.label == 'F4'
    assert gr.lift(a.residue()).residue() == a.residue()


def test_from_key():
    gr = make_ring('unramified', 2, 2, 2)
    assert gr.from_key([5, 6]).key == (1, 2)
    with raises(exceptions.MalformedElement):
        gr.from_key([1])


def test_mismatch():
    z4 = make_ring('unramified', 2, 1, 2)
    z9 = make_ring('unramified', 3, 1, 2)
    with raises(exceptions.RingMismatch):
        z4.one + z9.one


def test_invalid_parameters():
    with raises(exceptions.NotPrime):
        make_ring('unramified', 4, 1, 1)
    with raises(exceptions.InvalidRingParameters):
        make_ring('unramified', 2, 1, 0)
    with raises(exceptions.DegreeMismatch):
        make_ring('unramified', 2, 2, 1, [1, 1])
    with raises(exceptions.ReducibleModulus):
        make_ring('unramified', 2, 2, 1, [1, 0, 1])


def test_hensel_lifted_modulus():
    gr = make_ring('unramified', 2, 2, 2)
    assert gr.modulus == (1, 1, 1)
    y = gr.from_key([0, 1])
    assert y ** 3 == 1


def test_module_level_operations():
    z4 = make_ring('unramified', 2, 1, 2)
    three = z4.from_int(3)
    assert r.inv(three) == 3
    assert r.add(three, z4.one).is_zero()
    assert r.mul(three, three) == 1
    assert r.neg(three) == 1
    assert [g.text() for g in r.teichmuller_set(z4)] == ['0', '1']
    assert [g.text() for g in r.theta_adic(three)] == ['1', '1']
    assert r.valuation(z4.theta) == 1
    assert r.degree(three) == 1
    assert r.residue_project(z4.theta * three).is_zero()
    assert r.residue_project(three) == z4.residue.one
    with raises(exceptions.NonUnit):
        r.inv(z4.theta)


def test_memoized_arithmetic():
    gr = make_ring('unramified', 2, 2, 2)
    elements = list(gr.elements())
    for a in elements:
        for b in elements:
            assert (a * b).coeffs == gr.arith.mul(a.coeffs, b.coeffs)
    assert len(gr._products) == len(elements) ** 2
    for a in elements:
        if a.is_unit():
            assert a.inverse() * a == 1
            assert a.inverse() is a.inverse()
        assert a.theta_adic() is a.theta_adic()
    big = make_ring('unramified', 3, 1, 6)
    assert big._products is None
    assert big.from_int(28) * big.from_int(26) == 728
