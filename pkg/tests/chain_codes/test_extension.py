from pytest import raises

from chain_codes import exceptions
from chain_codes.environment import default_env
from chain_codes.extension import Subgroup, Tower, dual_basis, extend, gram_matrix
from chain_codes.fixtures import fixture
from chain_codes.linalg import Mat, determinant, mat_inverse
from chain_codes.ring import make_ring


def test_tower_basics():
    tower = fixture('gr42')
    assert tower.m == 2
    assert tower.label == 'Z4[y]/(h2)|Z4'
    assert not tower.is_trivial
    assert [c.text() for c in tower.modulus] == ['1', '1', '1']
    assert [a.key for a in tower.basis] == [(1, 0), (0, 1)]


def test_trivial_tower():
    z4 = make_ring('unramified', 2, 1, 2)
    tower = Tower.trivial(z4)
    assert tower.is_trivial
    assert tower.m == 1
    assert tower.label == 'Z4'
    assert extend(z4, 1) == tower
    a = z4.from_int(3)
    assert tower.frobenius(a) == a
    assert tower.trace(a) == a


def test_embed_and_base():
    tower = fixture('gr42')
    three = tower.embed(tower.base.from_int(3))
    assert three.key == (3, 0)
    assert tower.in_base(three)
    assert tower.to_base(three) == 3
    y = tower.basis[1]
    assert not tower.in_base(y)
    with raises(exceptions.NotInBaseRing):
        tower.to_base(y)


def test_frobenius():
    tower = fixture('gr42')
    y = tower.basis[1]
    assert tower.frobenius(y).key == (3, 3)
    assert tower.frobenius(y, 2) == y
    assert tower.frobenius_definitional(y) == tower.frobenius(y)
    assert tower.period(y) == 2
    assert tower.period(tower.embed(tower.base.from_int(2))) == 1
    two_y = y * 2
    assert tower.period(two_y) == 2


def test_trace():
    tower = fixture('gr42')
    y = tower.basis[1]
    assert tower.trace(tower.top.one) == 2
    assert tower.trace(y) == 3
    assert tower.trace(y * y) == 3


def test_gram_and_dual_basis():
    tower = fixture('gr42')
    assert [[e.text() for e in row] for row in tower.gram.rows] == [['2', '3'], ['3', '3']]
    assert tower.is_biorthogonal()
    for i, alpha in enumerate(tower.basis):
        for j, beta in enumerate(tower.dual_basis):
            assert tower.trace(alpha * beta) == (1 if i == j else 0)


def test_gram_matrix_is_invertible():
    tower = fixture('gr42')
    G = gram_matrix(tower)
    assert G.shape == (2, 2)
    assert determinant(G).is_unit()
    assert mat_inverse(G) @ G == Mat.identity(tower.base, 2)
    assert dual_basis(tower) == tower.dual_basis


def test_coordinates():
    tower = fixture('gr43')
    for a in list(tower.top.elements())[::7]:
        coords = tower.coordinates(a)
        total = tower.top.zero
        for c, alpha in zip(coords, tower.basis):
            total = total + tower.embed(c) * alpha
        assert total == a


def test_equal_characteristic_tower():
    tower = fixture('f8u2')
    assert tower.m == 3
    assert tower.is_biorthogonal()
    u = tower.embed(tower.base.theta)
    assert tower.frobenius(u) == u
    assert len(tower.fixed_elements(1)) == tower.base.size


def test_primitive_root():
    tower = fixture('gr42')
    xi = tower.primitive_root(3)
    assert xi ** 3 == 1
    assert xi != 1
    assert tower.primitive_root(1) == 1
    with raises(exceptions.NotCoprime):
        tower.primitive_root(2)
    with raises(exceptions.OrderUnavailable):
        tower.primitive_root(5)


def test_fixed_rings():
    tower = fixture('gr44')
    middle = tower.fixed_ring(Subgroup(4, 2))
    assert middle.degree == 2
    assert middle.size == 16
    assert tower.stabilizer(middle) == Subgroup(4, 2)
    assert all(middle.contains(a) for a in middle.elements())
    assert tower.stabilizer(tower.fixed_ring(Subgroup(4, 1))) == Subgroup(4, 1)
    assert tower.stabilizer(tower.fixed_ring(Subgroup(4, 4))) == Subgroup(4, 4)


def test_subgroup():
    assert Subgroup(6, 2).order == 3
    assert Subgroup(6, 2).powers() == (0, 2, 4)
    with raises(exceptions.InvalidSubgroup):
        Subgroup(6, 4)
    with raises(exceptions.InvalidSubgroup):
        fixture('gr42').fixed_ring(Subgroup(4, 2))


def test_size_guard():
    z4 = make_ring('unramified', 2, 1, 2)
    with raises(exceptions.SizeGuardExceeded):
        extend(z4, 3, default_env.clone(guard_bits=4))
    with raises(exceptions.InvalidRingParameters):
        extend(z4, 0)
