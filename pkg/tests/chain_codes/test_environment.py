from pytest import raises

from chain_codes import exceptions
from chain_codes.environment import Environment, default_env
from chain_codes.fixtures import fixture, fixture_names


def test_clone():
    env = default_env.clone(seed=5)
    assert env.seed == 5
    assert env.guard_bits == default_env.guard_bits
    assert env is not default_env


def test_guards():
    env = Environment(guard_bits=4, span_check_bits=3)
    env.check_size(16, 'a code')
    with raises(exceptions.SizeGuardExceeded) as err:
        env.check_size(17, 'a code')
    assert err.value.details == {'size': 17, 'bits': 4}
    assert env.within(8)
    assert not env.within(9)


def test_case_counts():
    assert default_env.cases is None
    assert default_env.cases_for('rsf') == 1000
    assert default_env.cases_for('bch') == 100
    assert default_env.clone(cases=5).cases_for('rsf') == 5


def test_rng_is_seeded():
    a = Environment(seed=3).rng(7)
    b = Environment(seed=3).rng(7)
    assert [a.random() for _ in range(3)] == [b.random() for _ in range(3)]


def test_fixtures():
    names = fixture_names()
    assert names[:3] == ['z4', 'z8', 'z9']
    assert fixture('gr42').m == 2
    with raises(exceptions.UnknownFixture):
        fixture('z5')
