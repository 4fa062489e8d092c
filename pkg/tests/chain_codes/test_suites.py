import pytest
from pytest import raises

from chain_codes import defaults, exceptions
from chain_codes.environment import default_env
from chain_codes.suites import SuiteOptions, SuiteReport, Tally, intervals, resolve_options, run_suite, suite_names


def small(*fixtures, **kwargs):
    return SuiteOptions(fixtures=fixtures, cases=kwargs.pop('cases', 2), **kwargs)


def test_names():
    assert set(suite_names()) == {
        'ring', 'extension', 'rsf', 'dual', 'delsarte', 'closure', 'bounds', 'factorization', 'bijection',
        'defining-sets', 'restriction', 'bch'}
    with raises(exceptions.UnknownSuite):
        run_suite('unknown')


def test_default_sizes():
    sizes = {name: resolve_options(name).cases for name in suite_names()}
    assert sizes['rsf'] == 1000
    assert sizes['dual'] == sizes['bounds'] == 500
    assert sizes['delsarte'] == sizes['closure'] == 300
    assert sizes['ring'] == defaults.CASES
    assert resolve_options('rsf').transforms == 200
    assert resolve_options('rsf', SuiteOptions(cases=7, transforms=2)) == SuiteOptions(cases=7, transforms=2)
    assert resolve_options('dual', env=default_env.clone(cases=9)).cases == 9


def test_report():
    report = SuiteReport('x', 3, 2, 'case 1')
    assert report.failed == 1
    assert not report.ok
    assert report.text() == 'x: 2/3 passed\nfirst counterexample: case 1'


def test_tally():
    def broken():
        raise exceptions.OracleFailure("pipelines disagree")

    tally = Tally('t')
    assert tally.check('a', lambda: True)
    assert not tally.check('b', broken)
    assert not tally.check('c', lambda: False)
    report = tally.report()
    assert (report.cases, report.passed) == (3, 1)
    assert report.counterexample == 'b (OracleFailure: pipelines disagree)'


def test_intervals():
    found = intervals(3)
    assert len(found) == 7
    assert found[0].text() == '{0}'
    assert found[-1].text() == '{0,1,2}'


def test_ring_suite():
    assert run_suite('ring', small('z4', 'gr42')).ok


def test_rsf_suite():
    assert run_suite('rsf', small('z4', transforms=1)).ok


def test_dual_suite():
    assert run_suite('dual', small('z9')).ok


def test_closure_suite():
    assert run_suite('closure', small('gr42')).ok


def test_bounds_suite():
    report = run_suite('bounds', small('gr42'))
    assert report.ok
    assert len(report.notes) == 1


def test_factorization_suite():
    report = run_suite('factorization', small('z4', ell=7))
    assert report.ok
    assert report.cases == 4


def test_bijection_suite():
    report = run_suite('bijection', small('z4', ell=3))
    assert report.ok
    assert report.cases == 20
    assert report.notes == ('9 distinct cyclic codes confirmed',)


def test_defining_sets_suite():
    assert run_suite('defining-sets', small('z4', ell=3)).ok


def test_restriction_suite():
    assert run_suite('restriction', small('z4', ell=3)).ok


def test_bch_suite():
    assert run_suite('bch', small('z4', ell=3)).ok


@pytest.mark.slow
def test_exhaustive_delsarte_suite():
    assert run_suite('delsarte', SuiteOptions(cases=0)).ok
