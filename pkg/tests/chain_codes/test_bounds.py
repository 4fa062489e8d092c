from pytest import raises

from chain_codes import exceptions
from chain_codes.bounds import BoundsReport, Inequality, bounds_report, fixed_rows, level_set
from chain_codes.codes import extension
from chain_codes.fixtures import fixture
from tests.utils import code


def by_name(report):
    return {i.name: i for i in report.inequalities}


def test_inequality():
    assert Inequality('a', 1, '<=', 2).holds
    assert not Inequality('a', 3, '<=', 2).holds
    assert Inequality('a', 2, '|', 4).holds
    assert not Inequality('a', 3, '|', 4).holds
    assert Inequality('a', 1, '<=', 2).text() == 'a: 1 <= 2 ok'
    assert Inequality('b', 3, '=', 2, asserted=False).text() == 'b: 3 = 2 FAILS (not asserted)'


def test_level_set():
    c = code('gr42', '1,0 0,2 0,0; 0,0 0,0 1,0')
    assert level_set(c) == (2, 1)
    assert fixed_rows(c) == 1


def test_interior_rank_form_fails_over_galois_ring():
    # (1, 2y) over GR(4,2): m_1 = 2 but the interior has rank 1
    report = bounds_report(code('gr42', '1,0 0,2'))
    assert report.level_set == (2,)
    assert report.rank_closure == 2
    assert report.rank_interior == 1
    assert report.holds
    assert report.failures == ()
    failing = by_name(report)['sum m_i <= m rank B - (m-1) rank interior']
    assert not failing.asserted
    assert not failing.holds
    assert by_name(report)['sum m_i <= m rank B - (m-1) f'].holds


def test_interior_rank_form_fails_over_fields():
    report = bounds_report(code('f4', '1 0 0,1; 0 1 0,1'))
    assert report.level_set == (2, 2)
    assert report.rank_interior == 1
    assert report.holds
    assert not by_name(report)['sum m_i <= m rank B - (m-1) rank interior'].holds


def test_invariant_code_collapses():
    tower = fixture('gr43')
    base = code('z4', '1 1 0; 0 2 2')
    report = bounds_report(extension(base, tower))
    assert report.level_set == (1, 1)
    assert report.rank_restriction == report.rank_code == report.rank_trace == 2
    assert all(i.holds for i in report.inequalities)


def test_check():
    report = bounds_report(code('gr42', '1,0 0,2'))
    assert report.check() is report
    broken = BoundsReport(
        m=2, length=1, level_set=(), dual_level_set=(), rank_code=0, free_rank=0, rank_restriction=0,
        rank_trace=0, rank_interior=0, rank_closure=0, fixed_rows=0, dual_fixed_rows=0,
        restriction_free_rank=0, trace_free_rank=0, inequalities=(Inequality('x', 2, '<=', 1),))
    with raises(exceptions.OracleFailure):
        broken.check()
