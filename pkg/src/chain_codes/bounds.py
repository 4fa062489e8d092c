"""
    chain_codes.bounds
    ~~~~~~~~~~~~~~~~~~

    Level sets and rank bounds for restriction and trace codes.

    The report evaluates each bound on a code and, where the bound needs
    it, on its dual. Asserted bounds always hold. The others compare with
    the interior rank instead of the number of base ring rows and fail for
    some codes; they are reported, never enforced.
"""
import logging
from dataclasses import dataclass
from math import gcd
from typing import Tuple

from . import exceptions
from .codes import Code, closure, dual, interior, restriction, trace_code


logger = logging.getLogger(__name__)


_RELATIONS = {
    '<=': lambda a, b: a <= b,
    '>=': lambda a, b: a >= b,
    '=': lambda a, b: a == b,
    '|': lambda a, b: a != 0 and b % a == 0,
}


@dataclass(frozen=True)
class Inequality:
    name: str
    lhs: int
    relation: str
    rhs: int
    asserted: bool = True

    @property
    def holds(self) -> bool:
        return _RELATIONS[self.relation](self.lhs, self.rhs)

    def text(self) -> str:
        mark = '' if self.asserted else ' (not asserted)'
        status = 'ok' if self.holds else 'FAILS'
        return '{}: {} {} {} {}{}'.format(self.name, self.lhs, self.relation, self.rhs, status, mark)


def level_set(code: Code) -> Tuple[int, ...]:
    """The least σ-period of every row of the row standard form."""
    tower = code.tower
    ret = []
    for row in code.rows:
        period = 1
        for e in row:
            p = tower.period(e)
            period = period * p // gcd(period, p)
        ret.append(period)
    return tuple(ret)


def fixed_rows(code: Code) -> int:
    """The number of rows of the row standard form lying over the base ring."""
    return sum(1 for m_i in level_set(code) if m_i == 1)


@dataclass(frozen=True)
class BoundsReport:
    m: int
    length: int
    level_set: Tuple[int, ...]
    dual_level_set: Tuple[int, ...]
    rank_code: int
    free_rank: int
    rank_restriction: int
    rank_trace: int
    rank_interior: int
    rank_closure: int
    fixed_rows: int
    dual_fixed_rows: int
    restriction_free_rank: int
    trace_free_rank: int
    inequalities: Tuple[Inequality, ...]

    @property
    def holds(self) -> bool:
        return all(i.holds for i in self.inequalities if i.asserted)

    @property
    def failures(self) -> Tuple[Inequality, ...]:
        return tuple(i for i in self.inequalities if i.asserted and not i.holds)

    def check(self) -> 'BoundsReport':
        if not self.holds:
            raise exceptions.OracleFailure(
                "rank bounds fail: {}".format('; '.join(i.text() for i in self.failures)))
        return self


def bounds_report(code: Code) -> BoundsReport:
    m, ell = code.tower.m, code.length
    perp = dual(code)
    res = restriction(code, 'coordinates')
    tr = trace_code(code)
    inner, outer = interior(code), closure(code)
    levels, dual_levels = level_set(code), level_set(perp)
    f, f_perp = fixed_rows(code), fixed_rows(perp)
    k0 = code.free_rank
    k0_r, k0_t = res.free_rank, tr.free_rank
    rank = code.rank
    res_perp_rank = restriction(perp, 'coordinates').rank
    sum_m, sum_m_perp = sum(levels), sum(dual_levels)

    inequalities = [
        Inequality('rank Res <= rank B', res.rank, '<=', rank),
        Inequality('rank B <= rank Tr', rank, '<=', tr.rank),
        Inequality('rank Tr <= m rank B', tr.rank, '<=', m * rank),
        Inequality('rank Tr = rank closure', tr.rank, '=', outer.rank),
        Inequality('rank Res = rank interior', res.rank, '=', inner.rank),
        Inequality('rank closure <= sum m_i', outer.rank, '<=', sum_m),
        Inequality('sum m_i <= m rank B - (m-1) f', sum_m, '<=', m * rank - (m - 1) * f),
        Inequality('f <= rank Res', f, '<=', res.rank),
        Inequality('rank Res >= l - sum m_i^perp', res.rank, '>=', ell - sum_m_perp),
        Inequality('l - sum m_i^perp >= m k0 - (m-1)(l - f^perp)',
                ell - sum_m_perp, '>=', m * k0 - (m - 1) * (ell - f_perp)),
        Inequality('l - k0^(r) <= sum m_i^perp', ell - k0_r, '<=', sum_m_perp),
        Inequality('m (l - rank B) - (m-1)(l - f) <= l - k0^(t)',
                m * (ell - rank) - (m - 1) * (ell - f), '<=', ell - k0_t),
        Inequality('l - k0^(t) <= l - k0', ell - k0_t, '<=', ell - k0),
        # the forms with the interior rank in place of the fixed rows
        Inequality('sum m_i <= m rank B - (m-1) rank interior',
                sum_m, '<=', m * rank - (m - 1) * inner.rank, asserted=False),
        Inequality('l - sum m_i^perp >= m k0 - (m-1)(l - rank Res(B^perp))',
                ell - sum_m_perp, '>=', m * k0 - (m - 1) * (ell - res_perp_rank), asserted=False),
        Inequality('m k0 - (m-1) k0^(r) <= l - k0^(t)',
                m * k0 - (m - 1) * k0_r, '<=', ell - k0_t, asserted=False),
        Inequality('l - k0^(t) <= m (l - k0) - (m-1)(l - k0^(r))',
                ell - k0_t, '<=', m * (ell - k0) - (m - 1) * (ell - k0_r), asserted=False),
    ]
    inequalities.extend(Inequality('m_{} | m'.format(i), m_i, '|', m) for i, m_i in enumerate(levels))

    report = BoundsReport(
        m=m, length=ell, level_set=levels, dual_level_set=dual_levels,
        rank_code=rank, free_rank=k0, rank_restriction=res.rank, rank_trace=tr.rank,
        rank_interior=inner.rank, rank_closure=outer.rank, fixed_rows=f, dual_fixed_rows=f_perp,
        restriction_free_rank=k0_r, trace_free_rank=k0_t, inequalities=tuple(inequalities))
    for failure in report.failures:
        logger.error("Rank bound failed for %s: %s", code, failure.text())
    return report
