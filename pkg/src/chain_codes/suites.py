"""
    chain_codes.suites
    ~~~~~~~~~~~~~~~~~~

    Property suites run by ``chain-codes verify <suite>``. Each suite checks
    identities of the library on exhaustive or seeded random inputs and
    returns a :class:`SuiteReport` with the first counterexample found.

    A case fails when its predicate is false or when it raises an
    :class:`~chain_codes.exceptions.InternalError` (an oracle mismatch).
"""
import itertools
import logging
from dataclasses import dataclass, field, replace
from math import gcd
from typing import Callable, List, Optional, Tuple

from . import defaults
from . import exceptions
from .bounds import bounds_report
from .codes import (
    all_codes, closure, closure_via_trace, delsarte_check, dual, extension, interior, interior_via_restriction,
    invariance_record, restriction, trace_code,
)
from .cyclic import (
    DefiningSet, all_multiindices, bch_check, check_generator_polynomial, code_from_multiindex, cyclic_context,
    dual_by_defining_set, enumerate_cyclic_codes, eval_code, invariance_and_closure, is_cyclic, multiindex_of,
    orthogonal, restricted_code, restricted_multiindex,
)
from .environment import default_env
from .extension import Subgroup, Tower
from .fixtures import fixture
from .linalg import is_rsf, row_span, rsf
from .poly import is_irreducible
from .ring import from_theta_adic
from .sampling import random_code, random_element, random_invertible, random_matrix, random_shape, random_subset
from .utils.functools import factory


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SuiteOptions:
    fixtures: Tuple[str, ...] = ()
    ell: Optional[int] = None
    cases: Optional[int] = None
    transforms: Optional[int] = None


@dataclass(frozen=True)
class SuiteReport:
    name: str
    cases: int
    passed: int
    counterexample: Optional[str] = None
    notes: Tuple[str, ...] = field(default=())

    @property
    def failed(self) -> int:
        return self.cases - self.passed

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def text(self) -> str:
        lines = ['{}: {}/{} passed'.format(self.name, self.passed, self.cases)]
        lines.extend(self.notes)
        if self.counterexample is not None:
            lines.append('first counterexample: ' + self.counterexample)
        return '\n'.join(lines)


class Tally:
    def __init__(self, name: str) -> None:
        self.name = name
        self.cases = 0
        self.passed = 0
        self.counterexample = None  # type: Optional[str]
        self.notes = []  # type: List[str]

    def check(self, label: str, predicate: Callable[[], bool]) -> bool:
        self.cases += 1
        try:
            ok = bool(predicate())
        except exceptions.InternalError as ex:
            ok = False
            label = '{} ({})'.format(label, ex)
        if ok:
            self.passed += 1
        else:
            logger.warning("%s: case failed: %s", self.name, label)
            if self.counterexample is None:
                self.counterexample = label
        return ok

    def note(self, text: str) -> None:
        self.notes.append(text)

    def report(self) -> SuiteReport:
        return SuiteReport(self.name, self.cases, self.passed, self.counterexample, tuple(self.notes))


@factory
class Suite:
    MISSING = exceptions.UnknownSuite


def resolve_options(name: str, options: SuiteOptions = SuiteOptions(), env=default_env) -> SuiteOptions:
    """
        Fills in the case and transform counts left unset: an explicit
        option wins over the environment, which wins over the per-suite
        default in :data:`chain_codes.defaults.SUITE_CASES`.
    """
    cases = options.cases if options.cases is not None else env.cases_for(name)
    transforms = options.transforms if options.transforms is not None else defaults.TRANSFORMS
    return replace(options, cases=cases, transforms=transforms)


def run_suite(name: str, options: SuiteOptions = SuiteOptions(), env=default_env) -> SuiteReport:
    if name not in Suite.AVAILABLE:
        raise exceptions.UnknownSuite("Unknown suite '{}' (available: {})".format(name, ', '.join(Suite.names())))
    options = resolve_options(name, options, env)
    logger.info("Running suite %s with %d cases", name, options.cases)
    return Suite.create(name, options, env)


def suite_names() -> List[str]:
    return Suite.names()


def _salt(name: str) -> int:
    return sum(name.encode())


def _towers(options: SuiteOptions, *default):
    return [(name, fixture(name)) for name in (options.fixtures or default)]


@Suite.register('ring')
def ring_suite(options, env):
    tally = Tally('ring')
    for name, tower in _towers(options, 'z4', 'z9', 'f2u2', 'gr42'):
        ring = tower.top
        rng = env.rng(_salt(name))
        tally.check('{}: |Γ| = q'.format(name), lambda: len(set(ring.teichmuller)) == ring.q)
        tally.check('{}: unit count'.format(name),
                    lambda: sum(1 for e in ring.elements() if e.is_unit()) == ring.unit_count)
        for i in range(options.cases):
            a, b, c = (random_element(ring, rng) for _ in range(3))
            label = '{} case {}: a={} b={} c={}'.format(name, i, a.text(), b.text(), c.text())
            tally.check(label + ' distributivity', lambda: a * (b + c) == a * b + a * c)
            tally.check(label + ' θ-adic round trip', lambda: from_theta_adic(ring, a.theta_adic()) == a)
            if a.is_unit():
                tally.check(label + ' inverse', lambda: a * a.inverse() == 1)
            tally.check(label + ' valuation of products',
                        lambda: (a * b).valuation() == min(ring.s, a.valuation() + b.valuation()))
    return tally.report()


@Suite.register('extension')
def extension_suite(options, env):
    tally = Tally('extension')
    for name, tower in _towers(options, 'gr42', 'gr43', 'f8u2'):
        top = tower.top
        rng = env.rng(_salt(name))
        tally.check('{}: biorthogonal dual basis'.format(name), tower.is_biorthogonal)
        fixed = tower.fixed_elements(1, env)
        tally.check('{}: σ fixes exactly the base ring'.format(name), lambda: len(fixed) == tower.base.size)
        for d in (d for d in range(1, tower.m + 1) if tower.m % d == 0):
            inner = tower.fixed_ring(Subgroup(tower.m, d))
            tally.check('{}: Stab(Fix(<σ^{}>))'.format(name, d),
                        lambda: tower.stabilizer(inner) == Subgroup(tower.m, d))
        for i in range(options.cases):
            a, b = random_element(top, rng), random_element(top, rng)
            label = '{} case {}: a={} b={}'.format(name, i, a.text(), b.text())
            tally.check(label + ' σ multiplicative',
                        lambda: tower.frobenius(a * b) == tower.frobenius(a) * tower.frobenius(b))
            tally.check(label + ' σ on θ-adic digits', lambda: tower.frobenius(a) == tower.frobenius_definitional(a))
            tally.check(label + ' σ^m = id', lambda: tower.frobenius(a, tower.m) == a)
            tally.check(label + ' trace additive', lambda: tower.trace(a + b) == tower.trace(a) + tower.trace(b))
    return tally.report()


@Suite.register('rsf')
def rsf_suite(options, env):
    tally = Tally('rsf')
    for name, tower in _towers(options, 'z4', 'z9', 'gr42', 'f2u2'):
        ring = tower.top
        rng = env.rng(_salt(name))
        for i in range(options.cases):
            k, ell = random_shape(rng)
            A = random_matrix(ring, k, ell, rng, sparsity=0.3)
            R = rsf(A)
            label = '{} case {}: {}'.format(name, i, A.text().replace('\n', '; '))
            tally.check(label + ' is RSF', lambda: bool(is_rsf(R)))
            tally.check(label + ' idempotent', lambda: rsf(R) == R)
            for _ in range(options.transforms):
                P = random_invertible(ring, k, rng)
                tally.check(label + ' invariant under row operations', lambda: rsf(P @ A) == R)
            if env.within(ring.size ** ell):
                tally.check(label + ' same span', lambda: row_span(A, env) == row_span(R, env))
    return tally.report()


@Suite.register('dual')
def dual_suite(options, env):
    tally = Tally('dual')
    for name, tower in _towers(options, 'z4', 'z9', 'gr42', 'f2u2'):
        ring = tower.top
        rng = env.rng(_salt(name))
        for i in range(options.cases):
            code = random_code(tower, rng)
            perp = dual(code)
            ell, s = code.length, ring.s
            label = '{} case {}: {}'.format(name, i, code)
            tally.check(label + ' double dual', lambda: dual(perp) == code)
            tally.check(label + ' cardinality', lambda: code.cardinality * perp.cardinality == ring.size ** ell)
            expected = (ell - sum(code.type),) + tuple(reversed(code.type[1:]))
            tally.check(label + ' dual type', lambda: perp.type == expected)
    return tally.report()


@Suite.register('delsarte')
def delsarte_suite(options, env):
    tally = Tally('delsarte')
    if not options.fixtures:
        for name in ('gr42', 'gr43'):
            tower = fixture(name)
            for length in (1, 2):
                for code in all_codes(tower, length, env):
                    tally.check('{} exhaustive: {}'.format(name, code), lambda: delsarte_check(code).equal)
    for name, tower in _towers(options, 'gr42', 'gr43'):
        rng = env.rng(_salt(name))
        for i in range(options.cases):
            code = random_code(tower, rng, rng.randint(1, 5))
            tally.check('{} case {}: {}'.format(name, i, code), lambda: delsarte_check(code).equal)
    return tally.report()


@Suite.register('closure')
def closure_suite(options, env):
    tally = Tally('closure')
    for name, tower in _towers(options, 'gr43'):
        rng = env.rng(_salt(name))
        for i in range(options.cases):
            code = random_code(tower, rng, rng.randint(1, 4))
            label = '{} case {}: {}'.format(name, i, code)
            tally.check(label + ' interior = Ext(Res)', lambda: interior(code) == interior_via_restriction(code))
            tally.check(label + ' closure = Ext(Tr)', lambda: closure(code) == closure_via_trace(code))
            tally.check(label + ' interior of the dual', lambda: interior(dual(code)) == dual(closure(code)))
            tally.check(label + ' invariance criteria agree', lambda: invariance_record(code).consistent)
    return tally.report()


@Suite.register('bounds')
def bounds_suite(options, env):
    tally = Tally('bounds')
    for name, tower in _towers(options, 'gr42', 'gr43'):
        rng = env.rng(_salt(name))
        failing_recorded = 0
        for i in range(options.cases):
            code = random_code(tower, rng, rng.randint(1, 4))
            report = bounds_report(code)
            tally.check('{} case {}: {} {}'.format(name, i, code, '; '.join(f.text() for f in report.failures)),
                        lambda: report.holds)
            failing_recorded += sum(1 for q in report.inequalities if not q.asserted and not q.holds)
            base = random_code(Tower.trivial(tower.base), rng, code.length)
            invariant = extension(base, tower)
            tally.check('{} case {}: invariant {} collapses'.format(name, i, invariant), lambda: (
                restriction(invariant).rank == invariant.rank == trace_code(invariant).rank
                and restriction(invariant) == trace_code(invariant) == base))
        tally.note('{}: {} violations of the interior rank forms recorded'.format(name, failing_recorded))
    return tally.report()


def _factorization_cases(options):
    if options.fixtures:
        return [(name, options.ell or 7) for name in options.fixtures]
    return [('z4', 7), ('z8', 7), ('z9', 2), ('z9', 4), ('z9', 13), ('f2u2', 7)]


@Suite.register('factorization')
def factorization_suite(options, env):
    tally = Tally('factorization')
    for name, ell in _factorization_cases(options):
        ring = fixture(name).top
        label = '{} ℓ={}'.format(name, ell)
        try:
            ctx = cyclic_context(ring, ell, env)
        except exceptions.InternalError as ex:
            tally.check('{} ({})'.format(label, ex), lambda: False)
            continue
        tally.check(label + ' idempotents', ctx.check_idempotents)
        for a, factor in ctx.factors.items():
            tally.check('{} Λ_{} residue irreducible of degree z_a'.format(label, a), lambda: (
                factor.is_monic() and factor.degree == ctx.cosets.size(a) and is_irreducible(factor.residue())))
    return tally.report()


def _context(options, env, default_ring='z4', default_ell=7):
    name = options.fixtures[0] if options.fixtures else default_ring
    return cyclic_context(fixture(name).top, options.ell or default_ell, env)


@Suite.register('bijection')
def bijection_suite(options, env):
    tally = Tally('bijection')
    ctx = _context(options, env)
    indices = all_multiindices(ctx)
    codes = {}
    for index in indices:
        code = code_from_multiindex(ctx, index)
        tally.check('{} is cyclic'.format(index.text()), lambda: is_cyclic(code))
        tally.check('{} round trip'.format(index.text()), lambda: multiindex_of(ctx, code) == index)
        codes[code] = index
    tally.check('{} multi-indices give distinct codes'.format(len(indices)), lambda: len(codes) == len(indices))
    found = enumerate_cyclic_codes(ctx.ring, ctx.ell, env)
    tally.check('the multi-index codes are all {} cyclic codes'.format(len(found)), lambda: set(codes) == found)
    tally.note('{} distinct cyclic codes confirmed'.format(len(codes)))
    return tally.report()


@Suite.register('defining-sets')
def defining_sets_suite(options, env):
    tally = Tally('defining-sets')
    ctx = _context(options, env)
    ell, s = ctx.ell, ctx.s
    rng = env.rng(ell)
    subsets = [DefiningSet.of(ell, A) for k in range(ell + 1) for A in itertools.combinations(range(ell), k)]
    for A in subsets:
        label = 'A={}'.format(A.text())
        tally.check(label + ' invariance and closure', lambda: invariance_and_closure(ctx, A).consistent)
        if len(A):
            tally.check(label + ' generator polynomial', lambda: check_generator_polynomial(ctx, A))
        for t in range(s + 1):
            tally.check('{} t={} dual'.format(label, t),
                        lambda: dual(eval_code(ctx, A, t)) == dual_by_defining_set(ctx, A, t))
    singletons = [eval_code(ctx, [a]) for a in range(ell)]
    for a, b in itertools.product(range(ell), repeat=2):
        tally.check('B({{{}}}) ⊥ B({{{}}})'.format(a, b),
                    lambda: orthogonal(singletons[a], singletons[b]) == ((a + b) % ell != 0))
    for i in range(options.cases):
        A = DefiningSet.of(ell, random_subset(ell, rng))
        B = DefiningSet.of(ell, random_subset(ell, rng))
        label = 'A={} B={}'.format(A.text(), B.text())
        tally.check(label + ' orthogonality', lambda: orthogonal(eval_code(ctx, A), eval_code(ctx, B)) == (
            not A.members & B.opposite().members))
        tally.check(label + ' monotone', lambda: (A <= B) == eval_code(ctx, A).is_subcode_of(eval_code(ctx, B)))
    return tally.report()


@Suite.register('restriction')
def restriction_suite(options, env):
    tally = Tally('restriction')
    ctx = _context(options, env)
    ell = ctx.ell
    invariant = [DefiningSet.of(ell, A) for k in range(ell + 1) for A in itertools.combinations(range(ell), k)
                 if DefiningSet.of(ell, A).is_q_invariant(ctx.q)]
    for A in invariant:
        for t in range(ctx.s + 1):
            tally.check('A={} t={}'.format(A.text(), t), lambda: restricted_code(ctx, A, t) is not None)
    for index in all_multiindices(ctx):
        tally.check('multi-index {}'.format(index.text()), lambda: restricted_multiindex(ctx, index) is not None)
    return tally.report()


def intervals(ell: int) -> List[DefiningSet]:
    """Every interval ``{wu, w(u+1), ..., w(u+v-1)} mod ℓ`` with ``gcd(w, ℓ) = 1``."""
    found = set()
    for w in range(ell):
        if gcd(w, ell) != 1:
            continue
        for u in range(ell):
            for v in range(1, ell + 1):
                found.add(frozenset((w * (u + i)) % ell for i in range(v)))
    return [DefiningSet(ell, A) for A in sorted(found, key=lambda A: (len(A), sorted(A)))]


@Suite.register('bch')
def bch_suite(options, env):
    tally = Tally('bch')
    ctx = _context(options, env)
    for A in intervals(ctx.ell):
        for t in range(min(2, ctx.s + 1)):
            record = bch_check(ctx, A, t, env)
            tally.check('A={} t={}: weight {} designed {}'.format(
                A.text(), t, record.min_weight, record.designed_distance), lambda: record.holds)
    return tally.report()
