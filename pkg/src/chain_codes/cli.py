"""
    chain_codes.cli
    ~~~~~~~~~~~~~~~

    The ``chain-codes`` command line.

    Commands are plain functions registered under a dotted name with
    :meth:`ChainCodes.command`; ``code.rsf`` becomes ``chain-codes code rsf``.
    A command receives the :class:`Command` instance carrying the parsed
    switches and returns an :class:`Output`, printed as aligned text or,
    with ``--json``, as canonical JSON.

    Exit codes: 0 on success, 1 on a domain error (reported as an error
    object), 2 on a usage error.
"""
import logging
import sys
from typing import Any, Callable, Dict, List, Optional

from plumbum import cli

from . import defaults, exceptions, serialize
from .bounds import bounds_report
from .codes import (
    FORMS, Code, closure, code_from_generators, code_sum, delsarte_check, dual, extension, interior, intersect,
    invariance_record, is_galois_invariant, restriction, trace_code,
)
from .cyclic import (
    DefiningSet, MultiIndex, bch_check, code_from_multiindex, cyclic_context, cyclotomic_cosets, eval_code,
    generator_polynomial, invariance_and_closure, min_weight, multiindex_of, restricted_multiindex,
    restricted_code, set_calculus,
)
from .environment import Environment
from .extension import Tower, extend
from .fixtures import fixture, fixture_names
from .linalg import row_standard_form
from .ring import Element, RingSpec, make_ring
from .suites import SuiteOptions, run_suite
from .textformat import (
    format_matrix, format_poly, format_set, parse_element, parse_matrix, parse_multiindex, parse_poly, parse_set,
)


logger = logging.getLogger(__name__)


class Output:
    def __init__(self, data: Any, text: str, retcode: int = 0) -> None:
        self.data = data
        self.text = text
        self.retcode = retcode


class Group(cli.Application):
    def main(self, *args):
        if args:
            print("Unknown command {}".format(args[0]), file=sys.stderr)
            return 2
        if not self.nested_command:
            self.help()
            return 2


class ChainCodes(Group):
    """Linear and cyclic codes over finite chain rings."""
    PROGNAME = 'chain-codes'
    VERSION = '0.1'
    subcommands = {}  # type: Dict[str, Any]

    @classmethod
    def command(cls, name: str):
        """Registers `func` as the command with the dotted `name`, creating the intermediate groups."""
        def decorator(func: Callable[['Command'], Output]):
            app = cls
            subcmds = cls.subcommands
            path = name.split('.')
            for sub in path[:-1]:
                if sub not in subcmds:
                    sub_app = type(sub.capitalize() + 'Group', (Group,), {'__doc__': 'The {} commands'.format(sub)})
                    app.subcommand(sub)(sub_app)
                    subcmds[sub] = (sub_app, {})
                app, subcmds = subcmds[sub]
            leaf = type(''.join(p.capitalize() for p in path) + 'Command', (Command,),
                        {'__doc__': func.__doc__, 'run_command': staticmethod(func)})
            app.subcommand(path[-1])(leaf)
            subcmds[path[-1]] = (leaf, {})
            return func
        return decorator


class Command(cli.Application):
    """A leaf command; the switches are shared by all of them and each command reads the ones it needs."""

    json = cli.Flag(['--json'], help="Print JSON instead of text")
    seed = cli.SwitchAttr(['--seed'], int, default=defaults.SEED, help="Seed of the randomized checks")
    guard = cli.SwitchAttr(['--guard'], int, default=defaults.GUARD_BITS, help="Enumeration guard, in bits")
    log_level = cli.SwitchAttr(['--log-level'], cli.Set('DEBUG', 'INFO', 'WARNING', 'ERROR', case_sensitive=False),
                               default=defaults.LOG_LEVEL)

    fixture = cli.SwitchAttr(['--fixture', '--ring'], str, default=None, help="A named ring or tower")
    family = cli.SwitchAttr(['--family'], cli.Set('unramified', 'equal-characteristic'), default=None)
    p = cli.SwitchAttr(['--p'], int, default=None)
    n = cli.SwitchAttr(['--n'], int, default=1)
    s = cli.SwitchAttr(['--s'], int, default=1)
    modulus = cli.SwitchAttr(['--modulus'], str, default=None, help="Integer coefficients, constant term first")
    m = cli.SwitchAttr(['--m'], int, default=None, help="Extension degree")

    matrix = cli.SwitchAttr(['--matrix'], str, default=None, help="Rows separated by ';', '-' reads stdin")
    matrix2 = cli.SwitchAttr(['--matrix2'], str, default=None)
    code_json = cli.SwitchAttr(['--code'], str, default=None, help="A JSON code object, '-' reads stdin")
    code2_json = cli.SwitchAttr(['--code2'], str, default=None)
    element = cli.SwitchAttr(['--element'], str, default=None)
    power = cli.SwitchAttr(['--power'], int, default=1)
    form = cli.SwitchAttr(['--form'], cli.Set(*FORMS), default=None)
    method = cli.SwitchAttr(['--method'], cli.Set('interior', 'coordinates'), default='interior')

    ell = cli.SwitchAttr(['--ell'], int, default=None)
    q = cli.SwitchAttr(['--q'], int, default=None)
    t = cli.SwitchAttr(['--t'], int, default=0)
    u = cli.SwitchAttr(['--u'], int, default=1)
    defining_set = cli.SwitchAttr(['--set'], str, default=None)
    poly = cli.SwitchAttr(['--poly'], str, default=None)
    multiindex = cli.SwitchAttr(['--multiindex'], str, default=None, help="Pairs a:t")

    cases = cli.SwitchAttr(['--cases'], int, default=None)
    transforms = cli.SwitchAttr(['--transforms'], int, default=None)

    run_command = None  # type: Callable[[Command], Output]

    def main(self, *args):
        logging.basicConfig(level=self.log_level.upper(), format=defaults.LOG_FORMAT)
        self.positional = args
        try:
            out = self.run_command(self)
        except exceptions.ChainCodesError as ex:
            logger.debug("Command failed", exc_info=True)
            self.report_error(ex)
            return 2 if isinstance(ex, exceptions.UsageError) else 1
        if self.json:
            print(serialize.dumps(out.data))
        else:
            print(out.text)
        return out.retcode

    def report_error(self, ex: exceptions.ChainCodesError) -> None:
        if self.json:
            print(serialize.dumps(ex.to_json()))
        else:
            print(str(ex), file=sys.stderr)

    # inputs

    @property
    def env(self) -> Environment:
        return Environment(guard_bits=self.guard, seed=self.seed, cases=self.cases)

    def read(self, value: str) -> str:
        return sys.stdin.read() if value == '-' else value

    def require(self, value, switch: str):
        if value is None:
            raise exceptions.MissingPayload("this command needs {}".format(switch), switch=switch)
        return value

    def tower(self) -> Tower:
        if self.fixture is not None:
            return fixture(self.fixture)
        if self.family is not None:
            self.require(self.p, '--p')
            modulus = [int(c) for c in self.modulus.split()] if self.modulus else None
            return Tower.trivial(make_ring(self.family, self.p, self.n, self.s, modulus))
        raise exceptions.MissingPayload("give a ring with --fixture or --family/--p/--n/--s", switch='--fixture')

    def ring(self) -> RingSpec:
        return self.tower().top

    def code(self, second: bool = False) -> Code:
        payload = self.code2_json if second else self.code_json
        text = self.matrix2 if second else self.matrix
        if payload is not None:
            data = serialize.loads(self.read(payload))
            if isinstance(data, dict) and 'code' in data:
                data = data['code']
            return serialize.code_from_json(data)
        tower = self.tower()
        switch = '--matrix2' if second else '--matrix'
        mat = parse_matrix(tower.top, self.read(self.require(text, switch)))
        return code_from_generators(tower, mat)

    def element_arg(self, ring: RingSpec) -> Element:
        return parse_element(ring, self.require(self.element, '--element'))

    def ell_arg(self) -> int:
        return self.require(self.ell, '--ell')

    def set_arg(self, ell: int) -> DefiningSet:
        return DefiningSet.of(ell, parse_set(self.read(self.require(self.defining_set, '--set'))))


# text helpers

def _elt(e: Element) -> str:
    text = e.text()
    return '(' + text + ')' if ',' in text else text


def _elements(elements) -> str:
    return '{' + ','.join(_elt(e) for e in elements) + '}'


def code_text(code: Code) -> str:
    lines = ['{} code of length {}'.format(code.tower.label, code.length)]
    lines.append(format_matrix(code.rsf) if code.rank else '(zero code)')
    lines.append('type ' + code.type_text())
    return '\n'.join(lines)


def _code_output(code: Code, **extra) -> Output:
    data = {'code': serialize.to_json(code)}
    data.update({k: serialize.to_json(v) for k, v in extra.items()})
    return Output(data, code_text(code))


def _ring_summary(ring: RingSpec) -> Dict[str, Any]:
    return {
        'ring': serialize.to_json(ring),
        'label': ring.label,
        'q': ring.q,
        'size': ring.size,
        'units': ring.unit_count,
        'teichmuller': serialize.to_json(ring.teichmuller),
        'theta': serialize.to_json(ring.theta),
    }


# rings

@ChainCodes.command('ring.show')
def ring_show(cmd: Command) -> Output:
    """Show a chain ring"""
    ring = cmd.ring()
    text = '\n'.join([
        ring.label,
        'p = {}, n = {}, s = {}, q = {}'.format(ring.p, ring.n, ring.s, ring.q),
        'size = {}'.format(ring.size),
        'units = {}'.format(ring.unit_count),
        'θ = {}'.format(ring.theta.text()),
        'Γ = {}'.format(_elements(ring.teichmuller)),
    ])
    return Output(_ring_summary(ring), text)


@ChainCodes.command('ring.list')
def ring_list(cmd: Command) -> Output:
    """List the named rings and towers"""
    towers = [(name, fixture(name)) for name in fixture_names()]
    data = [{'name': name, 'label': t.label, 'm': t.m, 'tower': serialize.to_json(t)} for name, t in towers]
    width = max(len(name) for name, _ in towers)
    return Output(data, '\n'.join('{} {}'.format(name.ljust(width), t.label) for name, t in towers))


# extensions

def _tower_arg(cmd: Command) -> Tower:
    tower = cmd.tower()
    if cmd.m is not None:
        if not tower.is_trivial:
            raise exceptions.UsageError("--m needs a base ring, {} is already an extension".format(tower.label))
        return extend(tower.top, cmd.m, cmd.env)
    return tower


@ChainCodes.command('ext.build')
def ext_build(cmd: Command) -> Output:
    """Build the degree m extension of a ring"""
    tower = _tower_arg(cmd)
    data = {
        'tower': serialize.to_json(tower),
        'label': tower.label,
        'm': tower.m,
        'basis': serialize.to_json(tower.basis),
        'gram': serialize.to_json(tower.gram),
        'dual_basis': serialize.to_json(tower.dual_basis),
    }
    text = '\n'.join([
        tower.label,
        'm = {}'.format(tower.m),
        'h = {}'.format(' '.join(_elt(c) for c in tower.modulus)),
        'basis = {}'.format(' '.join(_elt(a) for a in tower.basis)),
        'dual basis = {}'.format(' '.join(_elt(a) for a in tower.dual_basis)),
    ])
    return Output(data, text)


@ChainCodes.command('ext.trace')
def ext_trace(cmd: Command) -> Output:
    """The trace of an element of the top ring"""
    tower = _tower_arg(cmd)
    a = cmd.element_arg(tower.top)
    tr = tower.trace(a)
    return Output({'element': serialize.to_json(a), 'trace': serialize.to_json(tr)}, tr.text())


@ChainCodes.command('ext.frobenius')
def ext_frobenius(cmd: Command) -> Output:
    """Apply a power of the Frobenius automorphism"""
    tower = _tower_arg(cmd)
    a = cmd.element_arg(tower.top)
    image = tower.frobenius(a, cmd.power)
    data = {'element': serialize.to_json(a), 'power': cmd.power, 'image': serialize.to_json(image),
            'period': tower.period(a)}
    return Output(data, image.text())


@ChainCodes.command('ext.dualbasis')
def ext_dualbasis(cmd: Command) -> Output:
    """The trace dual basis and the Gram matrix"""
    tower = _tower_arg(cmd)
    data = {
        'basis': serialize.to_json(tower.basis),
        'gram': serialize.to_json(tower.gram),
        'dual_basis': serialize.to_json(tower.dual_basis),
        'biorthogonal': tower.is_biorthogonal(),
    }
    text = 'gram\n{}\ndual basis = {}'.format(format_matrix(tower.gram),
                                             ' '.join(_elt(a) for a in tower.dual_basis))
    return Output(data, text)


# codes

@ChainCodes.command('code.rsf')
def code_rsf(cmd: Command) -> Output:
    """The row standard form of a generator matrix"""
    tower = cmd.tower()
    mat = parse_matrix(tower.top, cmd.read(cmd.require(cmd.matrix, '--matrix')))
    report = row_standard_form(mat)
    code = code_from_generators(tower, mat)
    return _code_output(code, pivots=[list(p) for p in report.pivots],
                        transform=[[x.text() if isinstance(x, Element) else x for x in op] for op in report.transform])


@ChainCodes.command('code.dual')
def code_dual(cmd: Command) -> Output:
    """The dual code"""
    return _code_output(dual(cmd.code(), cmd.form or 'euclidean'))


@ChainCodes.command('code.res')
def code_res(cmd: Command) -> Output:
    """The restriction code over the base ring"""
    return _code_output(restriction(cmd.code(), cmd.method))


@ChainCodes.command('code.trace')
def code_trace(cmd: Command) -> Output:
    """The trace code over the base ring"""
    return _code_output(trace_code(cmd.code()))


@ChainCodes.command('code.ext')
def code_ext(cmd: Command) -> Output:
    """The extension of a code over the base ring to the tower"""
    tower = _tower_arg(cmd)
    if cmd.code_json is not None:
        base = cmd.code()
    else:
        mat = parse_matrix(tower.base, cmd.read(cmd.require(cmd.matrix, '--matrix')))
        base = code_from_generators(Tower.trivial(tower.base), mat)
    return _code_output(extension(base, tower))


@ChainCodes.command('code.closure')
def code_closure(cmd: Command) -> Output:
    """The Galois closure"""
    return _code_output(closure(cmd.code()))


@ChainCodes.command('code.interior')
def code_interior(cmd: Command) -> Output:
    """The Galois interior"""
    return _code_output(interior(cmd.code()))


@ChainCodes.command('code.invariant')
def code_invariant(cmd: Command) -> Output:
    """Check Galois invariance three ways"""
    code = cmd.code()
    record = invariance_record(code)
    if not record.consistent:
        raise exceptions.OracleFailure("the invariance criteria disagree for {}".format(code))
    text = 'invariant' if record.rsf_over_base else 'not invariant'
    return Output({'code': serialize.to_json(code), 'invariance': serialize.to_json(record),
                   'invariant': is_galois_invariant(code)}, text)


@ChainCodes.command('code.sum')
def code_sum_command(cmd: Command) -> Output:
    """The sum of two codes"""
    return _code_output(code_sum(cmd.code(), cmd.code(second=True)))


@ChainCodes.command('code.intersect')
def code_intersect(cmd: Command) -> Output:
    """The intersection of two codes"""
    return _code_output(intersect(cmd.code(), cmd.code(second=True)))


@ChainCodes.command('code.bounds')
def code_bounds(cmd: Command) -> Output:
    """Level sets and rank bounds"""
    report = bounds_report(cmd.code())
    lines = ['level set {}'.format(' '.join(str(m) for m in report.level_set))]
    lines.extend(i.text() for i in report.inequalities)
    return Output(serialize.to_json(report), '\n'.join(lines), 0 if report.holds else 1)


@ChainCodes.command('code.delsarte')
def code_delsarte(cmd: Command) -> Output:
    """Compare the trace of the dual with the dual of the restriction"""
    record = delsarte_check(cmd.code(), cmd.form)
    text = '{} form: {}\n{}'.format(record.form, 'equal' if record.equal else 'DIFFERENT', code_text(record.lhs))
    return Output(serialize.to_json(record), text, 0 if record.equal else 1)


# cyclic codes

def _context(cmd: Command):
    return cyclic_context(cmd.ring(), cmd.ell_arg(), cmd.env)


@ChainCodes.command('cyclic.cosets')
def cyclic_cosets(cmd: Command) -> Output:
    """The q-cyclotomic cosets modulo ℓ"""
    q = cmd.q if cmd.q is not None else cmd.ring().q
    table = cyclotomic_cosets(cmd.ell_arg(), q)
    return Output(serialize.to_json(table), table.text())


@ChainCodes.command('cyclic.context')
def cyclic_context_command(cmd: Command) -> Output:
    """Factors of x^ℓ - 1 and the primitive idempotents"""
    ctx = _context(cmd)
    lines = ['{} ℓ = {} m = {}'.format(ctx.ring.label, ctx.ell, ctx.m), 'cosets ' + ctx.cosets.text()]
    for a in ctx.representatives:
        lines.append('Λ_{} = {}'.format(a, format_poly(ctx.factors[a])))
        lines.append('e_{} = {}'.format(a, format_poly(ctx.idempotents[a])))
    return Output(serialize.to_json(ctx), '\n'.join(lines))


@ChainCodes.command('cyclic.sets')
def cyclic_sets(cmd: Command) -> Output:
    """Closure, opposite, complement and intervals of a defining set"""
    ell = cmd.ell_arg()
    q = cmd.q if cmd.q is not None else cmd.ring().q
    calc = set_calculus(cmd.set_arg(ell), q, cmd.u)
    lines = [
        'q-closure {}'.format(format_set(calc.q_closure)),
        'opposite {}'.format(format_set(calc.opposite)),
        'complement {}'.format(format_set(calc.complement)),
        'multiples {}'.format(format_set(calc.multiples)),
        'q-invariant {}'.format('yes' if calc.is_q_invariant else 'no'),
        'interval {}'.format(calc.interval or 'no'),
        'longest interval {}'.format(calc.longest_interval or 'none'),
    ]
    return Output(serialize.to_json(calc), '\n'.join(lines))


@ChainCodes.command('cyclic.eval')
def cyclic_eval(cmd: Command) -> Output:
    """The evaluation code B_t(A)"""
    ctx = _context(cmd)
    return _code_output(eval_code(ctx, cmd.set_arg(ctx.ell), cmd.t))


@ChainCodes.command('cyclic.invariance')
def cyclic_invariance(cmd: Command) -> Output:
    """Galois invariance and closure of B_t(A)"""
    ctx = _context(cmd)
    record = invariance_and_closure(ctx, cmd.set_arg(ctx.ell), cmd.t)
    return Output(serialize.to_json(record), 'invariant' if record.galois_invariant else 'not invariant')


@ChainCodes.command('cyclic.genpoly')
def cyclic_genpoly(cmd: Command) -> Output:
    """The generator polynomial of B(A)"""
    ctx = _context(cmd)
    g = generator_polynomial(ctx, cmd.set_arg(ctx.ell))
    return Output({'poly': serialize.to_json(g), 'degree': g.degree}, format_poly(g))


@ChainCodes.command('cyclic.ideal')
def cyclic_ideal(cmd: Command) -> Output:
    """The cyclic code generated by a polynomial"""
    ctx = _context(cmd)
    g = parse_poly(ctx.ring, cmd.read(cmd.require(cmd.poly, '--poly')))
    return _code_output(ctx.ideal_code(g), poly=g)


@ChainCodes.command('cyclic.multiindex')
def cyclic_multiindex(cmd: Command) -> Output:
    """The cyclic code of a multi-index, or the multi-index of a cyclic code"""
    ctx = _context(cmd)
    if cmd.multiindex is not None:
        index = MultiIndex.of(ctx, parse_multiindex(cmd.multiindex))
        return _code_output(code_from_multiindex(ctx, index), multiindex=index)
    index = multiindex_of(ctx, cmd.code())
    return Output({'multiindex': serialize.to_json(index)}, index.text())


@ChainCodes.command('cyclic.restrict')
def cyclic_restrict(cmd: Command) -> Output:
    """The restricted code Tr(B_{s-t}(A))^⊥, or that of a multi-index"""
    ctx = _context(cmd)
    if cmd.multiindex is not None:
        index = MultiIndex.of(ctx, parse_multiindex(cmd.multiindex))
        result = restricted_multiindex(ctx, index)
        return _code_output(result.code, matrix=result.matrix, rank=result.expected_rank)
    A = cmd.set_arg(ctx.ell)
    return _code_output(restricted_code(ctx, A, cmd.t))


@ChainCodes.command('cyclic.bch')
def cyclic_bch(cmd: Command) -> Output:
    """Compare the minimum weight with the designed distance"""
    ctx = _context(cmd)
    record = bch_check(ctx, cmd.set_arg(ctx.ell), cmd.t, cmd.env)
    text = 'interval (w, u, v) = {}\ndesigned distance {}\nminimum weight {}\n{}'.format(
        record.interval, record.designed_distance,
        record.min_weight if record.min_weight is not None else '- (zero code)',
        'holds' if record.holds else 'FAILS')
    return Output(serialize.to_json(record), text, 0 if record.holds else 1)


@ChainCodes.command('cyclic.minweight')
def cyclic_minweight(cmd: Command) -> Output:
    """The minimum Hamming weight of a code"""
    env = cmd.env
    w = min_weight(cmd.code(), env.clone(weight_guard_bits=min(env.weight_guard_bits, cmd.guard)))
    return Output({'min_weight': w}, str(w))


# verification

@ChainCodes.command('verify')
def verify(cmd: Command) -> Output:
    """Run a property suite"""
    if len(cmd.positional) != 1:
        raise exceptions.UsageError("verify needs exactly one suite name")
    fixtures = tuple(f for f in (cmd.fixture or '').split(',') if f)
    options = SuiteOptions(fixtures=fixtures, ell=cmd.ell, cases=cmd.cases, transforms=cmd.transforms)
    report = run_suite(cmd.positional[0], options, cmd.env)
    return Output(serialize.to_json(report), report.text(), 0 if report.ok else 1)


def main(argv: Optional[List[str]] = None):
    """Console entry point; `argv` excludes the program name."""
    if argv is None:
        ChainCodes.run()
    else:
        ChainCodes.run([ChainCodes.PROGNAME] + list(argv))
