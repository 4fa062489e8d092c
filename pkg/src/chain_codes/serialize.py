"""
    chain_codes.serialize
    ~~~~~~~~~~~~~~~~~~~~~

    JSON encoding of rings, towers, codes and the records produced by the
    library. :func:`to_json` turns any of them into plain JSON data; the
    ``*_from_json`` functions read back what the command line emits.

    Elements are encoded as their flattened integer coefficients, so an
    element of ``Z4`` is ``[3]`` and an element of ``GR(4,2)`` is ``[1, 2]``.
"""
import dataclasses
import enum
import json
from functools import singledispatch
from typing import Any, Optional

from . import exceptions
from .codes import Code, code_from_generators
from .cyclic import CosetTable, CyclicContext, DefiningSet, MultiIndex
from .extension import IntermediateRing, Subgroup, Tower, extend
from .linalg import Mat
from .poly import Polynomial
from .ring import Element, RingSpec, make_ring


def dumps(data, pretty: bool = False) -> str:
    if pretty:
        return json.dumps(to_json(data), indent=2, sort_keys=True, ensure_ascii=False)
    return json.dumps(to_json(data), sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def loads(src: str):
    try:
        return json.loads(src)
    except ValueError as ex:
        raise exceptions.MalformedPayload("invalid JSON: {}".format(ex))


@singledispatch
def to_json(obj) -> Any:
    if dataclasses.is_dataclass(obj):
        ret = {f.name: to_json(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
        for name in _DERIVED.get(type(obj).__name__, ()):
            ret[name] = to_json(getattr(obj, name))
        return ret
    if isinstance(obj, (list, tuple, frozenset, set)):
        items = [to_json(x) for x in obj]
        return sorted(items) if isinstance(obj, (set, frozenset)) else items
    if isinstance(obj, dict):
        return {str(k): to_json(v) for k, v in obj.items()}
    if isinstance(obj, enum.Enum):
        return obj.value
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    raise exceptions.MalformedPayload("cannot encode {!r} as JSON".format(obj))


# properties reported next to the dataclass fields
_DERIVED = {
    'Inequality': ('holds',),
    'BoundsReport': ('holds',),
    'BchRecord': ('designed_distance', 'holds'),
    'InvarianceRecord': ('consistent',),
    'DelsarteRecord': ('equal',),
    'CorrespondenceEntry': ('round_trip',),
    'SetCalculus': ('is_interval',),
}


@to_json.register(RingSpec)
def _ring_to_json(ring: RingSpec):
    if ring.base is not None:
        m = ring.relative_degree
        return {
            'base': to_json(ring.base),
            'm': m,
            'modulus_top': [list(ring.base._flatten(c)) for c in ring.modulus],
        }
    return {
        'family': ring.family.value,
        'p': ring.p,
        'n': ring.n,
        's': ring.s,
        'modulus': list(ring.modulus),
    }


@to_json.register(Tower)
def _tower_to_json(tower: Tower):
    return {
        'base': to_json(tower.base),
        'm': tower.m,
        'modulus_top': [list(e.key) for e in tower.modulus] if not tower.is_trivial else [],
    }


@to_json.register(Element)
def _element_to_json(e: Element):
    return list(e.key)


@to_json.register(Mat)
def _mat_to_json(mat: Mat):
    return [[list(e.key) for e in row] for row in mat.rows]


@to_json.register(Polynomial)
def _poly_to_json(poly: Polynomial):
    return [list(c.key) for c in poly.coeffs]


@to_json.register(Code)
def _code_to_json(code: Code):
    return {
        'tower': to_json(code.tower),
        'length': code.length,
        'rsf': to_json(code.rsf),
        'type': list(code.type),
    }


@to_json.register(Subgroup)
def _subgroup_to_json(subgroup: Subgroup):
    return {'m': subgroup.m, 'd': subgroup.d, 'order': subgroup.order}


@to_json.register(IntermediateRing)
def _intermediate_to_json(ring: IntermediateRing):
    return {'subgroup': to_json(ring.subgroup), 'degree': ring.degree, 'generator': to_json(ring.generator)}


@to_json.register(DefiningSet)
def _set_to_json(A: DefiningSet):
    return sorted(A.members)


@to_json.register(MultiIndex)
def _multiindex_to_json(index: MultiIndex):
    return {str(a): t for a, t in index.items()}


@to_json.register(CosetTable)
def _cosets_to_json(table: CosetTable):
    return {
        'ell': table.ell,
        'q': table.q,
        'representatives': list(table.representatives),
        'cosets': [list(c) for c in table.cosets],
        'sizes': list(table.sizes),
    }


@to_json.register(CyclicContext)
def _context_to_json(ctx: CyclicContext):
    return {
        'ring': to_json(ctx.ring),
        'ell': ctx.ell,
        'm': ctx.m,
        'cosets': [list(c) for c in ctx.cosets.cosets],
        'xi': to_json(ctx.xi),
        'factors': [to_json(ctx.factors[a]) for a in ctx.representatives],
        'idempotents': [to_json(ctx.idempotents[a]) for a in ctx.representatives],
    }


# decoding

def _require(data, key, kind=None):
    if not isinstance(data, dict) or key not in data:
        raise exceptions.MalformedPayload("missing field '{}'".format(key), field=key)
    value = data[key]
    if kind is not None and not isinstance(value, kind):
        raise exceptions.MalformedPayload("field '{}' has the wrong type".format(key), field=key)
    return value


def ring_from_json(data) -> RingSpec:
    if isinstance(data, dict) and 'base' in data:
        return tower_from_json(data).top
    return make_ring(_require(data, 'family', str), _require(data, 'p', int), _require(data, 'n', int),
                     _require(data, 's', int), _require(data, 'modulus', list))


def tower_from_json(data) -> Tower:
    base = ring_from_json(_require(data, 'base', dict))
    tower = extend(base, _require(data, 'm', int))
    given = data.get('modulus_top')
    if given and [list(k) for k in given] != [list(e.key) for e in tower.modulus]:
        raise exceptions.MalformedPayload("the top modulus does not match the canonical extension of {}".format(
            base.label))
    return tower


def element_from_json(ring: RingSpec, data) -> Element:
    if isinstance(data, int):
        return ring.from_int(data)
    if not isinstance(data, list) or not all(isinstance(x, int) for x in data):
        raise exceptions.MalformedPayload("an element is a list of integers, got {!r}".format(data))
    return ring.from_key(data)


def mat_from_json(ring: RingSpec, data, ncols: Optional[int] = None) -> Mat:
    if not isinstance(data, list) or not all(isinstance(row, list) for row in data):
        raise exceptions.MalformedPayload("a matrix is a list of rows")
    return Mat(ring, [[element_from_json(ring, e) for e in row] for row in data], ncols)


def code_from_json(data) -> Code:
    tower = tower_from_json(_require(data, 'tower', dict))
    length = _require(data, 'length', int)
    code = code_from_generators(tower, mat_from_json(tower.top, _require(data, 'rsf', list), length), length)
    given = data.get('type')
    if given is not None and list(given) != list(code.type):
        raise exceptions.MalformedPayload("the stated type {} differs from the computed {}".format(
            given, list(code.type)))
    return code


def set_from_json(ell: int, data) -> DefiningSet:
    if not isinstance(data, list) or not all(isinstance(a, int) for a in data):
        raise exceptions.MalformedPayload("a defining set is a list of integers")
    return DefiningSet.of(ell, data)


def multiindex_from_json(data) -> dict:
    if not isinstance(data, dict):
        raise exceptions.MalformedPayload("a multi-index maps representatives to levels")
    try:
        return {int(a): int(t) for a, t in data.items()}
    except (TypeError, ValueError):
        raise exceptions.MalformedPayload("a multi-index maps integers to integers")
