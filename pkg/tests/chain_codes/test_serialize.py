from pytest import raises

from chain_codes import exceptions
from chain_codes.bounds import Inequality
from chain_codes.cyclic import DefiningSet, MultiIndex, cyclic_context
from chain_codes.fixtures import fixture
from chain_codes.serialize import (
    code_from_json, dumps, element_from_json, loads, mat_from_json, multiindex_from_json, ring_from_json,
    set_from_json, to_json, tower_from_json,
)
from tests.utils import code, elt


def test_dumps():
    assert dumps({'b': 1, 'a': [2]}) == '{"a":[2],"b":1}'
    assert dumps(elt('gr42', '1,2')) == '[1,2]'
    assert '\n' in dumps({'a': 1}, pretty=True)
    assert loads('[1, 2]') == [1, 2]
    with raises(exceptions.MalformedPayload):
        loads('{')
    with raises(exceptions.MalformedPayload):
        to_json(object())


def test_elements_and_matrices():
    Z4 = fixture('z4').top
    assert to_json(elt('z4', '3')) == [3]
    assert element_from_json(Z4, 7) == 3
    assert element_from_json(Z4, [2]) == 2
    with raises(exceptions.MalformedPayload):
        element_from_json(Z4, 'two')
    c = code('z4', '1 1; 0 2')
    assert mat_from_json(Z4, to_json(c.rsf)) == c.rsf
    with raises(exceptions.MalformedPayload):
        mat_from_json(Z4, [1, 2])


def test_rings_and_towers():
    tower = fixture('gr42')
    data = to_json(tower)
    assert data['m'] == 2
    assert data['base']['family'] == 'unramified'
    assert tower_from_json(data) == tower
    assert ring_from_json(to_json(tower.top)) == tower.top
    assert ring_from_json(to_json(fixture('z9').top)) == fixture('z9').top
    data['modulus_top'] = [[3], [3], [1]]
    with raises(exceptions.MalformedPayload):
        tower_from_json(data)
    with raises(exceptions.MalformedPayload):
        tower_from_json({'m': 2})


def test_codes():
    c = code('gr42', '1,0 0,2')
    data = to_json(c)
    assert data['type'] == [1, 0]
    assert data['length'] == 2
    assert code_from_json(data) == c
    assert code_from_json(loads(dumps(c))) == c
    data['type'] = [0, 1]
    with raises(exceptions.MalformedPayload):
        code_from_json(data)
    zero = code('z4', '0 0 0')
    assert code_from_json(to_json(zero)) == zero


def test_records():
    assert to_json(Inequality('a', 1, '<=', 2)) == {
        'name': 'a', 'lhs': 1, 'relation': '<=', 'rhs': 2, 'asserted': True, 'holds': True}
    ctx = cyclic_context(fixture('z4').top, 7)
    assert to_json(DefiningSet.of(7, [4, 1])) == [1, 4]
    assert to_json(MultiIndex.of(ctx, {0: 1, 1: 0, 3: 2})) == {'0': 1, '1': 0, '3': 2}
    data = to_json(ctx)
    assert data['m'] == 3
    assert data['cosets'] == [[0], [1, 2, 4], [3, 5, 6]]
    assert data['factors'][0] == [[3], [1]]


def test_sets_and_multiindices():
    assert set_from_json(7, [4, 1]) == DefiningSet.of(7, [1, 4])
    assert multiindex_from_json({'0': 1, '3': 2}) == {0: 1, 3: 2}
    with raises(exceptions.MalformedPayload):
        set_from_json(7, '1 2')
    with raises(exceptions.MalformedPayload):
        multiindex_from_json({'a': 1})
