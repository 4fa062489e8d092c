from pytest import raises

from chain_codes import exceptions
from chain_codes.codes import (
    Code, all_codes, apply_automorphism, closure, closure_via_trace, code_from_generators, code_stabilizer,
    code_sum, contains, delsarte_check, dual, extension, full_code, galois_correspondence, interior,
    interior_via_restriction, intersect, invariance_record, is_galois_invariant, phi_prime, restriction,
    subcode_correspondence, theta_multiple, trace_code, zero_code,
)
from chain_codes.extension import Subgroup, Tower
from chain_codes.fixtures import fixture
from tests.utils import code


def test_type_and_cardinality():
    c = code('z4', '2 2; 1 1')
    assert c.rank == 1
    assert c.type == (1, 0)
    assert c.type_text() == '(2;1,0)'
    assert c.cardinality == 4
    assert c.free_rank == 1
    c = code('z4', '2 0; 0 2; 0 1')
    assert c.type == (1, 1)
    assert c.exponent == 3
    assert c.cardinality == 8


def test_generators():
    tower = fixture('z4')
    with raises(exceptions.LengthMismatch):
        code_from_generators(tower, [[1, 1], [1]])
    with raises(exceptions.LengthMismatch):
        code_from_generators(tower, [])
    assert code_from_generators(tower, [], 3) == zero_code(tower, 3)
    assert code_from_generators(tower, [[0, 0]]).is_zero()


def test_contains():
    c = code('z4', '1 1')
    assert contains(c, [3, 3])
    assert [2, 2] in c
    assert [1, 3] not in c
    with raises(exceptions.LengthMismatch):
        contains(c, [1, 1, 1])
    c = code('z4', '2 0')
    assert [2, 0] in c
    assert [1, 0] not in c


def test_codewords():
    c = code('z4', '1 1; 0 2')
    words = c.codewords()
    assert len(words) == c.cardinality == 8
    assert len(set(words)) == 8
    assert all(w in c for w in words)


def test_dual():
    c = code('z4', '1 1')
    assert dual(c) == code('z4', '1 3')
    assert dual(dual(c)) == c
    assert dual(zero_code(fixture('z4'), 2)) == full_code(fixture('z4'), 2)
    c = code('z4', '2 0')
    assert dual(c).type == (1, 1)
    with raises(exceptions.UsageError):
        dual(c, 'symplectic')


def test_hermitian():
    tower = fixture('gr42')
    c = code('gr42', '1 0,1')
    perp = dual(c, 'hermitian')
    assert perp.rank == 1
    for u in c.rows:
        for v in perp.rows:
            total = tower.top.zero
            for a, b in zip(u, v):
                total = total + a * tower.frobenius(b)
            assert total.is_zero()
    with raises(exceptions.HermitianRequiresEvenDegree):
        dual(code('gr43', '1 0,1,0'), 'hermitian')
    assert phi_prime(tower) == 'hermitian'
    assert phi_prime(fixture('gr43')) == 'euclidean'


def test_sum_and_intersection():
    a = code('z4', '1 0')
    b = code('z4', '0 1')
    assert code_sum(a, b) == full_code(fixture('z4'), 2)
    assert intersect(a, b).is_zero()
    c = code('z4', '1 1')
    assert intersect(code_sum(a, b), c) == c
    assert intersect(code('z4', '2 0; 0 2'), c) == code('z4', '2 2')
    with raises(exceptions.Mismatch):
        code_sum(a, code('z4', '1 0 0'))
    with raises(exceptions.Mismatch):
        code_sum(a, code('z9', '1 0'))


def test_subcodes():
    assert code('z4', '2 2').is_subcode_of(code('z4', '1 1'))
    assert not code('z4', '1 1').is_subcode_of(code('z4', '2 2'))


def test_theta_multiple():
    c = code('z4', '1 1; 0 2')
    assert theta_multiple(c, 1) == code('z4', '2 2')
    assert theta_multiple(c, 2).is_zero()
    assert theta_multiple(c, 0) == c


def test_restriction_and_trace():
    # spanned by (1, 2y) over GR(4,2): its closure has rank 2, its interior rank 1
    c = code('gr42', '1,0 0,2')
    res = restriction(c)
    assert res.tower == Tower.trivial(fixture('gr42').base)
    assert res == code('z4', '2 0')
    assert restriction(c, 'coordinates') == res
    assert trace_code(c).rank == 2
    assert closure(c).rank == 2
    assert interior(c).rank == 1
    assert interior(c) == interior_via_restriction(c)
    assert closure(c) == closure_via_trace(c)
    with raises(exceptions.UsageError):
        restriction(c, 'guess')


def test_extension():
    tower = fixture('gr42')
    base = code('z4', '1 1; 0 2')
    ext = extension(base, tower)
    assert ext.type == base.type
    assert is_galois_invariant(ext)
    assert restriction(ext) == base
    assert trace_code(ext) == base
    with raises(exceptions.Mismatch):
        extension(code('z9', '1 1'), tower)


def test_invariance():
    c = code('gr42', '1,0 0,2')
    record = invariance_record(c)
    assert record.consistent
    assert not record.rsf_over_base
    record = invariance_record(closure(c))
    assert record.consistent
    assert record.rsf_over_base


def test_delsarte():
    c = code('gr42', '1,0 0,2')
    for form in ('euclidean', 'hermitian'):
        record = delsarte_check(c, form)
        assert record.equal
    assert delsarte_check(c).form == 'hermitian'
    assert delsarte_check(code('gr43', '1,0,0 0,1,0')).equal


def test_galois_correspondence():
    c = code('gr42', '1,0 0,2')
    entries = galois_correspondence(c)
    assert [e.subgroup for e in entries] == [Subgroup(2, 1), Subgroup(2, 2)]
    assert entries[0].fixed == interior(c)
    assert entries[1].fixed == c
    assert all(e.round_trip for e in entries)
    assert code_stabilizer(c, c) == Subgroup(2, 2)
    with raises(exceptions.NotSubcode):
        code_stabilizer(interior(c), c)


def test_all_codes():
    assert len(all_codes(fixture('z4'), 1)) == 3
    codes = all_codes(fixture('z4'), 2)
    assert len(codes) == 15
    assert len(set(codes)) == 15
    assert codes[0].is_zero()
    assert isinstance(codes[-1], Code) and codes[-1].is_full()


def test_apply_automorphism():
    c = code('gr42', '1 0,1')
    image = apply_automorphism(c)
    assert image == code('gr42', '1 3,3')
    assert image != c
    assert apply_automorphism(image) == c
    assert apply_automorphism(c, 0) == c
    assert apply_automorphism(c, 2) == c
    assert apply_automorphism(dual(c)) == dual(image)
    base = extension(code('z4', '1 1'), fixture('gr42'))
    assert apply_automorphism(base) == base


def test_subcode_correspondence():
    c = code('gr42', '1,0 0,2')
    assert subcode_correspondence(c, Subgroup(2, 2)) == c
    assert subcode_correspondence(c, Subgroup(2, 1)) == interior(c) == code('gr42', '2 0')
    with raises(exceptions.InvalidSubgroup):
        subcode_correspondence(c, Subgroup(3, 1))
