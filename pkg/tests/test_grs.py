import warnings

import numpy as np
import pytest

from hulldial.errors import (
    BadDimensionError,
    BadFamilyParamsError,
    DuplicateEvalPointsError,
    NotADivisorError,
    ZeroMultiplierError,
)
from hulldial.field import make_field, make_quadratic_field
from hulldial.code import is_hermitian_self_orthogonal, is_mds, min_distance
from hulldial.grs import (
    GrsSpec,
    MultiplierProblem,
    construct_family,
    full_field_rs,
    grs_generator,
    norm_substituted_polys,
    solve_multipliers,
    subgroup_eval_set,
    subgroup_union_eval_set,
    trace_nonzero_eval_set,
)
from oracles import gram_by_power_sums


def test_grs_spec_validation(gf9):
    with pytest.raises(DuplicateEvalPointsError):
        GrsSpec(gf9, (1, 1), (1, 1), 1)
    with pytest.raises(ZeroMultiplierError):
        GrsSpec(gf9, (1, 2), (1, 0), 1)
    with pytest.raises(BadDimensionError):
        GrsSpec(gf9, (1, 2), (1, 1), 3)
    ext = GrsSpec(gf9, (1, 2), (1, 1, 1), 3, extended=True)
    assert ext.length == 3


def test_generator_shapes(gf9):
    spec = GrsSpec(gf9, tuple(range(9)), (1,) * 9, 2)
    code = grs_generator(spec)
    assert (code.n, code.k) == (9, 2)
    assert min_distance(code) == 8
    ones = GrsSpec(gf9, tuple(range(5)), (1,) * 5, 1)
    assert min_distance(grs_generator(ones)) == 5


def test_extended_generator(gf9):
    spec = GrsSpec(gf9, tuple(range(9)), (1,) * 10, 1, extended=True)
    code = grs_generator(spec)
    assert (code.n, code.k) == (10, 1)
    assert min_distance(code) == 10


def test_full_field_rs(gf9, gf16):
    for q, field in ((3, gf9), (4, gf16)):
        for k in range(1, q):
            spec = full_field_rs(field, k)
            code = spec.code()
            assert is_hermitian_self_orthogonal(code)
            assert is_mds(code)
    with pytest.raises(BadDimensionError):
        full_field_rs(gf9, 3)
    with pytest.raises(BadDimensionError):
        full_field_rs(gf9, 0)


@pytest.mark.parametrize("q", [3, 4, 5])
def test_full_field_gram_matches_power_sums(q):
    field = make_quadratic_field(q)
    k = q - 1
    from hulldial.code import gram_matrix

    code = full_field_rs(field, k).code()
    direct = gram_by_power_sums(field, list(field.elements()), k)
    assert gram_matrix(code).tolist() == direct
    assert all(x == 0 for row in direct for x in row)


def test_solver_hand_verifiable_8_1(gf9):
    res = solve_multipliers(MultiplierProblem(gf9, tuple(range(1, 9)), 1))
    assert res.found
    w = [gf9.norm(v) for v in res.grs.multipliers]
    acc = 0
    for x in w:
        acc = gf9.add(acc, x)
    assert acc == 0  # the defining equation, summed by hand
    code = res.grs.code()
    assert (code.n, code.k) == (8, 1)
    assert min_distance(code) == 8
    assert is_hermitian_self_orthogonal(code)


def test_solver_hand_verifiable_10_1_extended(gf9):
    res = solve_multipliers(MultiplierProblem(gf9, tuple(range(9)), 1, extended=True))
    assert res.found
    code = res.grs.code()
    assert (code.n, code.k) == (10, 1)
    assert min_distance(code) == 10
    assert is_hermitian_self_orthogonal(code)


def test_solver_determinism(gf9):
    a = solve_multipliers(MultiplierProblem(gf9, tuple(range(1, 9)), 1))
    b = solve_multipliers(MultiplierProblem(gf9, tuple(range(1, 9)), 1))
    assert a.grs == b.grs and a.attempts == b.attempts


def test_solver_dimension_obstruction(gf9):
    res = solve_multipliers(MultiplierProblem(gf9, (0, 1), 2))
    assert res.status == "no-solution"
    assert res.grs is None


def test_solver_lift_norms(gf25):
    pts = subgroup_eval_set(gf25, 3)
    res = solve_multipliers(MultiplierProblem(gf25, pts, 2))
    assert res.found
    for v in res.grs.multipliers:
        assert gf25.in_subfield(gf25.norm(v))
        assert v != 0


def test_trace_eval_sets(gf9):
    # constant with c + c^q != 0: every point stays
    assert len(trace_nonzero_eval_set(gf9, [1])) == 9
    # g = x: the zero set is {0, w, 2w}
    pts = trace_nonzero_eval_set(gf9, [0, 1])
    assert pts == (1, 2, 4, 5, 7, 8)
    # zero polynomial: empty set, flagged
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        empty = trace_nonzero_eval_set(gf9, [0])
    assert empty == () and caught


def test_norm_substituted_polys_shapes(gf9):
    polys = list(norm_substituted_polys(gf9, 1))
    q = gf9.subfield_order
    for g in polys:
        for idx, coeff in enumerate(g):
            if idx % (q + 1) != 0:
                assert coeff == 0
    # degree-1 f gives degree q+1 g
    assert any(len(g) == q + 2 for g in polys)


def test_subgroup_eval_sets(gf9, gf25):
    assert subgroup_eval_set(gf9, 1) == tuple(range(1, 9))
    squares = subgroup_eval_set(gf9, 2)
    assert squares == (1, 2, 3, 6)  # the four squares of GF(9)*
    with pytest.raises(NotADivisorError):
        subgroup_eval_set(gf9, 3)
    union = subgroup_union_eval_set(gf25, 1, 3)
    assert len(union) == 24 + 8 - 8
    both = subgroup_eval_set(gf25, 3, cosets=(0, 1, 2))
    assert len(both) == 24  # all cosets reassemble the full group


def test_construct_family_full_field(gf9):
    res = construct_family(gf9, "full-field", k=2)
    assert res.found
    code = res.grs.code()
    assert (code.n, code.k) == (9, 2) and min_distance(code) == 8


def test_construct_family_q2plus1(gf9):
    res = construct_family(gf9, "q2plus1", k=3)
    assert res.found
    code = res.grs.code()
    assert (code.n, code.k) == (10, 3)
    assert is_hermitian_self_orthogonal(code)
    assert min_distance(code) == 8
    with pytest.raises(BadFamilyParamsError):
        construct_family(gf9, "q2plus1", k=2)  # k = q - 1 excluded


def test_construct_family_subgroup(gf25):
    res = construct_family(gf25, "subgroup", k=2, m=3)
    assert res.found
    code = res.grs.code()
    assert (code.n, code.k) == (8, 2)
    assert min_distance(code) == 7
    with pytest.raises(BadFamilyParamsError):
        construct_family(gf25, "subgroup", k=3, m=3)  # w bound violated
    with pytest.raises(BadFamilyParamsError):
        construct_family(gf25, "subgroup", k=1, m=2)  # even m


def test_construct_family_two_subgroup(gf25):
    res = construct_family(gf25, "two-subgroup", k=2, m1=1, m2=3)
    assert res.found
    assert res.grs.n_points == 24
    with pytest.raises(BadFamilyParamsError):
        construct_family(gf25, "two-subgroup", k=2, m1=3, m2=3)


def test_construct_family_trace_poly(gf9):
    res = construct_family(gf9, "trace-poly", k=2, g=[0, 1])
    assert res.found
    code = res.grs.code()
    assert (code.n, code.k) == (6, 2) and min_distance(code) == 5
    with pytest.raises(BadFamilyParamsError):
        construct_family(gf9, "trace-poly", k=2, g=[0, 0, 0, 1])  # degree too high


def test_construct_family_even_subgroup():
    gf49 = make_quadratic_field(7)
    res = construct_family(gf49, "even-subgroup", k=2, m=6)
    assert res.status in ("found", "no-solution", "not-found-within-budget")
    if res.found:
        code = res.grs.code()
        assert (code.n, code.k) == (8, 2)
        assert is_hermitian_self_orthogonal(code)
    gf25 = make_quadratic_field(5)
    with pytest.raises(BadFamilyParamsError):
        construct_family(gf25, "even-subgroup", k=1, m=4)  # m >= 6 required


def test_construct_family_unknown(gf9):
    with pytest.raises(BadFamilyParamsError):
        construct_family(gf9, "no-such-family", k=1)


def test_every_solver_output_is_verified(gf9, gf16, gf25, self_orthogonal_corpus):
    for tag, code in self_orthogonal_corpus:
        assert is_hermitian_self_orthogonal(code), tag


def test_grs_spec_serialization(gf9):
    spec = full_field_rs(gf9, 2)
    again = GrsSpec.from_dict(gf9, spec.to_dict())
    assert again == spec
