import numpy as np
import pytest

from hulldial.errors import (
    BadPermutationError,
    OddExtensionError,
    RankDeficientError,
    ShapeMismatchError,
    SpecMismatchError,
)
from hulldial.field import make_field
from hulldial.matrix import (
    FieldMatrix,
    conj_transpose,
    frobenius_entrywise,
    hstack,
    intersect_row_spaces,
    matmul,
    null_space,
    permute_columns,
    rank,
    row_space_contains,
    rref,
    same_row_space,
    scale_columns,
    standard_form,
    transpose,
    vstack,
)
from oracles import minor_rank


@pytest.fixture(scope="module")
def gf3():
    return make_field(3, 1)


def _random_matrix(field, rng, rows, cols):
    return FieldMatrix(field, rng.integers(0, field.order, size=(rows, cols)))


def test_matmul_identity_and_zero(gf9):
    rng = np.random.default_rng(1)
    m = _random_matrix(gf9, rng, 3, 4)
    assert matmul(FieldMatrix.identity(gf9, 3), m) == m
    z = FieldMatrix.zeros(gf9, 4, 2)
    assert matmul(m, z) == FieldMatrix.zeros(gf9, 3, 2)


def test_matmul_1x1_reduces_to_field_mul(gf9):
    a = FieldMatrix(gf9, [[4]])
    assert matmul(a, a) == FieldMatrix(gf9, [[6]])  # (w+1)^2 = 2w


def test_matmul_shape_and_spec_errors(gf9, gf3, gf25):
    with pytest.raises(ShapeMismatchError):
        matmul(FieldMatrix.zeros(gf9, 2, 3), FieldMatrix.zeros(gf9, 2, 3))
    with pytest.raises(SpecMismatchError):
        matmul(FieldMatrix.zeros(gf9, 2, 3), FieldMatrix.zeros(gf25, 3, 2))


def test_conj_transpose_examples(gf9):
    assert conj_transpose(FieldMatrix(gf9, [[3]])) == FieldMatrix(gf9, [[6]])
    ident = FieldMatrix.identity(gf9, 4)
    assert conj_transpose(ident) == ident
    m = FieldMatrix(gf9, np.arange(6).reshape(2, 3))
    assert conj_transpose(m).shape == (3, 2)
    assert conj_transpose(conj_transpose(m)) == m


def test_conj_transpose_odd_extension(gf3):
    with pytest.raises(OddExtensionError):
        conj_transpose(FieldMatrix.identity(gf3, 2))


def test_conj_transpose_reverses_products(gf9):
    rng = np.random.default_rng(2)
    for _ in range(25):
        a = _random_matrix(gf9, rng, 2, 3)
        b = _random_matrix(gf9, rng, 3, 4)
        assert conj_transpose(matmul(a, b)) == matmul(conj_transpose(b), conj_transpose(a))


def test_rref_examples(gf3, gf9):
    ident = FieldMatrix.identity(gf9, 3)
    r, piv = rref(ident)
    assert r == ident and piv == (0, 1, 2)
    r, piv = rref(FieldMatrix(gf3, [[1, 1], [2, 2]]))
    assert r == FieldMatrix(gf3, [[1, 1], [0, 0]]) and piv == (0,)


def test_rref_idempotent_bit_exact(gf9):
    rng = np.random.default_rng(3)
    for _ in range(40):
        m = _random_matrix(gf9, rng, 3, 6)
        r1, p1 = rref(m)
        r2, p2 = rref(r1)
        assert r1 == r2 and p1 == p2
        assert same_row_space(m, r1)
        assert list(p1) == sorted(p1)


def test_rank_properties(gf9):
    assert rank(FieldMatrix.zeros(gf9, 3, 5)) == 0
    assert rank(FieldMatrix.identity(gf9, 4)) == 4
    rng = np.random.default_rng(4)
    for _ in range(10):
        m = _random_matrix(gf9, rng, 3, 5)
        assert rank(m) == rank(transpose(m))
        assert rank(m) == minor_rank(gf9, m.tolist())


def test_null_space_examples(gf3, gf9):
    ns = null_space(FieldMatrix(gf3, [[1, 1]]))
    assert ns.rows == 1
    # spans {(a, 2a)}
    assert row_space_contains(ns, [1, 2])
    assert null_space(FieldMatrix.identity(gf9, 3)).rows == 0
    rng = np.random.default_rng(5)
    for _ in range(20):
        m = _random_matrix(gf9, rng, 3, 6)
        ns = null_space(m)
        assert ns.rows + rank(m) == m.cols
        if ns.rows:
            prod = matmul(m, transpose(ns))
            assert not np.any(prod.data)


def test_null_space_of_empty_matrix(gf9):
    ns = null_space(FieldMatrix.zeros(gf9, 0, 4))
    assert ns.rows == 4 and rank(ns) == 4


def test_intersect_row_spaces(gf3, gf9):
    a = FieldMatrix(gf3, [[1, 0]])
    b = FieldMatrix(gf3, [[0, 1]])
    assert intersect_row_spaces(a, b).rows == 0
    rng = np.random.default_rng(6)
    for _ in range(20):
        m = _random_matrix(gf9, rng, 2, 5)
        both = intersect_row_spaces(m, m)
        assert both.rows == rank(m)
        assert same_row_space(both, m)


def test_intersection_matches_exhaustive_enumeration(gf9):
    # dim(U cap V) against literal row-space enumeration
    import itertools

    rng = np.random.default_rng(7)
    for _ in range(6):
        a = _random_matrix(gf9, rng, 2, 4)
        b = _random_matrix(gf9, rng, 2, 4)

        def span(m):
            vecs = set()
            rows = [m.row(i) for i in range(m.rows)]
            for coef in itertools.product(gf9.elements(), repeat=m.rows):
                v = tuple(
                    # scalar accumulation, independent of the library path
                    _dot(gf9, coef, [r[j] for r in rows])
                    for j in range(m.cols)
                )
                vecs.add(v)
            return vecs

        inter = span(a) & span(b)
        got = intersect_row_spaces(a, b)
        assert gf9.order**got.rows == len(inter)


def _dot(field, coef, column):
    acc = 0
    for c, x in zip(coef, column):
        acc = field.add(acc, field.mul(c, x))
    return acc


def test_standard_form(gf3, gf9):
    ident_like = FieldMatrix(gf9, [[1, 0, 5], [0, 1, 7]])
    out, perm = standard_form(ident_like)
    assert out == ident_like and perm == (0, 1, 2)
    out, perm = standard_form(FieldMatrix(gf3, [[0, 1]]))
    assert out == FieldMatrix(gf3, [[1, 0]]) and perm == (1, 0)
    rng = np.random.default_rng(8)
    done = 0
    while done < 20:
        m = _random_matrix(gf9, rng, 2, 5)
        if rank(m) < 2:
            continue
        out, perm = standard_form(m)
        assert np.array_equal(out.data[:, :2], np.eye(2, dtype=np.int64))
        assert same_row_space(out, permute_columns(m, perm))
        done += 1
    with pytest.raises(RankDeficientError):
        standard_form(FieldMatrix(gf9, [[1, 1], [1, 1]]))


def test_zero_row_matrices_are_legal(gf9):
    empty = FieldMatrix.zeros(gf9, 0, 3)
    assert rank(empty) == 0
    assert rref(empty)[1] == ()
    assert intersect_row_spaces(empty, FieldMatrix.identity(gf9, 3)).rows == 0
    out, perm = standard_form(empty)
    assert out.rows == 0 and perm == (0, 1, 2)


def test_scale_and_permute_columns(gf9):
    m = FieldMatrix(gf9, [[1, 2, 3]])
    assert scale_columns(m, (1, 1, 1)) == m
    with pytest.raises(BadPermutationError):
        permute_columns(m, (0, 0, 1))
    assert permute_columns(m, (2, 1, 0)) == FieldMatrix(gf9, [[3, 2, 1]])


def test_stacking(gf9):
    a = FieldMatrix(gf9, [[1, 2]])
    b = FieldMatrix(gf9, [[3, 4]])
    assert vstack(a, b) == FieldMatrix(gf9, [[1, 2], [3, 4]])
    assert hstack(a, b) == FieldMatrix(gf9, [[1, 2, 3, 4]])


def test_matrix_json_round_trip(gf9):
    rng = np.random.default_rng(9)
    m = _random_matrix(gf9, rng, 2, 3)
    assert FieldMatrix.from_dict(gf9, m.to_dict()) == m


def test_frobenius_entrywise(gf9):
    m = FieldMatrix(gf9, [[3, 4]])
    fr = frobenius_entrywise(m, 1)
    assert fr == FieldMatrix(gf9, [[gf9.frobenius(3, 1), gf9.frobenius(4, 1)]])
