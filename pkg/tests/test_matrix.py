import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from supertropical.checks import random_matrix
from supertropical.element import ONE, ParseError, ghost_surpasses
from supertropical.matrix import (
    Matrix,
    ShapeError,
    Singularity,
    attaining_permutations,
    classify,
    det_value,
    format_stm,
    invertible_decomposition,
    inverse,
    m_add,
    m_apply,
    m_mul,
    m_scale,
    parse_stm,
    permutation_matrix,
    transpose,
    tropical_det,
)
from supertropical.oracle import brute_det

from conftest import E, M, V


def test_square_of_small_matrix():
    A = M("0 0;1 2")
    assert A @ A == M("1 2;3 4")
    assert m_mul(A, A) == M("1 2;3 4")


def test_identity_and_apply():
    A = M("4 0;0 1")
    assert Matrix.identity(2) @ A == A
    assert m_apply(A, V("0 4")) == V("4g 5")


def test_add_scale_transpose():
    A = M("0 1g;-inf 2")
    assert m_add(A, A) == M("0g 1g;-inf 2g")
    assert m_scale(E(3), A) == M("3 4g;-inf 5")
    assert transpose(A) == M("0 -inf;1g 2")


def test_shape_errors_name_both_shapes():
    with pytest.raises(ShapeError, match=r"2x2.*3x1|\(2, 2\).*\(3, 1\)"):
        M("0 0;0 0") @ M("1;2;3")
    with pytest.raises(ShapeError):
        M("0 0;0 0") + M("1 2 3")


@pytest.mark.parametrize("text, value, kind, witness", [
    ("0 0;1 2", "2", Singularity.NONSINGULAR, (0, 1)),
    ("1 2;3 4", "5g", Singularity.SINGULAR, (0, 1)),
    ("10 0 10;0 10 0;0 10 1", "21", Singularity.NONSINGULAR, None),
    ("0 -inf;1 -inf", "-inf", Singularity.STRICTLY_SINGULAR, None),
    ("3g", "3g", Singularity.SINGULAR, (0,)),
])
def test_det(text, value, kind, witness):
    d = tropical_det(M(text))
    assert d.value == E(value)
    assert d.classification is kind
    if witness is not None:
        assert d.witness == witness
    if d.value.is_bottom:
        assert d.witness is None


def test_det_requires_square():
    with pytest.raises(ShapeError, match="determinant requires square matrix"):
        tropical_det(M("0;1"))


def test_witness_is_lexicographically_first():
    d = tropical_det(M("1 2;3 4"))
    assert d.witness == (0, 1)
    assert tropical_det(M("0 0 0;0 0 0;0 0 0")).witness == (0, 1, 2)


@pytest.mark.parametrize("text, perms", [
    ("0 0;1 2", [(0, 1)]),
    ("1 2;3 4", [(0, 1), (1, 0)]),
    ("7", [(0,)]),
    ("0 -inf;0 -inf", []),
])
def test_attaining_permutations(text, perms):
    assert attaining_permutations(M(text)) == perms


def test_attaining_above_threshold_reports_one():
    A = Matrix.zeros(3).map(lambda _: ONE)
    assert len(attaining_permutations(A)) == 6
    assert attaining_permutations(A, max_enum=2) == [(0, 1, 2)]


def test_invertible_decomposition():
    perm, D = invertible_decomposition(M("-inf 5;2 -inf"))
    assert perm == (1, 0)
    assert D == M("2 -inf;-inf 5")
    assert permutation_matrix(perm) @ D == M("-inf 5;2 -inf")
    assert invertible_decomposition(M("1 -inf -inf;-inf 2 -inf;-inf -inf 3")) == ((0, 1, 2), M("1 -inf -inf;-inf 2 -inf;-inf -inf 3"))
    assert invertible_decomposition(M("0 0;1 2")) is None
    assert invertible_decomposition(M("1g -inf;-inf 0")) is None


def test_inverse_of_monomial_matrix():
    A = M("-inf 5;2 -inf")
    assert A @ inverse(A) == Matrix.identity(2)
    assert inverse(A) @ A == Matrix.identity(2)


def test_power_anomaly():
    A = M("0 0;1 2")
    assert classify(A) is Singularity.NONSINGULAR
    assert classify(A @ A) is Singularity.SINGULAR


def test_parse_and_format():
    text = "# comment\n 0  -inf\n\n1g 4/3 # trailing\n"
    A = parse_stm(text)
    assert A == M("0 -inf;1g 4/3")
    assert parse_stm(format_stm(A)) == A


@pytest.mark.parametrize("text, line, column", [
    ("0 1\n2 x\n", 2, 3),
    ("0 1\n2\n", 2, 1),
    ("1/0g", 1, 1),
])
def test_parse_errors_have_positions(text, line, column):
    with pytest.raises(ParseError) as info:
        parse_stm(text)
    assert (info.value.line, info.value.column) == (line, column)


def test_parse_empty():
    with pytest.raises(ParseError):
        parse_stm("# nothing\n\n")


def test_vector_tangibility():
    assert V("0 -inf 3").is_tangible
    assert not V("0 1g").is_tangible
    assert not V("-inf -inf").is_tangible


def test_det_of_identity_is_one():
    assert det_value(Matrix.identity(4)) == ONE


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32), st.integers(1, 6))
def test_det_transpose(seed, n):
    import random

    A = random_matrix(random.Random(seed), n)
    assert det_value(A.T) == det_value(A)


def test_det_matches_brute_force(rng):
    for t in range(300):
        A = random_matrix(rng, 1 + t % 7)
        assert det_value(A) == brute_det(A)


def test_det_row_properties(rng):
    for t in range(200):
        n = 2 + t % 4
        A = random_matrix(rng, n)
        rows = [list(r) for r in A.rows]
        # permuting rows keeps the determinant
        assert det_value(Matrix(rows[::-1])) == det_value(A)
        # two rows with equal nu-values force a ghost or bottom
        dup = rows[:]
        dup[1] = [x.nu() if rng.random() < 0.5 else x for x in dup[0]]
        assert det_value(Matrix(dup)).in_ghost_ideal
        # linear in the first row
        other = list(random_matrix(rng, 1, n).rows[0])
        summed = Matrix([[a + b for a, b in zip(rows[0], other)]] + rows[1:])
        assert det_value(summed) == det_value(A) + det_value(Matrix([other] + rows[1:]))


def test_frobenius_for_matrices(rng):
    for t in range(150):
        n = 1 + t % 4
        A = random_matrix(rng, n)
        a = random_matrix(rng, 1).rows[0][0]
        m = 1 + t % 4
        lhs = (A + a * Matrix.identity(n)) ** m
        rhs = A ** m + (a ** m) * Matrix.identity(n)
        assert all(ghost_surpasses(x, y) for r, s in zip(lhs.rows, rhs.rows) for x, y in zip(r, s))


def test_detmul(rng):
    for t in range(300):
        n = 1 + t % 5
        A, B = random_matrix(rng, n), random_matrix(rng, n)
        dab = det_value(A @ B)
        assert ghost_surpasses(dab, det_value(A) * det_value(B))
        if dab.is_tangible:
            assert dab == det_value(A) * det_value(B)


def test_zero_power_is_identity():
    assert M("1 2;3 4") ** 0 == Matrix.identity(2)
    with pytest.raises(ShapeError):
        M("1 2") ** 2

