import random
from fractions import Fraction
from itertools import combinations

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from symquartic.forms import make_C, make_L, make_robinson
from symquartic.nonsos import (
    SosIdentity,
    certify_not_sos,
    constraint_row,
    cross_column,
    default_weights,
    enumerate_zero_points,
    even_L_sos_identity,
    expected_point_count,
    final_scalar,
    kernel_dimension,
    quadratic_basis,
    replay_lemma_subtractions,
    subtraction_row,
    subtraction_support,
    summands_from_text,
    summands_to_text,
    vanishing_constraint_matrix,
    verify_sos_identity,
    verify_zeros,
    zero_point_values,
)
from symquartic.poly import DimensionError, Polynomial, power_sum, variables
from symquartic.psd import DegreeError


def sympy_kernel_dim(matrix, ncols):
    return ncols - sympy.Matrix(matrix).rank() if matrix else ncols


def test_enumerate_counts():
    assert len(enumerate_zero_points(5, {2, 3})) == 20
    assert len(enumerate_zero_points(4, {2, 3})) == 10
    z = enumerate_zero_points(4, {0})
    assert z.points == ((0, 0, 0, 0),)
    with pytest.raises(ValueError):
        enumerate_zero_points(4, {5})


def test_enumerate_order_and_weights():
    z = enumerate_zero_points(5, [3, 2, 2])
    assert z.weights == (2, 3)
    assert list(z.points) == sorted(z.points)
    assert all(sum(p) in (2, 3) and set(p) <= {0, 1} for p in z.points)
    assert len(set(z.points)) == expected_point_count(5, (2, 3))


def test_verify_zeros():
    assert verify_zeros(make_L(5), enumerate_zero_points(5, {2, 3}))
    assert verify_zeros(make_C(4), enumerate_zero_points(4, {2, 3}))
    z1 = enumerate_zero_points(5, {1})
    assert not verify_zeros(make_L(5), z1)
    assert set(zero_point_values(make_L(5), z1)) == {8}
    with pytest.raises(DimensionError):
        verify_zeros(make_L(5), enumerate_zero_points(4, {2}))


@pytest.mark.parametrize("n", range(4, 9))
def test_zero_point_values_match_evaluate(n):
    f = make_L(n)
    z = enumerate_zero_points(n, range(n + 1))
    assert zero_point_values(f, z) == [f.evaluate(p) for p in z.points]


def test_constraint_rows():
    assert constraint_row((1, 0, 0, 0, 0)) == [1] + [0] * 14
    row = constraint_row((1, 1, 0, 0, 0))
    assert {i for i, v in enumerate(row) if v} == {0, 1, cross_column(5, 0, 1)}
    m = vanishing_constraint_matrix(enumerate_zero_points(5, {2, 3}))
    assert (len(m), len(m[0])) == (20, 15)


@pytest.mark.parametrize("n", [4, 5, 7])
def test_columns_follow_basis(n):
    basis = quadratic_basis(n)
    for i, j in combinations(range(n), 2):
        mono = [0] * n
        mono[i] = mono[j] = 1
        assert basis[cross_column(n, i, j)] == tuple(mono)
    # rows are the basis monomials evaluated at the point
    p = tuple(random.Random(n).choice((0, 1)) for _ in range(n))
    assert constraint_row(p) == [Polynomial(n, {b: 1}).evaluate(p) for b in basis]


def test_kernel_dimension_examples():
    assert kernel_dimension([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 0
    assert kernel_dimension([[0, 0, 0], [0, 0, 0]]) == 3
    assert kernel_dimension(vanishing_constraint_matrix(enumerate_zero_points(5, {2, 3}))) == 0
    assert kernel_dimension([], 4) == 4


@settings(max_examples=200, deadline=None)
@given(
    st.integers(1, 5).flatmap(
        lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=1, max_size=6)
    )
)
def test_rank_matches_sympy(matrix):
    ncols = len(matrix[0])
    assert kernel_dimension(matrix) == sympy_kernel_dim(matrix, ncols)


@settings(max_examples=50, deadline=None)
@given(st.integers(4, 7), st.data())
def test_adding_points_never_raises_kernel(n, data):
    ws = data.draw(st.sets(st.integers(0, n), min_size=1))
    extra = data.draw(st.sets(st.integers(0, n), min_size=1))
    ncols = n + n * (n - 1) // 2
    small = kernel_dimension(vanishing_constraint_matrix(enumerate_zero_points(n, ws)), ncols)
    big = kernel_dimension(vanishing_constraint_matrix(enumerate_zero_points(n, ws | extra)), ncols)
    assert big <= small


@pytest.mark.parametrize("n", range(4, 13))
def test_canonical_zero_set_kernel_is_trivial(n):
    z = enumerate_zero_points(n, default_weights(n))
    assert kernel_dimension(vanishing_constraint_matrix(z), n + n * (n - 1) // 2) == 0


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_canonical_zero_set_kernel_against_sympy(n):
    m = vanishing_constraint_matrix(enumerate_zero_points(n, default_weights(n)))
    assert sympy_kernel_dim(m, len(m[0])) == 0


def test_single_weight_leaves_a_kernel():
    # one weight class alone does not force h = 0
    z = enumerate_zero_points(4, {2})
    ncols = 10
    dim = kernel_dimension(vanishing_constraint_matrix(z), ncols)
    assert dim == sympy_kernel_dim(vanishing_constraint_matrix(z), ncols) > 0


def test_subtraction_relations():
    # n=5 (m=2): S={3}, i=0, k=2
    d = subtraction_row(5, {3}, 0, 2)
    assert {c for c, v in enumerate(d) if v} == subtraction_support(5, {3}, 0, 2)
    # n=4, S={4}, i=1, j=2, k=3 in 1-based indices
    d_i = subtraction_row(4, {3}, 0, 2)
    d_j = subtraction_row(4, {3}, 1, 2)
    diff = [a - b for a, b in zip(d_i, d_j)]
    assert {c: v for c, v in enumerate(diff) if v} == {cross_column(4, 0, 2): 1, cross_column(4, 1, 2): -1}


def test_final_scalar():
    assert final_scalar(2) == -3
    assert all(final_scalar(m) != 0 for m in range(1, 30))


@pytest.mark.parametrize("n", range(4, 11))
def test_replay(n):
    assert replay_lemma_subtractions(n)
    assert replay_lemma_subtractions(n, seed=12345, trials=5)


def test_replay_rejects_small_n():
    with pytest.raises(ValueError):
        replay_lemma_subtractions(3)


@pytest.mark.parametrize("n", [5, 7, 9, 11])
def test_odd_L_not_sos(n):
    cert = certify_not_sos(make_L(n), enumerate_zero_points(n, default_weights(n)))
    assert cert.verdict == "not_sos" and cert.kernel_dimension == 0 and cert.replay


@pytest.mark.parametrize("two_m", [4, 6, 8, 10])
def test_C_not_sos(two_m):
    cert = certify_not_sos(make_C(two_m), enumerate_zero_points(two_m, default_weights(two_m)))
    assert cert.is_not_sos


def test_even_L_is_inconclusive():
    # L_2m is a sum of squares; its zeros at weights {m, m+1} do not all hold
    for two_m in (4, 6):
        cert = certify_not_sos(make_L(two_m), enumerate_zero_points(two_m, default_weights(two_m)))
        assert cert.verdict == "inconclusive"


def test_sum_of_fourth_powers_inconclusive():
    cert = certify_not_sos(power_sum(4, 4), enumerate_zero_points(4, {2, 3}))
    assert cert.verdict == "inconclusive" and not cert.zeros_verified
    assert cert.first_nonzero[1] > 0


def test_certify_preconditions():
    with pytest.raises(DegreeError):
        certify_not_sos(make_robinson(), enumerate_zero_points(3, {1}))
    with pytest.raises(ValueError):
        certify_not_sos(Polynomial.zero(4), enumerate_zero_points(4, {2}))


def test_certificate_text():
    text = certify_not_sos(make_L(5), enumerate_zero_points(5, {2, 3}), seed=7).to_text()
    lines = text.splitlines()
    assert lines[0] == "notsos-certificate"
    assert lines[1].startswith("form sha256:") and len(lines[1]) == len("form sha256:") + 16
    for expected in ("n 5", "weights 2,3", "points 20", "rows 20", "columns 15",
                     "kernel-dimension 0", "replay-seed 7", "replay ok", "verdict not_sos"):
        assert expected in lines
    assert text == certify_not_sos(make_L(5), enumerate_zero_points(5, {2, 3}), seed=7).to_text()


def random_sos_quartic(rng: random.Random, n: int) -> Polynomial:
    basis = quadratic_basis(n)
    while True:
        total = Polynomial.zero(n)
        for _ in range(rng.randint(2, 5)):
            q = Polynomial(n, {b: rng.randint(-3, 3) for b in basis})
            total = total + q * q
        if not total.is_zero():
            return total


def test_random_sos_never_certified():
    rng = random.Random(2024)
    for _ in range(60):
        n = rng.randint(4, 8)
        f = random_sos_quartic(rng, n)
        for weights in (default_weights(n), range(n + 1)):
            assert certify_not_sos(f, enumerate_zero_points(n, weights)).verdict == "inconclusive"


@pytest.mark.parametrize("two_m", [4, 6, 8, 10])
def test_even_L_identity(two_m):
    ident = even_L_sos_identity(two_m)
    assert len(ident.summands) == two_m * (two_m - 1) // 2
    assert verify_sos_identity(ident)


def test_identity_examples():
    x1 = variables(1)[0]
    assert verify_sos_identity(SosIdentity(x1**4, ((x1, x1),)))
    ident = even_L_sos_identity(4)
    g, h = ident.summands[0]
    perturbed = (g, h + variables(4)[0] * Fraction(1, 10))
    broken = SosIdentity(ident.target, (perturbed,) + ident.summands[1:])
    assert not verify_sos_identity(broken)


def test_summand_file_round_trip():
    ident = even_L_sos_identity(4)
    text = summands_to_text(ident.summands)
    assert summands_from_text(text) == ident.summands
    with pytest.raises(ValueError):
        summands_from_text(ident.target.to_text())
