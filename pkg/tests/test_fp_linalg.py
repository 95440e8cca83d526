import pytest
from hypothesis import given, settings as hsettings
from hypothesis import strategies as st

from app.core.errors import DimensionMismatch, InvalidInput, NotPrime, ZeroInverse
from app.modules.fp_linalg.elimination import (
    NotInSpan,
    cokernel_rows,
    connected_blocks,
    independent_columns,
    kernel_basis,
    rank,
    solve_membership,
)
from app.modules.fp_linalg.field import FpScalar, check_modulus, fp_inverse, is_prime
from app.modules.fp_linalg.matrix import SparseMatrixFp, dump_triples, load_triples, matvec, sparse_matvec
from tests.oracles import brute_rank
from tests.strategies import dense_matrices


def identity(size, p):
    return SparseMatrixFp.from_dense([[int(i == j) for j in range(size)] for i in range(size)], p)


# field

@pytest.mark.parametrize("value,p,expected", [(3, 7, 5), (1, 2, 1), (4, 5, 4)])
def test_fp_inverse_known_values(value, p, expected):
    assert fp_inverse(FpScalar(value, p)).value == expected


def test_fp_inverse_of_zero():
    with pytest.raises(ZeroInverse):
        fp_inverse(FpScalar(0, 7))


@given(st.sampled_from([2, 3, 5, 7, 11, 13, 101, 65521]), st.integers(1, 10**6))
@hsettings(max_examples=100)
def test_inverse_multiplies_to_one(p, value):
    x = FpScalar(value, p)
    if x.value:
        assert (x * fp_inverse(x)).value == 1


def test_scalar_arithmetic_is_exact():
    a, b = FpScalar(5, 7), FpScalar(4, 7)
    assert (a + b).value == 2
    assert (a * b).value == 6
    assert (a - b).value == 1
    assert (b - a).value == 6
    assert (a / b) * b == a
    assert -a == 2


def test_mixing_fields_is_rejected():
    with pytest.raises(InvalidInput):
        FpScalar(1, 5) + FpScalar(1, 7)


def test_primality():
    primes = [p for p in range(200) if is_prime(p)]
    assert primes[:10] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert all(all(p % d for d in range(2, p)) for p in primes)
    assert len(primes) == 46
    assert is_prime(1048573)
    assert not is_prime(1048575)


def test_modulus_validation():
    with pytest.raises(NotPrime):
        check_modulus(9)
    with pytest.raises(InvalidInput):
        check_modulus(1 << 21)
    assert check_modulus(1048573) == 1048573


# rank

def test_rank_known_values():
    assert rank(identity(3, 5)) == 3
    assert rank(SparseMatrixFp.from_dense([[1, 2], [2, 4]], 5)) == 1
    assert rank(SparseMatrixFp.from_dense([[0, 0], [0, 0]], 3)) == 0


@given(dense_matrices(primes=(2, 3, 5), max_rows=6, max_cols=6))
@hsettings(max_examples=100, deadline=None)
def test_rank_agrees_with_span_enumeration(case):
    dense, p = case
    m = SparseMatrixFp.from_dense(dense, p)
    expected = brute_rank(dense, p)
    assert rank(m) == expected
    assert rank(m, dense_budget=0) == expected


def test_rank_of_a_full_six_by_six_over_f5():
    dense = [[int(i == j) + int(j == i + 1) for j in range(6)] for i in range(6)]
    assert brute_rank(dense, 5) == 6
    assert rank(SparseMatrixFp.from_dense(dense, 5)) == 6


@given(dense_matrices(primes=(2, 3, 5, 7), max_rows=9, max_cols=9), st.data())
@hsettings(max_examples=100, deadline=None)
def test_rank_is_bounded_and_stable_under_row_permutation(case, data):
    dense, p = case
    m = SparseMatrixFp.from_dense(dense, p)
    r = rank(m)
    assert r <= min(m.rows, m.cols)
    assert rank(m) == r
    order = data.draw(st.permutations(range(m.rows)))
    assert rank(m.permute_rows(order)) == r
    assert rank(m.transpose()) == r


@given(dense_matrices(primes=(2, 3, 5, 7, 11), max_rows=8, max_cols=8))
@hsettings(max_examples=100, deadline=None)
def test_dense_and_sparse_paths_pick_the_same_pivot_columns(case):
    dense, p = case
    m = SparseMatrixFp.from_dense(dense, p)
    assert independent_columns(m) == independent_columns(m, dense_budget=0)


def test_blocks_partition_rows_and_columns():
    dense = [
        [1, 0, 0, 2],
        [0, 1, 0, 0],
        [0, 0, 0, 0],
        [0, 3, 0, 0],
    ]
    blocks = connected_blocks(SparseMatrixFp.from_dense(dense, 5))
    assert [b.cols for b in blocks] == [(0, 3), (1,), (2,)]
    assert [b.rows for b in blocks] == [(0,), (1, 3), ()]


# products

def test_sparse_matvec_keeps_only_nonzero_rows():
    m = SparseMatrixFp.from_dense([[1, 4], [2, 3], [0, 0]], 5)
    # row 0 is 1 + 4 = 0 mod 5
    assert sparse_matvec(m, {0: 1, 1: 1}) == {}
    assert sparse_matvec(m, [2, 0]) == {0: 2, 1: 4}
    assert matvec(m, [2, 0]) == [2, 4, 0]


@given(dense_matrices(primes=(2, 3, 5, 7), max_rows=7, max_cols=7), st.data())
@hsettings(max_examples=100, deadline=None)
def test_sparse_matvec_is_the_support_of_matvec(case, data):
    dense, p = case
    m = SparseMatrixFp.from_dense(dense, p)
    c = data.draw(st.lists(st.integers(0, p - 1), min_size=m.cols, max_size=m.cols))
    full = matvec(m, c)
    assert sparse_matvec(m, c) == {i: v for i, v in enumerate(full) if v}
    assert sparse_matvec(m, dict(enumerate(c))) == sparse_matvec(m, c)


def test_sparse_matvec_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        sparse_matvec(identity(3, 5), [1, 2])


# membership

def test_membership_of_identity():
    assert solve_membership(identity(2, 3), [1, 2]) == [1, 2]


@given(dense_matrices(primes=(3, 5, 7), rows=5, cols=4))
@hsettings(max_examples=100, deadline=None)
def test_membership_of_a_column(case):
    dense, p = case
    m = SparseMatrixFp.from_dense(dense, p)
    column = [dense[i][0] for i in range(5)]
    c = solve_membership(m, column)
    assert c is not NotInSpan
    assert matvec(m, c) == column


def test_membership_solution_has_free_variables_zero():
    m = SparseMatrixFp.from_dense([[1, 2, 1], [0, 0, 1]], 5)
    c = solve_membership(m, [3, 1])
    # column 1 = 2 * column 0, so it is free
    assert c[1] == 0
    assert matvec(m, c) == [3, 1]


@given(dense_matrices(primes=(2, 3, 5), rows=5, cols=3), st.data())
@hsettings(max_examples=100, deadline=None)
def test_membership_or_rank_increase(case, data):
    dense, p = case
    m = SparseMatrixFp.from_dense(dense, p)
    v = data.draw(st.lists(st.integers(0, p - 1), min_size=5, max_size=5))
    c = solve_membership(m, v)
    if c is NotInSpan:
        assert rank(m.append_column(v)) == rank(m) + 1
        assert solve_membership(m, v, dense_budget=0) is NotInSpan
    else:
        assert matvec(m, c) == v
        assert solve_membership(m, v, dense_budget=0) == c


def test_not_in_span_raises_rank_by_one():
    # three columns cannot span F_p^5
    m = SparseMatrixFp.from_dense([[1, 0, 0], [0, 1, 0], [0, 0, 1], [0, 0, 0], [0, 0, 0]], 3)
    v = [0, 0, 0, 1, 2]
    assert solve_membership(m, v) is NotInSpan
    assert rank(m.append_column(v)) == 4


def test_membership_on_empty_row():
    m = SparseMatrixFp.from_dense([[1, 0], [0, 0]], 3)
    assert solve_membership(m, [0, 1]) is NotInSpan
    assert solve_membership(m, [0, 0]) == [0, 0]


def test_membership_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        solve_membership(identity(3, 5), [1, 2])


# kernel and cokernel

@pytest.mark.parametrize("budget", [None, 0])
@given(case=dense_matrices(primes=(2, 3, 5, 7), max_rows=7, max_cols=7))
@hsettings(max_examples=100, deadline=None)
def test_kernel_basis_is_annihilated_and_has_full_size(budget, case):
    dense, p = case
    m = SparseMatrixFp.from_dense(dense, p)
    vectors = list(kernel_basis(m, dense_budget=budget))
    assert len(vectors) == m.cols - rank(m)
    for vector in vectors:
        assert sparse_matvec(m, vector) == {}
        # the lead coefficient of each vector sits on its own free column
        assert vector[max(vector)] == 1


@given(dense_matrices(primes=(2, 3, 5), max_rows=6, max_cols=6))
@hsettings(max_examples=100, deadline=None)
def test_cokernel_rows_complement_the_image(case):
    dense, p = case
    m = SparseMatrixFp.from_dense(dense, p)
    rows = cokernel_rows(m)
    assert len(rows) == m.rows - rank(m)
    extended = m
    for row in rows:
        extended = extended.append_column([int(i == row) for i in range(m.rows)])
    assert rank(extended) == m.rows


# storage

def test_rejects_malformed_columns():
    with pytest.raises(InvalidInput):
        SparseMatrixFp(2, 1, 5, [((1, 1), (0, 2))])
    with pytest.raises(InvalidInput):
        SparseMatrixFp(2, 1, 5, [((0, 0),)])
    with pytest.raises(InvalidInput):
        SparseMatrixFp(2, 1, 5, [((2, 1),)])


def test_triple_dump_format(tmp_path):
    m = SparseMatrixFp.from_dense([[1, 0, 4], [0, 2, 0]], 5)
    path = tmp_path / "m.txt"
    dump_triples(m, path)
    assert path.read_text().splitlines() == ["2 3 5", "0 0 1", "1 1 2", "0 2 4"]
    assert load_triples(path) == m
