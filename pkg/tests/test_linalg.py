import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quiverhom.linalg import GF, is_prime


def test_is_prime():
    assert [p for p in range(2, 30) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert not is_prime(1)
    assert not is_prime(0)


def test_rejects_composite_characteristic():
    with pytest.raises(ValueError):
        GF(6)
    with pytest.raises(ValueError):
        GF(1)


def test_rref_identity_fixed():
    f = GF(5)
    m = f.eye(2)
    r, pivots = f.rref(m)
    assert np.array_equal(r, m)
    assert pivots == [0, 1]


def test_rref_hand_reduction():
    f = GF(5)
    r, pivots = f.rref(f.mat([[2, 4], [1, 2]]))
    assert np.array_equal(r, f.mat([[1, 2], [0, 0]]))
    assert pivots == [0]


def test_rref_zero_matrix():
    f = GF(7)
    r, pivots = f.rref(f.zeros(3, 3))
    assert np.array_equal(r, f.zeros(3, 3))
    assert pivots == []


def test_kernel_of_identity_empty():
    f = GF(3)
    assert f.kernel_basis(f.eye(2)) == []


def test_kernel_forced_by_rank():
    f = GF(2)
    basis = f.kernel_basis(f.mat([[1, 1]]))
    assert len(basis) == 1
    assert np.array_equal(basis[0], np.array([1, 1]))


def test_kernel_verified_by_multiplication():
    f = GF(5)
    m = f.mat([[1, 2], [2, 4]])
    basis = f.kernel_basis(m)
    assert len(basis) == 1
    assert not np.any(f.matmul(m, basis[0].reshape(-1, 1)))


def test_solve_identity():
    f = GF(7)
    b = f.vec([3, 5])
    assert np.array_equal(f.solve(f.eye(2), b), b)


def test_solve_inconsistent():
    f = GF(7)
    assert f.solve(f.zeros(2, 2), f.vec([1, 0])) is None


def test_solve_back_substitution():
    f = GF(3)
    x = f.solve(f.mat([[1, 1], [0, 1]]), f.vec([2, 1]))
    assert np.array_equal(x, np.array([1, 1]))


def test_solve_dimension_mismatch_is_error():
    f = GF(3)
    with pytest.raises(ValueError):
        f.solve(f.zeros(2, 2), f.vec([1, 0, 0]))


def test_inverse_roundtrip():
    f = GF(101)
    m = f.mat([[2, 3], [1, 4]])
    inv = f.inverse(m)
    assert np.array_equal(f.matmul(m, inv), f.eye(2))
    assert f.inverse(f.mat([[1, 2], [2, 4]])) is None


small_prime = st.sampled_from([2, 3, 5, 101])
dims = st.integers(min_value=0, max_value=6)


@st.composite
def matrix_and_field(draw):
    p = draw(small_prime)
    rows, cols = draw(dims), draw(dims)
    entries = draw(
        st.lists(st.integers(min_value=0, max_value=p - 1), min_size=rows * cols, max_size=rows * cols)
    )
    return GF(p), np.array(entries, dtype=np.int64).reshape(rows, cols)


@given(matrix_and_field())
@settings(max_examples=120, deadline=None)
def test_rank_nullity(mf):
    f, m = mf
    assert f.rank(m) + len(f.kernel_basis(m)) == m.shape[1]


@given(matrix_and_field())
@settings(max_examples=80, deadline=None)
def test_rref_idempotent(mf):
    f, m = mf
    r, pivots = f.rref(m)
    r2, pivots2 = f.rref(r)
    assert np.array_equal(r, r2)
    assert pivots == pivots2


@given(matrix_and_field(), st.data())
@settings(max_examples=80, deadline=None)
def test_solve_exact_on_consistent_systems(mf, data):
    f, m = mf
    x = np.array(
        data.draw(st.lists(st.integers(0, f.p - 1), min_size=m.shape[1], max_size=m.shape[1])),
        dtype=np.int64,
    )
    b = f.matmul(m, x.reshape(-1, 1))[:, 0] if m.shape[1] else np.zeros(m.shape[0], dtype=np.int64)
    got = f.solve(m, b)
    assert got is not None
    assert np.array_equal(f.matmul(m, got.reshape(-1, 1))[:, 0], b)


@given(matrix_and_field())
@settings(max_examples=80, deadline=None)
def test_kernel_vectors_are_independent_solutions(mf):
    f, m = mf
    basis = f.kernel_basis(m)
    for v in basis:
        assert not np.any(f.matmul(m, v.reshape(-1, 1)))
    if basis:
        stacked = np.column_stack(basis)
        assert f.rank(stacked) == len(basis)
