import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracle
from weightstar import GFMatrix, field_new, kernel, rank, rref, solve
from weightstar.errors import DimensionMismatch, FieldMismatch
from weightstar.families import GOLAY_G
from weightstar.linalg import in_row_space, inverse_array, matmul


@st.composite
def matrices(draw, max_rows=5, max_cols=7):
    q = draw(st.sampled_from([2, 3, 4, 5, 8, 9]))
    F = field_new(*{2: (2, 1), 3: (3, 1), 4: (2, 2), 5: (5, 1), 8: (2, 3), 9: (3, 2)}[q])
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    flat = draw(st.lists(st.integers(0, q - 1), min_size=r * c, max_size=r * c))
    return GFMatrix(F, np.array(flat).reshape(r, c))


@given(matrices())
def test_rank_transpose(M):
    assert rank(M) == rank(M.T)


@given(matrices())
def test_rank_nullity(M):
    K = kernel(M)
    assert rank(M) + K.rows == M.cols
    if K.rows:
        assert not np.any(matmul(M.field, M.entries, K.entries.T))
        assert rank(K) == K.rows


@given(matrices())
def test_rref_idempotent_and_canonical(M):
    R, r, piv = rref(M)
    R2, r2, piv2 = rref(R)
    assert R2 == R and r2 == r and piv2 == piv
    assert list(piv) == sorted(set(piv))
    E = R.entries
    for i, j in enumerate(piv):
        assert E[i, j] == 1 and np.count_nonzero(E[:, j]) == 1
        assert not E[i, :j].any()
    assert not E[r:].any()


@given(matrices(max_rows=4, max_cols=5))
def test_rank_against_span_count(M):
    assert rank(M) == oracle.rank(oracle.ref_field(M.field), M.entries.tolist())


@given(matrices(), st.data())
def test_solve_consistent(M, data):
    F = M.field
    x0 = np.array(data.draw(st.lists(st.integers(0, F.q - 1), min_size=M.cols, max_size=M.cols)))
    b = matmul(F, M.entries, x0[:, None])[:, 0]
    x = solve(M, b)
    assert x is not None
    assert np.array_equal(matmul(F, M.entries, np.asarray(x)[:, None])[:, 0], b)


def test_identity_rref():
    F = field_new(3)
    I = GFMatrix(F, np.eye(4, dtype=int))
    R, r, piv = rref(I)
    assert R == I and r == 4 and piv == (0, 1, 2, 3)
    b = np.array([2, 0, 1, 1])
    assert np.array_equal(solve(I, b), b)


def test_golay_rank_and_kernel():
    M = GFMatrix(field_new(3), GOLAY_G)
    assert rank(M) == 6
    K = kernel(M)
    assert K.rows == 5
    assert not np.any(matmul(M.field, M.entries, K.entries.T))


def test_small_kernels():
    F2 = field_new(2)
    assert kernel(GFMatrix(F2, np.zeros((2, 3), dtype=int))).rows == 3
    K = kernel(GFMatrix(F2, [[1, 1]]))
    assert K.entries.tolist() == [[1, 1]]


def test_inconsistent_solve():
    M = GFMatrix(field_new(2), [[1, 0], [1, 0]])
    assert solve(M, [0, 1]) is None


def test_solve_shape_error():
    M = GFMatrix(field_new(2), [[1, 0], [0, 1]])
    with pytest.raises(DimensionMismatch):
        solve(M, [1, 0, 1])


def test_matrix_validation():
    F = field_new(3)
    with pytest.raises(ValueError):
        GFMatrix(F, [[0, 3]])
    with pytest.raises(FieldMismatch):
        GFMatrix(F, [[1]]) @ GFMatrix(field_new(5), [[1]])


def test_inverse_and_row_space():
    F = field_new(2, 2)
    A = np.array([[1, 2], [2, 1]])
    Ai = inverse_array(F, A)
    assert np.array_equal(matmul(F, A, Ai), np.eye(2, dtype=int))
    assert in_row_space(F, A, F.add(A[0], F.mul(2, A[1])))
