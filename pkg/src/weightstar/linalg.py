"""Dense matrix algebra over GF(q) on arrays of element codes.

The array-level helpers (``rref_array``, ``kernel_array``, ...) take a field and an
int64 array and are what the rest of the package calls.  :class:`GFMatrix` is the
public wrapper that carries its field along.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, FieldMismatch, RankDeficient


def _arr(A):
    return np.array(A, dtype=np.int64, copy=True, ndmin=2)


def rref_array(F, A):
    """Reduced row echelon form.  Returns (R, pivots) with R the same shape as A.

    Pivot search walks columns left to right and, within a column, takes the first
    nonzero entry from the top of the unreduced block.
    """
    R = _arr(A)
    rows, cols = R.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(R[r:, c])
        if nz.size == 0:
            continue
        s = r + nz[0]
        if s != r:
            R[[r, s]] = R[[s, r]]
        if R[r, c] != 1:
            R[r] = F.mul(F.inv(R[r, c]), R[r])
        others = np.flatnonzero(R[:, c])
        others = others[others != r]
        if others.size:
            R[others] = F.sub(R[others], F.mul(R[others, c][:, None], R[r][None, :]))
        pivots.append(c)
        r += 1
    return R, pivots


def rank_array(F, A):
    A = np.asarray(A)
    if A.size == 0:
        return 0
    return len(rref_array(F, A)[1])


def row_basis(F, A):
    """Independent rows spanning the row space of A (the nonzero RREF rows)."""
    R, piv = rref_array(F, A)
    return R[: len(piv)]


def kernel_array(F, A):
    """Basis of {x : A x^T = 0}, one vector per row, in RREF-derived order."""
    A = np.asarray(A, dtype=np.int64)
    cols = A.shape[1]
    R, piv = rref_array(F, A)
    free = [c for c in range(cols) if c not in set(piv)]
    K = np.zeros((len(free), cols), dtype=np.int64)
    for i, f in enumerate(free):
        K[i, f] = 1
        for r, pc in enumerate(piv):
            K[i, pc] = F.neg(R[r, f])
    return K


def matmul(F, A, B):
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    if A.shape[-1] != B.shape[0]:
        raise DimensionMismatch(f"{A.shape} x {B.shape}")
    if F.m == 1:
        return (A @ B) % F.p
    out = np.zeros(A.shape[:-1] + B.shape[1:], dtype=np.int64)
    for t in range(A.shape[-1]):
        a = A[..., t]
        out = F.add(out, F.mul(a[..., None] if B.ndim > 1 else a, B[t]))
    return out


def solve_array(F, A, b):
    """Some x with A x = b, or None when the system is inconsistent."""
    A = np.asarray(A, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64).reshape(-1)
    rows, cols = A.shape
    if b.shape[0] != rows:
        raise DimensionMismatch(f"b has length {b.shape[0]}, expected {rows}")
    R, piv = rref_array(F, np.hstack([A, b[:, None]]))
    if piv and piv[-1] == cols:
        return None
    x = np.zeros(cols, dtype=np.int64)
    for r, pc in enumerate(piv):
        x[pc] = R[r, cols]
    return x


def inverse_array(F, A):
    A = np.asarray(A, dtype=np.int64)
    k = A.shape[0]
    if A.shape != (k, k):
        raise DimensionMismatch("inverse of a non-square matrix")
    R, piv = rref_array(F, np.hstack([A, np.eye(k, dtype=np.int64)]))
    if sum(1 for c in piv if c < k) < k:
        raise RankDeficient("matrix is singular")
    return R[:, k:]


def in_row_space(F, A, v):
    return solve_array(F, np.asarray(A).T, v) is not None


@dataclass(frozen=True)
class GFMatrix:
    field: object
    entries: np.ndarray

    def __post_init__(self):
        a = np.array(self.entries, dtype=np.int64, ndmin=2)
        if a.size and (a.min() < 0 or a.max() >= self.field.q):
            raise ValueError("entry outside the field")
        a.setflags(write=False)
        object.__setattr__(self, "entries", a)

    @property
    def rows(self):
        return self.entries.shape[0]

    @property
    def cols(self):
        return self.entries.shape[1]

    @property
    def T(self):
        return GFMatrix(self.field, self.entries.T)

    def __eq__(self, other):
        return (
            isinstance(other, GFMatrix)
            and self.field == other.field
            and np.array_equal(self.entries, other.entries)
        )

    def __hash__(self):
        return hash((self.field, self.entries.shape, self.entries.tobytes()))

    def __matmul__(self, other):
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        return GFMatrix(self.field, matmul(self.field, self.entries, other.entries))


def rref(M):
    """(R, rank, pivots) for a GFMatrix."""
    R, piv = rref_array(M.field, M.entries)
    return GFMatrix(M.field, R), len(piv), tuple(piv)


def rank(M):
    return rank_array(M.field, M.entries)


def kernel(M):
    return GFMatrix(M.field, kernel_array(M.field, M.entries).reshape(-1, M.cols))


def solve(M, b):
    x = solve_array(M.field, M.entries, b)
    return None if x is None else x
