"""Vectors over GF(q) as message indices, projective points, and subspace enumeration."""

from __future__ import annotations

from itertools import combinations

import numpy as np

from ._config import SUBCODE_GUARD
from .errors import SubcodeGuard


def index_to_vectors(q, k, idx):
    """Base-q digits of indices, most significant first: shape (len(idx), k)."""
    idx = np.asarray(idx, dtype=np.int64).reshape(-1)
    pw = q ** np.arange(k - 1, -1, -1, dtype=np.int64)
    return (idx[:, None] // pw) % q


def vectors_to_index(q, V):
    V = np.asarray(V, dtype=np.int64)
    k = V.shape[-1]
    pw = q ** np.arange(k - 1, -1, -1, dtype=np.int64)
    return V @ pw


def all_vectors(q, k):
    return index_to_vectors(q, k, np.arange(q**k))


def first_nonzero(V):
    """Column index of the first nonzero entry of each row (k for zero rows)."""
    V = np.asarray(V)
    nz = V != 0
    return np.where(nz.any(axis=-1), nz.argmax(axis=-1), V.shape[-1])


def normalize(F, V):
    """Scale each row so its first nonzero entry is 1; zero rows stay zero."""
    V = np.array(V, dtype=np.int64, ndmin=2)
    lead = first_nonzero(V)
    nonzero = lead < V.shape[1]
    out = V.copy()
    if nonzero.any():
        rows = np.flatnonzero(nonzero)
        s = F.inv(V[rows, lead[rows]])
        out[rows] = F.mul(s[:, None], V[rows])
    return out


def is_normalized(V):
    V = np.array(V, ndmin=2)
    lead = first_nonzero(V)
    ok = lead < V.shape[1]
    vals = np.where(ok, V[np.arange(len(V)), np.minimum(lead, V.shape[1] - 1)], 0)
    return ok & (vals == 1)


def pg_points(F, k):
    """All points of PG(k-1, q) as normalized vectors, lexicographic order."""
    V = all_vectors(F.q, k)
    return V[is_normalized(V)]


def pg_size(q, k):
    return (q**k - 1) // (q - 1)


def gaussian_binomial(k, r, q):
    if r < 0 or r > k:
        return 0
    num = den = 1
    for i in range(r):
        num *= q ** (k - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def subspaces(F, k, r, guard=SUBCODE_GUARD):
    """Every r-dimensional subspace of GF(q)^k as its RREF basis, shape (N, r, k).

    Ordered by pivot set (lexicographic), then by the free entries read row by row.
    """
    q = F.q
    N = gaussian_binomial(k, r, q)
    if N > guard:
        raise SubcodeGuard(N, guard, f"{r}-dimensional subspaces of GF({q})^{k}")
    if r == 0:
        return np.zeros((1, 0, k), dtype=np.int64)
    blocks = []
    for piv in combinations(range(k), r):
        pset = set(piv)
        free = [(i, j) for i in range(r) for j in range(piv[i] + 1, k) if j not in pset]
        cnt = q ** len(free)
        B = np.zeros((cnt, r, k), dtype=np.int64)
        B[:, np.arange(r), list(piv)] = 1
        if free:
            vals = index_to_vectors(q, len(free), np.arange(cnt))
            ii, jj = zip(*free)
            B[:, list(ii), list(jj)] = vals
        blocks.append(B)
    out = np.concatenate(blocks)
    assert out.shape[0] == N
    return out


def span_vectors(F, B):
    """All q^r vectors in the row span of B (r x k), indexed by coefficient vector."""
    B = np.asarray(B, dtype=np.int64)
    r, k = B.shape
    coefs = all_vectors(F.q, r)
    out = np.zeros((coefs.shape[0], k), dtype=np.int64)
    for j in range(r):
        out = F.add(out, F.mul(coefs[:, j : j + 1], B[j][None, :]))
    return out
