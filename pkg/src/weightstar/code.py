"""Linear codes over GF(q) and everything computed by enumerating them.

Messages are enumerated in lexicographic order (message index = sum u_i q^(k-1-i)),
so codeword lists, weight arrays and star matrices all share one ordering.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

import numpy as np

from . import _config, kernels
from .errors import (
    AllCoordinatesRemoved,
    EnumerationGuard,
    FieldMismatch,
    NoSuchWeight,
    RankDeficient,
    SubcodeGuard,
)
from .geometry import (
    gaussian_binomial,
    index_to_vectors,
    normalize,
    pg_points,
    span_vectors,
    subspaces,
    vectors_to_index,
)
from .gfield import FieldSpec
from .linalg import GFMatrix, kernel_array, matmul, rank_array, row_basis

_STORE_LIMIT = 1 << 22  # keep the per-message weight array only up to this many messages


class LinearCode:
    """A code given by a k x n generator matrix of full row rank.

    ``k == 0`` is allowed for the degenerate results of ``dual`` and ``shorten``.
    Caches (weights, distribution) are filled on first use and never change.
    """

    def __init__(self, field_, G):
        G = np.array(G, dtype=np.int64, ndmin=2)
        if G.ndim != 2:
            raise ValueError("generator must be two-dimensional")
        G.setflags(write=False)
        self.field = field_
        self.G = G
        self.k, self.n = G.shape
        self._lock = threading.RLock()
        self._cache = {}

    def __repr__(self):
        return f"LinearCode([{self.n}, {self.k}] over GF({self.field.q}))"

    @property
    def q(self):
        return self.field.q

    @property
    def size(self):
        return self.q**self.k

    @property
    def matrix(self):
        return GFMatrix(self.field, self.G)

    def _cached(self, key, make):
        with self._lock:
            if key not in self._cache:
                self._cache[key] = make()
            return self._cache[key]

    def rows(self):
        return self._cached("rows", lambda: kernels.prepare(self.field, self.G))

    def encode(self, U):
        return matmul(self.field, np.asarray(U, dtype=np.int64), self.G)

    def messages(self, idx):
        return index_to_vectors(self.q, self.k, idx)

    def columns(self):
        return self.G.T


def check_guard(C, guard=None, what="messages"):
    guard = _config.default_guard() if guard is None else guard
    total = C.q**C.k
    if total >= 1 << 63 or total > guard:
        raise EnumerationGuard(total, guard, what)
    return total


def code_from_generator(field_, rows, guard=None):
    """Validated constructor: rows must be independent and q^k within the guard."""
    if not isinstance(field_, FieldSpec):
        raise FieldMismatch("first argument must be a FieldSpec")
    G = np.array(rows, dtype=np.int64, ndmin=2)
    if G.size == 0:
        raise ValueError("generator needs at least one non-empty row")
    if G.min() < 0 or G.max() >= field_.q:
        raise FieldMismatch(f"entries must be codes in [0, {field_.q})")
    r = rank_array(field_, G)
    if r < G.shape[0]:
        raise RankDeficient(f"{G.shape[0]} rows but rank {r}")
    C = LinearCode(field_, G)
    check_guard(C, guard)
    return C


def from_rows_any_rank(field_, rows):
    """Code spanned by rows; keeps the rows if independent, else their RREF basis."""
    G = np.array(rows, dtype=np.int64, ndmin=2)
    if G.shape[0] and rank_array(field_, G) < G.shape[0]:
        G = row_basis(field_, G)
    return LinearCode(field_, G)


# ---------------------------------------------------------------------------
# weights


@dataclass(frozen=True)
class WeightDistribution:
    counts: tuple
    n: int
    k: int
    q: int

    def __post_init__(self):
        object.__setattr__(self, "counts", tuple(int(c) for c in self.counts))

    def __getitem__(self, i):
        return self.counts[i] if 0 <= i < len(self.counts) else 0

    def __len__(self):
        return len(self.counts)

    @property
    def A(self):
        return list(self.counts)

    @property
    def nonzero_weights(self):
        return [i for i, a in enumerate(self.counts) if a and i]

    @property
    def d(self):
        w = self.nonzero_weights
        return w[0] if w else 0

    def as_dict(self):
        return {i: a for i, a in enumerate(self.counts) if a}

    def to_json(self):
        return {"n": self.n, "k": self.k, "q": self.q, "A": list(self.counts)}

    def enumerator(self):
        """Homogeneous weight enumerator sum A_i x^(n-i) y^i as text."""
        terms = []
        for i, a in enumerate(self.counts):
            if not a:
                continue
            mono = _power("x", self.n - i) + _power("y", i)
            coef = "" if a == 1 and mono else str(a)
            terms.append(coef + mono if mono else str(a))
        return " + ".join(terms)


def _power(v, e):
    if e == 0:
        return ""
    return v if e == 1 else f"{v}^{e}"


def weights(C, guard=None):
    """Weight of every codeword, indexed by message index."""
    check_guard(C, guard)
    if C.k == 0:
        return np.zeros(1, dtype=np.int32)
    return C._cached("weights", lambda: kernels.all_weights(C.rows()))


def weight_distribution(C, guard=None):
    check_guard(C, guard)

    def make():
        if C.k == 0:
            counts = np.zeros(C.n + 1, dtype=np.int64)
            counts[0] = 1
        elif C.size <= _STORE_LIMIT:
            counts = np.bincount(weights(C, guard), minlength=C.n + 1)
        else:
            counts = kernels.weight_counts(C.rows())
        return WeightDistribution(counts, C.n, C.k, C.q)

    return C._cached("dist", make)


def minimum_distance(C, guard=None):
    return weight_distribution(C, guard).d


def codewords_of_weight(C, w, guard=None):
    """(messages, codewords) of weight w in lexicographic message order."""
    if not 0 <= w <= C.n:
        raise ValueError(f"weight {w} outside [0, {C.n}]")
    idx = np.flatnonzero(weights(C, guard) == w)
    U = C.messages(idx)
    return U, C.encode(U)


def is_projective(C):
    """No zero column and no two proportional columns."""
    cols = C.G.T
    if C.k == 0 or np.any(~cols.any(axis=1)):
        return False
    N = normalize(C.field, cols)
    return np.unique(N, axis=0).shape[0] == C.n


# ---------------------------------------------------------------------------
# derived codes


def dual(C):
    return LinearCode(C.field, kernel_array(C.field, C.G).reshape(-1, C.n))


def _coords(C, T):
    T = sorted({int(t) for t in T})
    if any(t < 0 or t >= C.n for t in T):
        raise IndexError(f"coordinates must lie in [0, {C.n})")
    if len(T) == C.n:
        raise AllCoordinatesRemoved("every coordinate removed")
    keep = [i for i in range(C.n) if i not in set(T)]
    return T, keep


def puncture(C, T):
    """Delete coordinates T (0-based) from every codeword."""
    _, keep = _coords(C, T)
    return from_rows_any_rank(C.field, C.G[:, keep])


def shorten(C, T):
    """Keep codewords vanishing on T, then delete T."""
    T, keep = _coords(C, T)
    if not T:
        return LinearCode(C.field, C.G)
    K = kernel_array(C.field, C.G[:, T].T).reshape(-1, C.k)
    return LinearCode(C.field, C.encode(K)[:, keep] if K.shape[0] else np.zeros((0, len(keep))))


# ---------------------------------------------------------------------------
# subcodes


@dataclass
class SubcodeHandle:
    parent: LinearCode
    message_basis: np.ndarray  # r x k, in the parent's message space
    functionals: np.ndarray | None = None  # annihilator rows, when built from them
    basis: np.ndarray = field(init=False)

    def __post_init__(self):
        self.basis = self.parent.encode(self.message_basis)

    @property
    def dimension(self):
        return self.message_basis.shape[0]

    def code(self):
        return LinearCode(self.parent.field, self.basis)

    def message_indices(self):
        V = span_vectors(self.parent.field, self.message_basis)
        return vectors_to_index(self.parent.q, V)

    def weight_distribution(self):
        w = weights(self.parent)[self.message_indices()]
        return np.bincount(w, minlength=self.parent.n + 1)

    def support_size(self):
        cw = self.basis
        return int(np.count_nonzero(cw.any(axis=0)))


def hyperplanes(C):
    """Normalized nonzero functionals on the message space, lexicographic order."""
    return pg_points(C.field, C.k)


def codim_one_subcodes(C, guard=None):
    """Each codimension-1 subcode as the kernel of one normalized functional."""
    check_guard(C, guard)
    for h in hyperplanes(C):
        yield SubcodeHandle(C, kernel_array(C.field, h[None, :]).reshape(-1, C.k), h[None, :])


def subcode_counts(C, w, functionals):
    """A_w of the subcode annihilated by each functional block, shape (N,).

    ``functionals`` has shape (N, s, k); subcode N_j is {u : F_j u = 0}.
    """
    idx = np.flatnonzero(weights(C) == w)
    D = C.messages(idx)
    return kernels.subspace_zero_counts(C.field, D, functionals)


def hyperplane_counts(C, w):
    """A_w of every codimension-1 subcode, in ``hyperplanes`` order."""
    H = hyperplanes(C)
    return subcode_counts(C, w, H[:, None, :])


@dataclass(frozen=True)
class GHW:
    r: int
    d_r: int
    distribution: tuple  # A^(r)_s = number of r-dim subcodes with support size s


def subcode_supports(C, r, guard=_config.SUBCODE_GUARD):
    """Support size of every r-dimensional subcode (RREF message bases order)."""
    if not 0 <= r <= C.k:
        raise ValueError(f"r must lie in [0, {C.k}]")
    N = gaussian_binomial(C.k, r, C.q)
    if N > guard:
        raise SubcodeGuard(N, guard, f"{r}-dimensional subcodes")
    B = subspaces(C.field, C.k, r, guard)
    if r == 0:
        return B, np.zeros(1, dtype=np.int64)
    sums = kernels.span_weight_sums(C.field, weights(C), B)
    scale = C.q**r - C.q ** (r - 1)
    assert np.all(sums % scale == 0)
    return B, sums // scale


def generalized_hamming_weight(C, r, guard=_config.SUBCODE_GUARD, sample=16):
    """d_r and the r-dimensional weight distribution, by exhaustive subcode scan.

    Support sizes come from the averaging identity; ``sample`` subcodes (spread
    evenly) are re-measured directly as a union of supports.
    """
    B, supp = subcode_supports(C, r, guard)
    if r > 0 and sample:
        for s in np.unique(np.linspace(0, len(B) - 1, min(sample, len(B))).astype(int)):
            direct = int(np.count_nonzero(C.encode(B[s]).any(axis=0)))
            assert direct == supp[s], "averaging identity disagrees with support union"
    dist = np.bincount(supp, minlength=C.n + 1)
    return GHW(r, int(supp.min()), tuple(int(x) for x in dist))


# ---------------------------------------------------------------------------
# designs


@dataclass(frozen=True)
class DesignCheck:
    t: int
    v: int
    block_size: int
    b: int
    lambda_: int | None
    is_design: bool
    has_uniform_multiplicity: bool
    distinct_supports: int


def support_design_check(C, w, t, guard=10**6):
    """Do the supports of weight-w codewords form a t-design (blocks as a multiset)?"""
    _, cw = codewords_of_weight(C, w)
    if cw.shape[0] == 0:
        raise NoSuchWeight(f"no codewords of weight {w}")
    if comb(C.n, t) > guard:
        raise EnumerationGuard(comb(C.n, t), guard, f"{t}-subsets")
    S, mult = np.unique(cw != 0, axis=0, return_counts=True)
    uniform = bool(np.all(mult % (C.q - 1) == 0))
    blocks = mult // (C.q - 1) if uniform else mult
    b = int(blocks.sum())
    S = S.astype(np.int64)
    if t == 0:
        cover = np.array([b])
    else:
        subsets = np.array(list(combinations(range(C.n), t)), dtype=np.int64)
        cover = np.empty(len(subsets), dtype=np.int64)
        step = max(1, (1 << 20) // max(1, S.shape[0] * t))
        for lo in range(0, len(subsets), step):
            sub = subsets[lo : lo + step]
            inside = S[:, sub].all(axis=2)  # blocks x subsets
            cover[lo : lo + step] = blocks @ inside
    const = bool(np.all(cover == cover[0]))
    return DesignCheck(
        t=t,
        v=C.n,
        block_size=w,
        b=b,
        lambda_=int(cover[0]) if const else None,
        is_design=const and uniform,
        has_uniform_multiplicity=uniform,
        distinct_supports=int(S.shape[0]),
    )


def monomial_equivalent(Ca, Cb, budget=10**7):
    from .equivalence import monomial_equivalent as _meq

    return _meq(Ca, Cb, budget)
