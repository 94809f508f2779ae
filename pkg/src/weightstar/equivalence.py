"""Monomial equivalence of projective codes.

Two codes are monomially equivalent iff some linear bijection between them keeps
every Hamming weight (the extension theorem).  The search picks a message basis of
the first code from its rarest weight classes and backtracks over images of that
basis in the second code, checking weights on the whole span after each choice.
A found map T is confirmed by comparing the projective column multisets of G_a
and T G_b.
"""

from __future__ import annotations

import numpy as np

from .code import generalized_hamming_weight, is_projective, weight_distribution, weights
from .errors import NotProjective, ParameterMismatch
from .geometry import gaussian_binomial, index_to_vectors, normalize, vectors_to_index
from .linalg import inverse_array, matmul

YES, NO, UNKNOWN = "yes", "no", "unknown"
_GHW_PREFILTER = 10**4
_CELLS = 1 << 21


def column_multiset(F, G):
    """Sorted normalized columns with multiplicities."""
    N = normalize(F, np.asarray(G).T)
    pts, cnt = np.unique(N, axis=0, return_counts=True)
    return pts, cnt


def same_point_multiset(F, Ga, Gb):
    pa, ca = column_multiset(F, Ga)
    pb, cb = column_multiset(F, Gb)
    return pa.shape == pb.shape and np.array_equal(pa, pb) and np.array_equal(ca, cb)


def _pick_basis(F, k, wa, dist):
    """Message basis of the first code, drawn from the rarest weight classes."""
    q = F.q
    order = sorted((a, w) for w, a in enumerate(dist.counts) if a and w)
    spanned = np.zeros(q**k, dtype=bool)
    spanned[0] = True
    span = np.zeros((1, k), dtype=np.int64)
    chosen = []
    for _, w in order:
        for idx in np.flatnonzero(wa == w):
            if spanned[idx]:
                continue
            v = _vec(q, k, idx)
            span = _extend_span(F, span, v)
            spanned[vectors_to_index(q, span)] = True
            chosen.append(v)
            if len(chosen) == k:
                return np.array(chosen)
    raise AssertionError("weights of a full-rank code must span its message space")


def _vec(q, k, idx):
    pw = q ** np.arange(k - 1, -1, -1, dtype=np.int64)
    return (int(idx) // pw) % q


def _extend_span(F, span, v):
    scal = np.arange(F.q, dtype=np.int64)
    sv = F.mul(scal[:, None], v[None, :])  # (q, k)
    return F.add(sv[:, None, :], span[None, :, :]).reshape(-1, span.shape[1])


class _Search:
    def __init__(self, Ca, Cb, budget):
        self.F = Ca.field
        self.q = Ca.q
        self.k = Ca.k
        self.wa = weights(Ca)
        self.wb = weights(Cb)
        self.budget = budget
        self.nodes = 0
        self.U = _pick_basis(self.F, self.k, self.wa, weight_distribution(Ca))
        scal = np.arange(1, self.q, dtype=np.int64)
        self.scaled_u = [self.F.mul(scal[:, None], u[None, :]) for u in self.U]
        self.scal = scal
        self.by_weight = {}

    def candidates(self, w, level):
        key = (w, level == 0)
        if key not in self.by_weight:
            V = index_to_vectors(self.q, self.k, np.flatnonzero(self.wb == w))
            if level == 0:  # scaling the whole map by a constant keeps weights
                lead = V[np.arange(len(V)), (V != 0).argmax(axis=1)]
                V = V[lead == 1]
            self.by_weight[key] = V
        return self.by_weight[key]

    def targets(self, level, span_a):
        new = self.F.add(self.scaled_u[level][:, None, :], span_a[None, :, :])
        return self.wa[vectors_to_index(self.q, new)]  # (q-1, |span|)

    def filter(self, V, span_b, target):
        """Candidates v for which c*v + s has the target weight for every c != 0, s in span."""
        ok = np.zeros(len(V), dtype=bool)
        per = (self.q - 1) * span_b.shape[0] * self.k
        step = max(1, _CELLS // max(per, 1))
        for lo in range(0, len(V), step):
            chunk = V[lo : lo + step]
            sv = self.F.mul(self.scal[None, :, None], chunk[:, None, :])  # (c, q-1, k)
            new = self.F.add(sv[:, :, None, :], span_b[None, None, :, :])
            w = self.wb[vectors_to_index(self.q, new)]
            ok[lo : lo + step] = np.all(w == target[None], axis=(1, 2))
        return V[ok]

    def run(self):
        k = self.k
        span_a = [np.zeros((1, k), dtype=np.int64)]
        for u in self.U:
            span_a.append(_extend_span(self.F, span_a[-1], u))
        targets = [self.targets(i, span_a[i]) for i in range(k)]
        wts = [int(self.wa[vectors_to_index(self.q, u)]) for u in self.U]
        chosen = []

        def dfs(level, span_b):
            if level == k:
                return True
            V = self.candidates(wts[level], level)
            self.nodes += len(V)
            if self.nodes > self.budget:
                raise _Budget
            for v in self.filter(V, span_b, targets[level]):
                chosen.append(v)
                if dfs(level + 1, _extend_span(self.F, span_b, v)):
                    return True
                chosen.pop()
            return False

        found = dfs(0, span_a[0])
        return np.array(chosen) if found else None


class _Budget(Exception):
    pass


def find_transform(Ca, Cb, budget=10**7):
    """(verdict, T) with T a k x k matrix such that T G_b has the columns of G_a up to
    order and scaling, when the verdict is yes."""
    if Ca.field != Cb.field or (Ca.n, Ca.k) != (Cb.n, Cb.k):
        raise ParameterMismatch(
            f"[{Ca.n},{Ca.k}] over {Ca.field} vs [{Cb.n},{Cb.k}] over {Cb.field}"
        )
    pa, pb = is_projective(Ca), is_projective(Cb)
    if not (pa or pb):
        raise NotProjective("equivalence test needs projective codes")
    if pa != pb:
        return NO, None
    if weight_distribution(Ca) != weight_distribution(Cb):
        return NO, None
    k, q = Ca.k, Ca.q
    if 2 <= k and gaussian_binomial(k, 2, q) <= _GHW_PREFILTER:
        if generalized_hamming_weight(Ca, 2) != generalized_hamming_weight(Cb, 2):
            return NO, None
    search = _Search(Ca, Cb, budget)
    try:
        V = search.run()
    except _Budget:
        return UNKNOWN, None
    if V is None:
        return NO, None
    F = Ca.field
    T = matmul(F, inverse_array(F, search.U), V)
    if not same_point_multiset(F, Ca.G, matmul(F, T, Cb.G)):
        raise AssertionError("weight-preserving map without matching point sets")
    return YES, T


def monomial_equivalent(Ca, Cb, budget=10**7):
    return find_transform(Ca, Cb, budget)[0]
