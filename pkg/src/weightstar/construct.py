"""The weight-w star construction and what is built on top of it.

C*(w) is the code whose defining set is the set of weight-w codewords.  Writing each
such codeword as u G, its coordinate functionals on GF(q)^n pull back to the message
vectors u, so C*(w) is generated by the k x A_w matrix of weight-w messages (same
row space as the n x A_w matrix M_w of codewords).  The projectivization keeps the
message vectors whose first nonzero entry is 1, which is the lexicographically
smallest member of each scalar class and also its first appearance.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .code import (
    LinearCode,
    codewords_of_weight,
    from_rows_any_rank,
    hyperplane_counts,
    hyperplanes,
    is_projective,
    minimum_distance,
    support_design_check,
    weight_distribution,
)
from .equivalence import UNKNOWN, YES, find_transform
from .errors import (
    DimensionDropped,
    EmptySet,
    EquivalenceUnknown,
    HypothesisViolated,
    NoSuchWeight,
    NotProjective,
)
from .geometry import is_normalized, normalize, pg_points
from .linalg import rank_array


@dataclass(frozen=True)
class ProjPointSet:
    field: object
    k: int
    points: np.ndarray
    multiplicities: np.ndarray

    def __post_init__(self):
        P = np.array(self.points, dtype=np.int64).reshape(-1, self.k)
        m = np.array(self.multiplicities, dtype=np.int64).reshape(-1)
        if P.shape[0] != m.shape[0]:
            raise ValueError("one multiplicity per point")
        if P.shape[0] and not np.all(is_normalized(P)):
            raise ValueError("points must be normalized and nonzero")
        if np.unique(P, axis=0).shape[0] != P.shape[0]:
            raise ValueError("points must be distinct")
        if np.any(m < 1):
            raise ValueError("multiplicities must be positive")
        P.setflags(write=False)
        m.setflags(write=False)
        object.__setattr__(self, "points", P)
        object.__setattr__(self, "multiplicities", m)

    def __len__(self):
        return int(self.multiplicities.sum())

    @classmethod
    def from_vectors(cls, F, V):
        """Normalize arbitrary nonzero vectors; repeats become multiplicities (first-seen order)."""
        V = np.asarray(V, dtype=np.int64)
        if V.ndim != 2 or V.shape[0] == 0:
            raise EmptySet("no points")
        if np.any(~V.any(axis=1)):
            raise ValueError("zero vector is not a projective point")
        N = normalize(F, V)
        _, first, cnt = np.unique(N, axis=0, return_index=True, return_counts=True)
        order = np.argsort(first, kind="stable")
        return cls(F, V.shape[1], N[first[order]], cnt[order])


@dataclass
class StarCode:
    source: LinearCode
    w: int
    A_w: int
    messages: np.ndarray  # weight-w messages, lexicographic
    star: LinearCode
    proj: LinearCode
    span_dim: int
    proj_points: np.ndarray = field(repr=False, default=None)

    def summary(self):
        dist = weight_distribution(self.proj)
        return {
            "w": self.w,
            "span_dim": self.span_dim,
            "A_w": self.A_w,
            "proj_length": self.proj.n,
            "proj_weights": {str(i): a for i, a in dist.as_dict().items() if i},
        }


def star(C, w):
    U, _ = codewords_of_weight(C, w)
    if U.shape[0] == 0:
        raise NoSuchWeight(f"no codewords of weight {w}")
    F = C.field
    span_dim = rank_array(F, U)
    star_code = from_rows_any_rank(F, U.T)
    P = U[is_normalized(U)]
    proj = from_rows_any_rank(F, P.T)
    assert star_code.k == proj.k == span_dim
    assert P.shape[0] * (C.q - 1) == U.shape[0]
    return StarCode(C, w, U.shape[0], U, star_code, proj, span_dim, P)


def defining_set(C, w):
    U, _ = codewords_of_weight(C, w)
    if U.shape[0] == 0:
        raise NoSuchWeight(f"no codewords of weight {w}")
    P = U[is_normalized(U)]
    return ProjPointSet(C.field, C.k, P, np.ones(P.shape[0], dtype=np.int64))


def code_from_defining_set(D):
    if len(D.points) == 0:
        raise EmptySet("empty defining set")
    cols = np.repeat(D.points, D.multiplicities, axis=0)
    return from_rows_any_rank(D.field, cols.T)


def point_set(C):
    """Projective point set of the columns; multiset when columns repeat."""
    return ProjPointSet.from_vectors(C.field, C.G.T)


def complement_points(C):
    if not is_projective(C):
        raise NotProjective("complement needs pairwise independent nonzero columns")
    F = C.field
    allp = pg_points(F, C.k)
    have = normalize(F, C.G.T)
    keep = ~(allp[:, None, :] == have[None, :, :]).all(axis=2).any(axis=1)
    P = allp[keep]
    return ProjPointSet(F, C.k, P, np.ones(P.shape[0], dtype=np.int64))


def complement_code(C):
    return code_from_defining_set(complement_points(C))


# ---------------------------------------------------------------------------


@dataclass
class DoubleStar:
    holds: bool
    lambda_: int
    witness: dict
    hypotheses: dict


def double_star_hypotheses(C, w):
    """Evaluate each hypothesis in order; returns (report, first failing name or None, cache)."""
    rep = {}
    cache = {}
    rep["projective"] = is_projective(C)
    if not rep["projective"]:
        return rep, "projective", cache
    st = star(C, w)
    cache["star"] = st
    rep["span"] = st.span_dim == C.k
    if not rep["span"]:
        return rep, "span", cache
    dc = support_design_check(C, w, 1)
    rep["1-design"] = dc.is_design
    if not dc.is_design:
        return rep, "1-design", cache
    num, den = w * st.A_w, C.n * (C.q - 1)
    rep["lambda-integral"] = num % den == 0
    if num % den:
        return rep, "lambda-integral", cache
    lam = num // den
    cache["lambda"] = lam
    A_lam = weight_distribution(st.proj)[lam]
    rep["A_lambda"] = A_lam == C.n * (C.q - 1)
    if not rep["A_lambda"]:
        return rep, "A_lambda", cache
    return rep, None, cache


def double_star_check(C, w, budget=10**7):
    """Is the projectivized star of C*(w) at lambda = w A_w / (n(q-1)) equivalent to C?"""
    rep, bad, cache = double_star_hypotheses(C, w)
    if bad is not None:
        raise HypothesisViolated(bad, rep)
    lam = cache["lambda"]
    back = star(cache["star"].proj, lam).proj
    verdict, T = find_transform(back, C, budget)
    if verdict == UNKNOWN:
        raise EquivalenceUnknown(f"search budget {budget} exhausted")
    witness = {"double_star_length": back.n, "double_star_k": back.k}
    if verdict == YES:
        witness["transform"] = T.tolist()
    else:
        witness["double_star_weights"] = weight_distribution(back).as_dict()
        witness["code_weights"] = weight_distribution(C).as_dict()
    return DoubleStar(verdict == YES, lam, witness, rep)


# ---------------------------------------------------------------------------


def is_blocking_set(C, w):
    """Does wt^{-1}(w) meet every codimension-1 subcode?  Two independent routes."""
    st = star(C, w)
    if st.span_dim < C.k:
        raise DimensionDropped(f"weight-{w} words span dimension {st.span_dim} < {C.k}")
    counts = hyperplane_counts(C, w)
    path_a = bool(np.all(counts > 0))
    path_b = weight_distribution(st.proj)[st.proj.n] == 0
    if path_a != path_b:
        raise AssertionError("hyperplane scan and star weight count disagree")
    return path_a


def extension_hyperplanes(C):
    """Functionals whose kernel holds no minimum-weight word (lexicographic order)."""
    d = minimum_distance(C)
    counts = hyperplane_counts(C, d)
    return hyperplanes(C)[counts == 0]


def extend_if_possible(C, all_matches=False):
    """Extend by one coordinate f(c) raising d by one, or None.

    Returns (C', h) where h is the functional on message space (c = uG gives f(c) = h.u);
    with ``all_matches`` also the number of valid functionals.
    """
    d = minimum_distance(C)
    st = star(C, d)
    if st.span_dim < C.k:
        raise DimensionDropped(f"minimum-weight words span dimension {st.span_dim} < {C.k}")
    n_star = st.proj.n
    if weight_distribution(st.proj)[n_star] == 0:
        return (None, 0) if all_matches else None
    good = extension_hyperplanes(C)
    assert len(good) == weight_distribution(st.proj)[n_star] // (C.q - 1)
    h = good[0]
    ext = LinearCode(C.field, np.hstack([C.G, h[:, None]]))
    if minimum_distance(ext) != d + 1:
        raise AssertionError("extension did not raise the minimum distance")
    return ((ext, h), len(good)) if all_matches else (ext, h)
