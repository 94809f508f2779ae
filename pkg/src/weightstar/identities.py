"""Closed-form predictions, all in exact integer / rational arithmetic.

MacWilliams transform, Pless moments, the Griesmer bound, and the two-weight
formulas (distributions, bounds, star predictions, divisibility, extendability).
Nothing here enumerates a code except ``coset_weight_spectrum``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb

import numpy as np

from . import kernels
from ._config import COSET_GUARD
from .errors import (
    BoundaryCase,
    BoundViolated,
    DivisibilityViolated,
    EnumerationGuard,
    NonIntegralResult,
)


def _counts(A):
    return [int(a) for a in (A.counts if hasattr(A, "counts") else A)]


def _exact(x, what):
    x = Fraction(x)
    if x.denominator != 1:
        raise NonIntegralResult(f"{what} = {x} is not an integer")
    return int(x)


def krawtchouk(j, i, n, q):
    return sum((-1) ** s * (q - 1) ** (j - s) * comb(i, s) * comb(n - i, j - s) for s in range(j + 1))


@lru_cache(maxsize=32)
def krawtchouk_matrix(n, q):
    """K[j][i] = K_j(i) for 0 <= i, j <= n, by the three-term recurrence in j."""
    K = [[1] * (n + 1), [(n - i) * (q - 1) - i for i in range(n + 1)]] if n else [[1]]
    for j in range(1, n):
        nxt = []
        for i in range(n + 1):
            v = ((n - j) * (q - 1) - q * i + j) * K[j][i] - (q - 1) * (n - j + 1) * K[j - 1][i]
            nxt.append(v // (j + 1))
        K.append(nxt)
    return K


def macwilliams(A, n, k, q):
    """Weight distribution of the dual from that of the code."""
    A = _counts(A)
    if len(A) != n + 1:
        raise ValueError(f"distribution has {len(A)} entries, expected {n + 1}")
    if sum(A) != q**k:
        raise NonIntegralResult(f"sum of A is {sum(A)}, not q^k = {q**k}")
    K = krawtchouk_matrix(n, q)
    support = [(i, a) for i, a in enumerate(A) if a]
    out = []
    for j in range(n + 1):
        Kj = K[j]
        num = sum(a * Kj[i] for i, a in support)
        v = _exact(Fraction(num, q**k), f"A_{j} of the dual")
        if v < 0:
            raise NonIntegralResult(f"A_{j} of the dual would be {v}")
        out.append(v)
    return out


def macwilliams_coefficient_check(A, A_dual, n, k, q):
    """Residuals of sum_{i<=n-r} C(n-i,r) A_i = q^(k-r) sum_{i<=r} C(n-i,n-r) A_i^perp, r = 0..n."""
    A, B = _counts(A), _counts(A_dual)
    res = []
    for r in range(n + 1):
        lhs = Fraction(sum(comb(n - i, r) * A[i] for i in range(n - r + 1)), q**k)
        rhs = Fraction(sum(comb(n - i, n - r) * B[i] for i in range(r + 1)), q**r)
        res.append(lhs - rhs)
    return res


# ---------------------------------------------------------------------------
# Pless power moments


@dataclass(frozen=True)
class Moment:
    order: int
    lhs: int
    rhs: Fraction
    form: str

    @property
    def holds(self):
        return self.lhs == self.rhs

    @property
    def residual(self):
        return self.lhs - self.rhs


@dataclass(frozen=True)
class PlessReport:
    moments: tuple

    @property
    def holds(self):
        return all(m.holds for m in self.moments)

    def failing(self):
        return [m for m in self.moments if not m.holds]


def pless_general(A, B, n, k, q):
    A, B = _counts(A), _counts(B)
    B = B + [0] * max(0, 4 - len(B))
    b1, b2, b3 = B[1], B[2], B[3]
    Q = Fraction(q)
    s = [sum(a * i**e for i, a in enumerate(A)) for e in range(4)]
    r0 = Q**k
    r1 = Q ** (k - 1) * (q * n - n - b1)
    r2 = Q ** (k - 2) * ((q - 1) * n * (q * n - n + 1) - (2 * q * n - q - 2 * n + 2) * b1 + 2 * b2)
    r3 = Q ** (k - 3) * (
        (q - 1) * n * (q * q * n * n - 2 * q * n * n + 3 * q * n - q + n * n - 3 * n + 2)
        - (3 * q * q * n * n - 3 * q * q * n - 6 * q * n * n + 12 * q * n + q * q - 6 * q + 3 * n * n - 9 * n + 6) * b1
        + 6 * (q * n - q - n + 2) * b2
        - 6 * b3
    )
    return [Moment(e, s[e], r, "general") for e, r in enumerate((r0, r1, r2, r3))]


def pless_binary(A, B, n, k):
    """Binary forms.  The cubic term is n^2 (n + 3), the q = 2 value of the general one."""
    A, B = _counts(A), _counts(B)
    B = B + [0] * max(0, 4 - len(B))
    b1, b2, b3 = B[1], B[2], B[3]
    T = Fraction(2)
    s = [sum(a * i**e for i, a in enumerate(A)) for e in range(4)]
    r = (
        T**k,
        T ** (k - 1) * (n - b1),
        T ** (k - 2) * (n * (n + 1) - 2 * n * b1 + 2 * b2),
        T ** (k - 3) * (n * n * (n + 3) - (3 * n * n + 3 * n - 2) * b1 + 6 * n * b2 - 6 * b3),
    )
    return [Moment(e, s[e], r[e], "binary") for e in range(4)]


def pless_check(A, A_dual, n, k, q):
    moments = pless_general(A, A_dual, n, k, q)
    if q == 2:
        moments += pless_binary(A, A_dual, n, k)
    return PlessReport(tuple(moments))


def griesmer(k, d, q):
    return sum(-(-d // q**i) for i in range(k))


# ---------------------------------------------------------------------------
# two-weight profiles


def twoweight_distribution(n, k, q, w1, w2):
    """(A_w1, A_w2) of a two-weight [n,k] code with dual distance >= 2."""
    if w1 == w2:
        raise ValueError("weights must differ")
    tot = n * q ** (k - 1) * (q - 1)
    a1 = _exact(Fraction(w2 * (q**k - 1) - tot, w2 - w1), "A_w1")
    a2 = _exact(Fraction(w1 * (q**k - 1) - tot, w1 - w2), "A_w2")
    if a1 < 0 or a2 < 0:
        raise NonIntegralResult(f"negative frequencies ({a1}, {a2})")
    return a1, a2


@dataclass
class TwoWeightProfile:
    n: int
    k: int
    q: int
    w1: int
    w2: int
    A_w1: int = None
    A_w2: int = None
    projective: bool = True
    boundary: bool = field(init=False)
    extendable_predicted: bool = field(init=False)
    n_comp: int = field(init=False)
    w1_comp: int = field(init=False)
    w2_comp: int = field(init=False)

    def __post_init__(self):
        if self.w1 > self.w2:
            self.w1, self.w2 = self.w2, self.w1
            self.A_w1, self.A_w2 = self.A_w2, self.A_w1
        if self.A_w1 is None or self.A_w2 is None:
            self.A_w1, self.A_w2 = twoweight_distribution(self.n, self.k, self.q, self.w1, self.w2)
        n, k, q = self.n, self.k, self.q
        if self.A_w1 + self.A_w2 != q**k - 1:
            raise NonIntegralResult("frequencies do not sum to q^k - 1")
        if self.w1 * self.A_w1 + self.w2 * self.A_w2 != n * q ** (k - 1) * (q - 1):
            raise NonIntegralResult("first moment fails")
        self.boundary = self.w1 * q == n * (q - 1)
        self.extendable_predicted = extendability_criterion(self)
        self.n_comp = (q**k - 1) // (q - 1) - n
        self.w1_comp = q ** (k - 1) - self.w2
        self.w2_comp = q ** (k - 1) - self.w1

    def to_json(self):
        return {
            "n": self.n, "k": self.k, "q": self.q, "w1": self.w1, "w2": self.w2,
            "A_w1": self.A_w1, "A_w2": self.A_w2, "projective": self.projective,
            "boundary": self.boundary, "extendable_predicted": self.extendable_predicted,
            "n_comp": self.n_comp, "w1_comp": self.w1_comp, "w2_comp": self.w2_comp,
        }


def profile_from_distribution(dist, projective=True):
    """Profile of a code whose distribution has exactly two nonzero weights."""
    ws = dist.nonzero_weights
    if len(ws) != 2:
        raise ValueError(f"not a two-weight distribution: weights {ws}")
    w1, w2 = ws
    return TwoWeightProfile(dist.n, dist.k, dist.q, w1, w2, dist[w1], dist[w2], projective)


@dataclass(frozen=True)
class BoundsReport:
    upper_w1: bool
    lower_w2: bool
    boundary: bool
    k2: int | None


def bounds_check(p):
    n, k, q = p.n, p.k, p.q
    up = p.w1 * q <= n * (q - 1)
    low = p.w2 * q >= n * (q - 1) + 2
    if not up:
        raise BoundViolated(f"w1 = {p.w1} > n(q-1)/q = {Fraction(n * (q - 1), q)}")
    if not low:
        raise BoundViolated(f"w2 = {p.w2} < (n(q-1)+2)/q = {Fraction(n * (q - 1) + 2, q)}")
    k2 = None
    if p.boundary:
        gap = q**k - n * (q - 1)
        e = 0
        while gap > 1 and gap % q == 0:
            gap //= q
            e += 1
        if gap != 1:
            raise BoundViolated(f"q^k - n(q-1) = {q**k - n * (q - 1)} is not a power of {q}")
        k2 = k - e
    return BoundsReport(up, low, p.boundary, k2)


@dataclass(frozen=True)
class StarPrediction:
    length1: int
    length2: int
    k: int
    weights1: dict  # weight -> frequency for the projectivized star at w1
    weights2: dict
    closed_form: tuple  # (w11, w12, w21, w22) from the closed form
    quotient_form: tuple  # the same four from w A_w / (n(q-1)) style quotients

    def to_json(self):
        return {
            "w1": {"length": self.length1, "k": self.k, "weights": {str(a): b for a, b in self.weights1.items()}},
            "w2": {"length": self.length2, "k": self.k, "weights": {str(a): b for a, b in self.weights2.items()}},
            "closed_form": list(self.closed_form),
            "quotient_form": list(self.quotient_form),
        }


def star_closed_form(p):
    n, k, q, w1, w2 = p.n, p.k, p.q, p.w1, p.w2
    c = Fraction(q ** (k - 2))
    w11 = c / (w2 - w1) * (w2 * q - n * (q - 1) - 1)
    w12 = c / (w2 - w1) * (w2 * q - n * (q - 1))
    w21 = c / (w1 - w2) * (w1 * q - n * (q - 1))
    w22 = c / (w1 - w2) * (w1 * q - n * (q - 1) - 1)
    return w11, w12, w21, w22


def star_quotient_form(p):
    n, q = p.n, p.q
    nq = n * (q - 1)
    ncq = p.n_comp * (q - 1)
    w11 = Fraction(p.w1 * p.A_w1, nq)
    w22 = Fraction(p.w2 * p.A_w2, nq)
    w12 = Fraction(p.w2_comp * p.A_w1, ncq) if ncq else None
    w21 = Fraction(p.w1_comp * p.A_w2, ncq) if ncq else None
    return w11, w12, w21, w22


def star_prediction(p):
    if p.boundary:
        raise BoundaryCase("w1 = n(q-1)/q; use the simplex description instead")
    n, k, q = p.n, p.k, p.q
    cf = star_closed_form(p)
    qf = star_quotient_form(p)
    if tuple(cf) != tuple(qf):
        raise NonIntegralResult(f"closed form {cf} and quotient form {qf} disagree")
    w11, w12, w21, w22 = (_exact(x, "predicted weight") for x in cf)
    nq = n * (q - 1)
    rest = q**k - 1 - nq
    gap = p.w2 - p.w1
    if (w12 - w11) * gap != q ** (k - 2) or (w22 - w21) * gap != q ** (k - 2):
        raise NonIntegralResult("weight gap relation fails")
    L1 = _exact(Fraction(p.A_w1, q - 1), "length")
    L2 = _exact(Fraction(p.A_w2, q - 1), "length")
    return StarPrediction(
        L1, L2, k,
        {w11: nq, w12: rest},
        {w21: rest, w22: nq},
        (w11, w12, w21, w22),
        tuple(_exact(x, "predicted weight") for x in qf),
    )


def boundary_simplex_dimension(p):
    """k2 for the boundary case, where the star at w2 is a simplex code of dimension k2."""
    return bounds_check(p).k2


@dataclass(frozen=True)
class DivisibilityReport:
    checks: dict

    @property
    def holds(self):
        return all(self.checks.values())


def divisibility_check(p):
    n, k, q, w1, w2 = p.n, p.k, p.q, p.w1, p.w2
    g = w2 - w1
    checks = {
        "gap | q^(k-2)": q ** (k - 2) % g == 0,
        "gap | w1": w1 % g == 0,
        "gap | w2": w2 % g == 0,
        "n | w1 A_w1/(q-1)": (w1 * p.A_w1) % ((q - 1) * n) == 0,
        "n | w2 A_w2/(q-1)": (w2 * p.A_w2) % ((q - 1) * n) == 0,
    }
    rep = DivisibilityReport(checks)
    if not rep.holds:
        bad = [name for name, ok in checks.items() if not ok]
        raise DivisibilityViolated(", ".join(bad))
    return rep


def extendability_criterion(p):
    return p.w2 * (p.q ** (p.k - 1) - 1) == (p.q - 1) * p.q ** (p.k - 2) * p.n


def codim1_distribution(p, support):
    """(A_w1, A_w2) of a codimension-1 subcode with the given support size (n or n-1)."""
    n, k, q, w1, w2 = p.n, p.k, p.q, p.w1, p.w2
    if support not in (n, n - 1):
        raise ValueError("support must be n or n-1")
    m = support
    a1 = Fraction(w2 * (q ** (k - 1) - 1) - m * q ** (k - 2) * (q - 1), w2 - w1)
    a2 = Fraction(w1 * (q ** (k - 1) - 1) - m * q ** (k - 2) * (q - 1), w1 - w2)
    return _exact(a1, "A_w1 of subcode"), _exact(a2, "A_w2 of subcode")


# ---------------------------------------------------------------------------


def coset_weight_spectrum(C, guard=COSET_GUARD):
    """(u, distributions): the distinct weight distributions of the cosets of the dual.

    Cosets of C^perp are the fibres of x -> G x^T, so one pass over GF(q)^n fills a
    (syndrome, weight) table whose rows are the coset distributions.
    """
    total = C.q**C.n
    if total > guard:
        raise EnumerationGuard(total, guard, "ambient vectors")
    table = kernels.syndrome_table(C.field, C.G)
    distinct = np.unique(table, axis=0)
    rows = sorted(tuple(int(x) for x in r) for r in distinct)
    return len(rows), rows
