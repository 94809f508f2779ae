"""Deterministic constructors for the code families used as fixtures.

Point sets are listed lexicographically and become generator columns in that order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .code import LinearCode
from .errors import BadParams, OddCharacteristic
from .geometry import pg_points
from .gfield import field_new, prime_power

GOLAY_G = (
    (1, 0, 0, 0, 0, 0, 2, 0, 1, 2, 1),
    (0, 1, 0, 0, 0, 0, 1, 2, 2, 2, 1),
    (0, 0, 1, 0, 0, 0, 1, 1, 1, 0, 1),
    (0, 0, 0, 1, 0, 0, 1, 1, 0, 2, 2),
    (0, 0, 0, 0, 1, 0, 2, 1, 2, 2, 0),
    (0, 0, 0, 0, 0, 1, 0, 2, 1, 2, 2),
)

# alpha^6 - alpha^4 + alpha^2 - alpha + 2 = 0, coefficients mod 3, low order first
F729_MODULUS = (2, 2, 1, 0, 2, 0, 1)


def _field(q):
    pm = prime_power(q)
    if pm is None:
        raise BadParams(f"{q} is not a prime power")
    return field_new(*pm)


def _from_points(F, P):
    return LinearCode(F, np.asarray(P, dtype=np.int64).T)


def _sorted_points(P):
    P = np.asarray(P, dtype=np.int64)
    order = np.lexsort(P.T[::-1])
    return P[order]


def simplex(q, k):
    if k < 1:
        raise BadParams("k >= 1")
    F = _field(q)
    return _from_points(F, pg_points(F, k))


def punctured_simplex(q, k):
    if k < 2:
        raise BadParams("k >= 2")
    F = _field(q)
    return _from_points(F, pg_points(F, k)[:-1])


def complement_of_subspace(q, k, t):
    """PG(k-1,q) minus the t-dimensional subspace on the first t+1 basis points."""
    if not 0 <= t <= k - 2:
        raise BadParams(f"need 0 <= t <= k-2, got t={t}, k={k}")
    F = _field(q)
    P = pg_points(F, k)
    inside = ~P[:, t + 1 :].any(axis=1)
    return _from_points(F, P[~inside])


def two_disjoint_subspaces(q, l):
    if l < 1:
        raise BadParams("l >= 1")
    F = _field(q)
    L = pg_points(F, l)
    z = np.zeros_like(L)
    P = np.vstack([np.hstack([L, z]), np.hstack([z, L])])
    return _from_points(F, _sorted_points(P))


def hyperoval_points(q):
    F = _field(q)
    if F.p != 2:
        raise OddCharacteristic(f"hyperovals need even q, got {q}")
    t = np.arange(q, dtype=np.int64)
    conic = np.stack([np.ones_like(t), t, F.mul(t, t)], axis=1)
    P = np.vstack([conic, [[0, 1, 0], [0, 0, 1]]])
    return F, _sorted_points(P)


def hyperoval(q):
    F, P = hyperoval_points(q)
    return _from_points(F, P)


def _is_power_of_two(x):
    return x >= 2 and x & (x - 1) == 0


def denniston_form(F):
    """Smallest (a, b, c) in code order with a x^2 + b xy + c y^2 anisotropic."""
    x, y = np.meshgrid(np.arange(F.q), np.arange(F.q), indexing="ij")
    x, y = x.ravel()[1:], y.ravel()[1:]  # drop (0, 0)
    xx, xy, yy = F.mul(x, x), F.mul(x, y), F.mul(y, y)
    for a in range(1, F.q):
        for b in range(1, F.q):
            for c in range(1, F.q):
                v = F.add(F.add(F.mul(a, xx), F.mul(b, xy)), F.mul(c, yy))
                if np.all(v != 0):
                    return a, b, c
    raise AssertionError("an anisotropic binary quadratic form always exists")


def denniston_points(q, h):
    if not (_is_power_of_two(q) and _is_power_of_two(h) and 1 < h < q and q % h == 0):
        raise BadParams(f"denniston needs powers of two with 1 < h < q, h | q; got q={q}, h={h}")
    F = _field(q)
    a, b, c = denniston_form(F)
    x, y = np.meshgrid(np.arange(q), np.arange(q), indexing="ij")
    x, y = x.ravel(), y.ravel()
    phi = F.add(F.add(F.mul(a, F.mul(x, x)), F.mul(b, F.mul(x, y))), F.mul(c, F.mul(y, y)))
    keep = phi < h  # codes 0..h-1: the span of the first log2(h) basis elements
    P = np.stack([np.ones(int(keep.sum()), dtype=np.int64), x[keep], y[keep]], axis=1)
    return F, P


def denniston(q, h):
    F, P = denniston_points(q, h)
    return _from_points(F, P)


def ternary_golay():
    return LinearCode(field_new(3), np.array(GOLAY_G))


def trace_set(shift=1):
    """Exponents i < 364 with Tr(alpha^(2i + shift)) = 0, and the field."""
    F = field_new(3, 6, F729_MODULUS)
    i = np.arange((3**6 - 1) // 2)
    tr = F.trace(F.exp[(2 * i + shift) % (F.q - 1)])
    return F, i[tr == 0]


def trace_f729():
    """[112, 6] two-weight code over GF(3) from a trace condition in GF(3^6).

    The coordinate set is {alpha^i : 0 <= i < 364, Tr(alpha^(2i+1)) = 0}; each alpha^i
    contributes its polynomial-basis coordinates as a column.
    """
    F, idx = trace_set(1)
    elems = F.exp[idx]
    cols = F.digits(elems)  # (112, 6), base-3 digits = polynomial coordinates
    return LinearCode(field_new(3), cols.T)


@dataclass(frozen=True)
class FamilyId:
    name: str
    params: tuple = ()

    def __post_init__(self):
        if self.name not in FAMILIES:
            raise BadParams(f"unknown family {self.name!r}")
        arity = FAMILIES[self.name][1]
        if len(self.params) != arity:
            raise BadParams(f"{self.name} takes {arity} parameters, got {len(self.params)}")
        object.__setattr__(self, "params", tuple(int(x) for x in self.params))

    def build(self):
        return FAMILIES[self.name][0](*self.params)

    def __str__(self):
        return f"{self.name}({','.join(map(str, self.params))})"


FAMILIES = {
    "simplex": (simplex, 2),
    "punctured_simplex": (punctured_simplex, 2),
    "complement_of_subspace": (complement_of_subspace, 3),
    "two_disjoint_subspaces": (two_disjoint_subspaces, 2),
    "hyperoval": (hyperoval, 1),
    "denniston": (denniston, 2),
    "ternary_golay": (ternary_golay, 0),
    "trace_f729": (trace_f729, 0),
}


def family(name, *params):
    return FamilyId(name, tuple(params)).build()
