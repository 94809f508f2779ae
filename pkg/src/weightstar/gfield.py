"""Arithmetic in GF(p^m) on integer element codes.

An element is stored as ``code = c_0 + c_1 p + ... + c_{m-1} p^{m-1}``, the base-p
digits of its polynomial representative modulo the field's modulus.  Code 0 is the
additive identity, code 1 the multiplicative one.  All array methods accept numpy
arrays (or Python ints) of codes and work element-wise.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import kernels
from ._moduli import DEFAULT_MODULI
from .errors import (
    DivisionByZero,
    FieldMismatch,
    FieldTooLarge,
    NonPrime,
    NoTableEntry,
    ParseError,
    ReducibleModulus,
)

MAX_Q = 1 << 20


def is_prime(p):
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def prime_power(q):
    """Return (p, m) with q = p^m, or None."""
    if q < 2:
        return None
    p = 2
    while p * p <= q and q % p:
        p += 1
    if q % p:
        p = q
    m, r = 0, q
    while r % p == 0:
        r //= p
        m += 1
    return (p, m) if r == 1 else None


# ---------------------------------------------------------------------------
# polynomials over GF(p), coefficient lists low-order first


def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _polymod(a, f, p):
    a = [c % p for c in a]
    a = _trim(a)
    df = len(f) - 1
    inv_lead = pow(f[-1], p - 2, p)
    while len(a) - 1 >= df and a:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - df
        for i, fc in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fc) % p
        a = _trim(a)
    return a


def _polymulmod(a, b, f, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _polymod(out, f, p)


def _polypowmod(a, e, f, p):
    result = [1]
    base = _polymod(a, f, p)
    while e:
        if e & 1:
            result = _polymulmod(result, base, f, p)
        base = _polymulmod(base, base, f, p)
        e >>= 1
    return result


def _polygcd(a, b, p):
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _polymod(a, b, p)
    return a


def is_irreducible(modulus, p):
    """Irreducibility of a monic polynomial over GF(p).

    Degree <= 3: irreducible iff it has no root.  Otherwise: no common factor with
    x^(p^i) - x for i <= m/2.
    """
    f = [c % p for c in modulus]
    m = len(f) - 1
    if m < 1 or f[-1] != 1:
        return False
    if m == 1:
        return True
    if m <= 3:
        for x in range(p):
            acc = 0
            for c in reversed(f):
                acc = (acc * x + c) % p
            if acc == 0:
                return False
        return True
    xp = [0, 1]
    for _ in range(m // 2):
        xp = _polypowmod(xp, p, f, p)
        diff = list(xp) + [0] * max(0, 2 - len(xp))
        diff[1] = (diff[1] - 1) % p
        if len(_polygcd(f, diff, p)) > 1:
            return False
    return True


def _prime_factors(n):
    out, f = [], 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------


class FieldSpec:
    """GF(p^m) with log/antilog tables for a fixed primitive element.

    Build instances with :func:`field_new`; they are immutable and cached, so the
    same parameters always return the same object.
    """

    def __init__(self, p, m, modulus, alpha, exp, log):
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = tuple(modulus)
        self.alpha = alpha
        exp.setflags(write=False)
        log.setflags(write=False)
        self.exp = exp
        self.log = log

    def __repr__(self):
        return field_text(self)

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and (self.p, self.m, self.modulus) == (
            other.p,
            other.m,
            other.modulus,
        )

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __call__(self, code):
        return Felt(self, int(code))

    # --- element-wise arithmetic on codes -------------------------------

    def add(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        p = self.p
        if p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % p
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        pw = 1
        for _ in range(self.m):
            out += ((a // pw + b // pw) % p) * pw
            pw *= p
        return out

    def neg(self, a):
        a = np.asarray(a, dtype=np.int64)
        p = self.p
        if p == 2:
            return a.copy()
        if self.m == 1:
            return (-a) % p
        out = np.zeros_like(a)
        pw = 1
        for _ in range(self.m):
            out += ((-(a // pw)) % p) * pw
            pw *= p
        return out

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.q == 2:
            return a & b
        out = self.exp[(self.log[a] + self.log[b]) % (self.q - 1)]
        return np.where((a == 0) | (b == 0), 0, out)

    def inv(self, a):
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise DivisionByZero("inverse of zero")
        return self.exp[(-self.log[a]) % (self.q - 1)]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def power(self, a, e):
        a = np.asarray(a, dtype=np.int64)
        e = int(e)
        if e == 0:
            return np.ones_like(a)
        out = self.exp[(self.log[a] * (e % (self.q - 1))) % (self.q - 1)]
        return np.where(a == 0, 0, out)

    def trace(self, a):
        """Absolute trace a + a^p + ... + a^(p^(m-1)), a code in [0, p)."""
        a = np.asarray(a, dtype=np.int64)
        acc = np.zeros_like(a)
        e = 1
        for _ in range(self.m):
            acc = self.add(acc, self.power(a, e))
            e *= self.p
        return acc

    def digits(self, a):
        """Base-p digits, shape a.shape + (m,), low-order first."""
        a = np.asarray(a, dtype=np.int64)
        pw = self.p ** np.arange(self.m, dtype=np.int64)
        return (a[..., None] // pw) % self.p

    def from_digits(self, d):
        d = np.asarray(d, dtype=np.int64)
        pw = self.p ** np.arange(self.m, dtype=np.int64)
        return (d % self.p) @ pw

    def elements(self):
        return np.arange(self.q, dtype=np.int64)

    def in_prime_subfield(self, a):
        return np.asarray(a) < self.p


@dataclass(frozen=True)
class Felt:
    """A single field element; arithmetic checks that both sides share a field."""

    field: FieldSpec
    code: int

    def __post_init__(self):
        if not 0 <= self.code < self.field.q:
            raise ValueError(f"code {self.code} outside [0, {self.field.q})")

    def _other(self, other):
        if isinstance(other, Felt):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other.code
        return int(other) % self.field.p if isinstance(other, int) else other

    def __add__(self, other):
        return Felt(self.field, int(self.field.add(self.code, self._other(other))))

    def __sub__(self, other):
        return Felt(self.field, int(self.field.sub(self.code, self._other(other))))

    def __mul__(self, other):
        return Felt(self.field, int(self.field.mul(self.code, self._other(other))))

    def __truediv__(self, other):
        return Felt(self.field, int(self.field.div(self.code, self._other(other))))

    def __neg__(self):
        return Felt(self.field, int(self.field.neg(self.code)))

    def __int__(self):
        return self.code

    def __repr__(self):
        return f"Felt({self.code})"


_OPS = {"add": Felt.__add__, "sub": Felt.__sub__, "mul": Felt.__mul__, "div": Felt.__truediv__}


def arith(a, b, op):
    if op not in _OPS:
        raise ValueError(f"unknown op {op!r}")
    return _OPS[op](a, b)


def trace_to_prime(x):
    return Felt(x.field, int(x.field.trace(x.code)))


def field_new(p, m=1, modulus=None):
    """Validated GF(p^m); ``modulus`` is a coefficient list, low-order first."""
    return _field_new(int(p), int(m), None if modulus is None else tuple(int(c) for c in modulus))


@lru_cache(maxsize=None)
def _field_new(p, m, modulus):
    if not is_prime(p) or p > 1 << 16:
        raise NonPrime(f"{p} is not a prime <= 2^16")
    if m < 1:
        raise ValueError("extension degree must be >= 1")
    q = p**m
    if q > MAX_Q:
        raise FieldTooLarge(f"q = {q} > 2^20")
    if modulus is None:
        if m == 1:
            modulus = (0, 1)
        elif (p, m) in DEFAULT_MODULI:
            modulus = DEFAULT_MODULI[(p, m)]
        else:
            raise NoTableEntry(f"no default modulus for GF({p}^{m})")
    modulus = tuple(c % p for c in modulus)
    if len(modulus) != m + 1 or modulus[-1] != 1:
        raise ReducibleModulus(f"modulus must be monic of degree {m}")
    if not is_irreducible(list(modulus), p):
        raise ReducibleModulus(f"{list(modulus)} is reducible over GF({p})")

    mod = np.array(modulus, dtype=np.int64)
    exp = np.zeros(max(q - 1, 1), dtype=np.int64)
    alpha = None
    if q == 2:
        alpha = 1
        exp[0] = 1
    else:
        for g in range(2, q):
            if kernels.power_cycle(g, mod, p, m, q, exp) == q - 1:
                alpha = g
                break
    assert alpha is not None, "multiplicative group must be cyclic"
    log = np.zeros(q, dtype=np.int64)
    log[exp] = np.arange(q - 1, dtype=np.int64)
    return FieldSpec(p, m, modulus, alpha, exp, log)


_FIELD_RE = re.compile(r"^\s*GF\(\s*(\d+)\s*(?:\^\s*(\d+))?\s*(?:;\s*([\d\s,]*))?\)\s*$")


def parse_field(text):
    """Parse ``GF(p^m; c0,...,cm)`` or ``GF(q)``."""
    mt = _FIELD_RE.match(text)
    if not mt:
        raise ParseError(f"bad field spec {text!r}")
    base, exp_, coeffs = mt.groups()
    base = int(base)
    if exp_ is None:
        pm = prime_power(base)
        if pm is None:
            raise ParseError(f"{base} is not a prime power")
        p, m = pm
    else:
        p, m = base, int(exp_)
    modulus = None
    if coeffs is not None and coeffs.strip():
        modulus = [int(c) for c in coeffs.replace(" ", "").split(",") if c]
    return field_new(p, m, modulus)


def field_text(F):
    coeffs = ",".join(str(c) for c in F.modulus)
    return f"GF({F.p}^{F.m}; {coeffs})"
