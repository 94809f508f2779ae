"""Hot enumeration kernels with a numba path and a pure-numpy path.

The path is fixed at import time by ``_config.USE_NUMBA`` (env
``WEIGHTSTAR_DISABLE_NUMBA=1`` selects numpy).  Both paths are importable
directly as ``kernels._np`` / ``kernels._jit`` for cross-checking.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .. import _config
from . import _np

USE_NUMBA = _config.USE_NUMBA
if USE_NUMBA:
    from . import _jit
else:  # pragma: no cover - exercised by the fallback CI job
    _jit = None

CHUNK = 1 << 16


def backend():
    return "numba" if USE_NUMBA else "numpy"


def power_cycle(g, modulus, p, m, q, out):
    if USE_NUMBA:
        return _jit.power_cycle(int(g), modulus, int(p), int(m), int(q), out)
    return _np.power_cycle(int(g), modulus, p, m, q, out)


@dataclass
class Rows:
    """Generator rows times every scalar, in the layouts each backend wants."""

    field: object
    k: int
    n: int
    scaled: np.ndarray  # (k, q, n) codes
    planes: np.ndarray | None = None  # jit layout

    @property
    def total(self):
        return self.field.q ** self.k


def prepare(F, G, use_numba=None):
    G = np.asarray(G, dtype=np.int64)
    k, n = G.shape
    q = F.q
    a = np.arange(q, dtype=np.int64)
    scaled = F.mul(a[None, :, None], G[:, None, :])
    rows = Rows(F, k, n, scaled)
    if USE_NUMBA if use_numba is None else use_numba:
        digits = F.digits(scaled)  # (k, q, n, m)
        digits = np.ascontiguousarray(np.moveaxis(digits, 3, 2))  # (k, q, m, n)
        if F.p == 2:
            rows.planes = _pack_bits(digits)
        else:
            rows.planes = digits.astype(np.int64)
    return rows


def _pack_bits(bits):
    """Pack the last axis of a 0/1 array into little-endian uint64 words."""
    *lead, n = bits.shape
    W = max(1, (n + 63) // 64)
    padded = np.zeros((*lead, W * 64), dtype=np.uint8)
    padded[..., :n] = bits
    packed = np.packbits(padded.reshape(*lead, W, 64), axis=-1, bitorder="little")
    return np.ascontiguousarray(packed).view(np.uint64).reshape(*lead, W)


def message_weights(rows, lo, hi, use_numba=None):
    """Codeword weights for message indices lo..hi-1 (lexicographic order)."""
    out = np.empty(hi - lo, dtype=np.int32)
    if hi <= lo:
        return out
    jit = USE_NUMBA if use_numba is None else use_numba
    if jit and rows.planes is not None:
        F = rows.field
        if F.p == 2:
            _jit.weights_packed(rows.planes, F.q, lo, hi, out)
        else:
            _jit.weights_modp(rows.planes, F.p, F.q, lo, hi, out)
        return out
    return _np.message_weights(rows.field, rows.scaled, lo, hi)


def _ranges(total, chunk=CHUNK):
    return [(lo, min(total, lo + chunk)) for lo in range(0, total, chunk)]


def all_weights(rows, threads=None):
    """Weights of every codeword, index = message index.  Chunks run in parallel."""
    total = rows.total
    threads = threads or _config.threads()
    parts = _ranges(total)
    if threads == 1 or len(parts) == 1:
        res = [message_weights(rows, lo, hi) for lo, hi in parts]
    else:
        with ThreadPoolExecutor(threads) as ex:
            res = list(ex.map(lambda r: message_weights(rows, *r), parts))
    return np.concatenate(res) if res else np.empty(0, dtype=np.int32)


def weight_counts(rows, threads=None):
    """Weight histogram of all codewords; per-chunk counts merged by addition."""
    n = rows.n
    total = rows.total
    threads = threads or _config.threads()
    parts = _ranges(total)

    def one(r):
        return np.bincount(message_weights(rows, *r), minlength=n + 1)

    if threads == 1 or len(parts) == 1:
        res = [one(r) for r in parts]
    else:
        with ThreadPoolExecutor(threads) as ex:
            res = list(ex.map(one, parts))
    counts = np.zeros(n + 1, dtype=np.int64)
    for c in res:
        counts += c
    return counts


def _tables(F):
    return F.p, F.m, F.q, F.exp, F.log


def syndrome_table(F, G, use_numba=None):
    G = np.asarray(G, dtype=np.int64)
    if USE_NUMBA if use_numba is None else use_numba:
        a = np.arange(F.q, dtype=np.int64)
        cols = np.ascontiguousarray(F.mul(a[None, :, None], G.T[:, None, :]))  # (n, q, k)
        return _jit.syndrome_table(cols, *_tables(F))
    return _np.syndrome_table(F, G)


_TABLE_Q = 1024
_table_cache = {}


def _arith(F):
    """(kind, p, add table, mul table) for the table-driven jit kernels."""
    key = (F.p, F.m, tuple(F.modulus))
    if key not in _table_cache:
        dummy = np.zeros((1, 1), dtype=np.int64)
        if F.q == 2:
            val = (0, 2, dummy, dummy)
        elif F.m == 1:
            val = (1, F.p, dummy, dummy)
        else:
            a = np.arange(F.q, dtype=np.int64)
            add = np.ascontiguousarray(F.add(a[:, None], a[None, :]))
            mul = np.ascontiguousarray(F.mul(a[:, None], a[None, :]))
            val = (2, F.p, add, mul)
        _table_cache[key] = val
    return _table_cache[key]


def _tabled(F):
    return F.m == 1 or F.q <= _TABLE_Q


def subspace_zero_counts(F, D, B, use_numba=None):
    D = np.ascontiguousarray(D, dtype=np.int64)
    B = np.ascontiguousarray(B, dtype=np.int64)
    if B.shape[0] == 0:
        return np.zeros(0, dtype=np.int64)
    if USE_NUMBA if use_numba is None else use_numba:
        if _tabled(F):
            return _jit.subspace_zero_counts_tab(D, B, *_arith(F))
        return _jit.subspace_zero_counts(D, B, *_tables(F))
    return _np.subspace_zero_counts(F, D, B)


def span_weight_sums(F, weights, B, use_numba=None):
    B = np.ascontiguousarray(B, dtype=np.int64)
    r = B.shape[1]
    coefs = _np._int_digits(np.arange(F.q**r), F.q, r)
    weights = np.ascontiguousarray(weights, dtype=np.int64)
    if B.shape[0] == 0:
        return np.zeros(0, dtype=np.int64)
    if USE_NUMBA if use_numba is None else use_numba:
        if _tabled(F):
            return _jit.span_weight_sums_tab(weights, B, coefs, F.q, *_arith(F))
        return _jit.span_weight_sums(weights, B, coefs, *_tables(F))
    return _np.span_weight_sums(F, weights, B, coefs)
