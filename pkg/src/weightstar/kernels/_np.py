"""Pure-numpy kernels.  Vectorised over chunks; used when numba is disabled and as
the reference the JIT kernels are tested against."""

import numpy as np

_CELLS = 1 << 22  # max elements of a temporary array


def _int_digits(idx, q, k):
    """Base-q digits of message indices, most significant first: shape (len(idx), k)."""
    idx = np.asarray(idx, dtype=np.int64)
    pw = q ** np.arange(k - 1, -1, -1, dtype=np.int64)
    return (idx[:, None] // pw) % q


def power_cycle(g, modulus, p, m, q, out):
    f = [int(c) for c in modulus]
    gd = [(g // p**i) % p for i in range(m)]
    cur = [1] + [0] * (m - 1)
    pw = [p**i for i in range(m)]
    length = 0
    while True:
        code = sum(c * w for c, w in zip(cur, pw))
        if length > 0 and code == 1:
            return length
        if length >= len(out) or code == 0:
            return -1
        out[length] = code
        length += 1
        prod = [0] * (2 * m)
        for i, a in enumerate(cur):
            if a:
                for j, b in enumerate(gd):
                    prod[i + j] += a * b
        for d in range(2 * m - 1, m - 1, -1):
            c = prod[d] % p
            if c:
                for i in range(m + 1):
                    prod[d - m + i] -= c * f[i]
        cur = [x % p for x in prod[:m]]


def message_weights(F, scaled, lo, hi):
    """Weights of codewords for message indices lo..hi-1.

    ``scaled[i, a]`` is the codeword a * G_i (codes), shape (k, q, n).
    """
    k, q, n = scaled.shape
    out = np.empty(hi - lo, dtype=np.int32)
    step = max(1, _CELLS // max(n, 1))
    for start in range(lo, hi, step):
        stop = min(hi, start + step)
        d = _int_digits(np.arange(start, stop), q, k)
        cw = scaled[0][d[:, 0]]
        for i in range(1, k):
            cw = F.add(cw, scaled[i][d[:, i]])
        out[start - lo : stop - lo] = np.count_nonzero(cw, axis=1)
    return out


def syndrome_table(F, G):
    k, n = G.shape
    q = F.q
    table = np.zeros((q**k, n + 1), dtype=np.int64)
    total = q**n
    step = max(1, _CELLS // max(n + k, 1))
    pw = q ** np.arange(k - 1, -1, -1, dtype=np.int64)
    for start in range(0, total, step):
        stop = min(total, start + step)
        X = _int_digits(np.arange(start, stop), q, n)
        S = np.zeros((stop - start, k), dtype=np.int64)
        for i in range(n):
            S = F.add(S, F.mul(X[:, i : i + 1], G[:, i][None, :]))
        sidx = S @ pw
        wt = np.count_nonzero(X, axis=1)
        np.add.at(table, (sidx, wt), 1)
    return table


def subspace_zero_counts(F, D, B):
    N, r, k = B.shape
    A = D.shape[0]
    out = np.zeros(N, dtype=np.int64)
    if A == 0:
        return out
    step = max(1, _CELLS // A)
    for start in range(0, N, step):
        stop = min(N, start + step)
        ok = np.ones((stop - start, A), dtype=bool)
        for j in range(r):
            acc = np.zeros((stop - start, A), dtype=np.int64)
            for t in range(k):
                acc = F.add(acc, F.mul(B[start:stop, j, t][:, None], D[:, t][None, :]))
            ok &= acc == 0
        out[start:stop] = ok.sum(axis=1)
    return out


def span_weight_sums(F, weights, B, coefs):
    N, r, k = B.shape
    q = F.q
    pw = q ** np.arange(k - 1, -1, -1, dtype=np.int64)
    out = np.zeros(N, dtype=np.int64)
    for c in coefs:
        v = np.zeros((N, k), dtype=np.int64)
        for j in range(r):
            if c[j]:
                v = F.add(v, F.mul(c[j], B[:, j, :]))
        out += weights[v @ pw]
    return out
