"""numba kernels.  Same contracts as ``_np``; arrays in, arrays out, no field objects."""

import numpy as np
from numba import config, njit, prange

# the bundled TBB is often too old; prefer OpenMP, then the portable workqueue
config.THREADING_LAYER_PRIORITY = ["omp", "workqueue", "tbb"]

_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_H01 = np.uint64(0x0101010101010101)
_S1 = np.uint64(1)
_S2 = np.uint64(2)
_S4 = np.uint64(4)
_S56 = np.uint64(56)


@njit(inline="always")
def _popcount(x):
    x = x - ((x >> _S1) & _M1)
    x = (x & _M2) + ((x >> _S2) & _M2)
    x = (x + (x >> _S4)) & _M4
    return np.int64((x * _H01) >> _S56)


@njit(inline="always")
def _fadd(a, b, p, m):
    if p == 2:
        return a ^ b
    if m == 1:
        return (a + b) % p
    r = 0
    pw = 1
    for _ in range(m):
        r += ((a // pw + b // pw) % p) * pw
        pw *= p
    return r


@njit(inline="always")
def _fmul(a, b, exp, log, q):
    if a == 0 or b == 0:
        return 0
    return exp[(log[a] + log[b]) % (q - 1)]


@njit(cache=True, nogil=True)
def power_cycle(g, modulus, p, m, q, out):
    """Write g^0, g^1, ... into ``out`` until the powers return to 1; return the cycle length."""
    gd = np.zeros(m, np.int64)
    x = g
    for i in range(m):
        gd[i] = x % p
        x //= p
    cur = np.zeros(m, np.int64)
    cur[0] = 1
    prod = np.zeros(2 * m, np.int64)
    pw = np.ones(m, np.int64)
    for i in range(1, m):
        pw[i] = pw[i - 1] * p
    inv_lead = 1  # modulus is monic
    length = 0
    while True:
        code = 0
        for i in range(m):
            code += cur[i] * pw[i]
        if length > 0 and code == 1:
            return length
        if length >= out.shape[0] or code == 0:
            return -1
        out[length] = code
        length += 1
        for i in range(2 * m):
            prod[i] = 0
        for i in range(m):
            if cur[i]:
                for j in range(m):
                    prod[i + j] += cur[i] * gd[j]
        for d in range(2 * m - 1, m - 1, -1):
            c = (prod[d] % p) * inv_lead % p
            if c:
                for i in range(m + 1):
                    prod[d - m + i] -= c * modulus[i]
        for i in range(m):
            cur[i] = prod[i] % p


@njit(cache=True, nogil=True)
def weights_packed(planes, q, lo, hi, out):
    """Codeword weights for messages lo..hi-1, characteristic 2.

    ``planes[i, a, c, t]`` is word t of bit-plane c of the codeword a*G_i.
    """
    k = planes.shape[0]
    m = planes.shape[2]
    W = planes.shape[3]
    digs = np.zeros(k, np.int64)
    x = lo
    for i in range(k - 1, -1, -1):
        digs[i] = x % q
        x //= q
    prefix = np.zeros((k, m, W), np.uint64)
    for j in range(1, k):
        for c in range(m):
            for t in range(W):
                prefix[j, c, t] = prefix[j - 1, c, t] ^ planes[j - 1, digs[j - 1], c, t]
    idx = lo
    last = k - 1
    while idx < hi:
        a = digs[last]
        while a < q and idx < hi:
            w = 0
            for t in range(W):
                acc = np.uint64(0)
                for c in range(m):
                    acc |= prefix[last, c, t] ^ planes[last, a, c, t]
                w += _popcount(acc)
            out[idx - lo] = w
            idx += 1
            a += 1
        if idx >= hi:
            break
        digs[last] = 0
        j = last - 1
        while j >= 0:
            digs[j] += 1
            if digs[j] < q:
                break
            digs[j] = 0
            j -= 1
        if j < 0:
            break
        for i in range(j + 1, k):
            for c in range(m):
                for t in range(W):
                    prefix[i, c, t] = prefix[i - 1, c, t] ^ planes[i - 1, digs[i - 1], c, t]


@njit(cache=True, nogil=True)
def weights_modp(planes, p, q, lo, hi, out):
    """Codeword weights for messages lo..hi-1, odd characteristic.

    ``planes[i, a, c, j]`` is base-p digit c of coordinate j of a*G_i.
    """
    k = planes.shape[0]
    m = planes.shape[2]
    n = planes.shape[3]
    digs = np.zeros(k, np.int64)
    x = lo
    for i in range(k - 1, -1, -1):
        digs[i] = x % q
        x //= q
    prefix = np.zeros((k, m, n), np.int64)
    for j in range(1, k):
        for c in range(m):
            for t in range(n):
                prefix[j, c, t] = (prefix[j - 1, c, t] + planes[j - 1, digs[j - 1], c, t]) % p
    idx = lo
    last = k - 1
    while idx < hi:
        a = digs[last]
        while a < q and idx < hi:
            w = 0
            for t in range(n):
                for c in range(m):
                    if (prefix[last, c, t] + planes[last, a, c, t]) % p != 0:
                        w += 1
                        break
            out[idx - lo] = w
            idx += 1
            a += 1
        if idx >= hi:
            break
        digs[last] = 0
        j = last - 1
        while j >= 0:
            digs[j] += 1
            if digs[j] < q:
                break
            digs[j] = 0
            j -= 1
        if j < 0:
            break
        for i in range(j + 1, k):
            for c in range(m):
                for t in range(n):
                    prefix[i, c, t] = (prefix[i - 1, c, t] + planes[i - 1, digs[i - 1], c, t]) % p


@njit(cache=True, nogil=True)
def syndrome_table(cols, p, m, q, exp, log):
    """Histogram of (syndrome index, weight) over every x in GF(q)^n.

    ``cols[i, a, :]`` is a * g_i for column g_i of a k x n matrix (codes).
    """
    n = cols.shape[0]
    k = cols.shape[2]
    nsyn = 1
    for _ in range(k):
        nsyn *= q
    table = np.zeros((nsyn, n + 1), np.int64)
    digs = np.zeros(n, np.int64)
    prefix = np.zeros((n + 1, k), np.int64)
    wpre = np.zeros(n + 1, np.int64)
    while True:
        s = prefix[n]
        sidx = 0
        for j in range(k):
            sidx = sidx * q + s[j]
        table[sidx, wpre[n]] += 1
        j = n - 1
        while j >= 0:
            digs[j] += 1
            if digs[j] < q:
                break
            digs[j] = 0
            j -= 1
        if j < 0:
            break
        for i in range(j, n):
            a = digs[i]
            for t in range(k):
                prefix[i + 1, t] = _fadd(prefix[i, t], cols[i, a, t], p, m)
            wpre[i + 1] = wpre[i] + (1 if a else 0)
    return table


@njit(cache=True, nogil=True)
def subspace_zero_counts(D, B, p, m, q, exp, log):
    """For each basis B[s] (r x k), count rows u of D with B[s, j] . u = 0 for all j."""
    N = B.shape[0]
    r = B.shape[1]
    k = B.shape[2]
    A = D.shape[0]
    out = np.zeros(N, np.int64)
    for s in range(N):
        cnt = 0
        for u in range(A):
            ok = True
            for j in range(r):
                acc = 0
                for t in range(k):
                    acc = _fadd(acc, _fmul(B[s, j, t], D[u, t], exp, log, q), p, m)
                if acc != 0:
                    ok = False
                    break
            if ok:
                cnt += 1
        out[s] = cnt
    return out


@njit(cache=True, nogil=True)
def span_weight_sums(weights, B, coefs, p, m, q, exp, log):
    """For each basis B[s] (r x k), sum weights[index(v)] over every v in its span."""
    N = B.shape[0]
    r = B.shape[1]
    k = B.shape[2]
    C = coefs.shape[0]
    out = np.zeros(N, np.int64)
    v = np.zeros(k, np.int64)
    for s in range(N):
        total = 0
        for c in range(C):
            for t in range(k):
                v[t] = 0
            for j in range(r):
                a = coefs[c, j]
                if a:
                    for t in range(k):
                        v[t] = _fadd(v[t], _fmul(a, B[s, j, t], exp, log, q), p, m)
            idx = 0
            for t in range(k):
                idx = idx * q + v[t]
            total += weights[idx]
        out[s] = total
    return out


# Table-driven variants.  ``kind`` selects the arithmetic: 0 = GF(2) (xor/and),
# 1 = prime field (integer dot product reduced once), 2 = q x q add/mul tables.


@njit(inline="always")
def _dot_zero(b, u, kind, p, add_t, mul_t):
    k = b.shape[0]
    if kind == 0:
        acc = 0
        for t in range(k):
            acc ^= b[t] & u[t]
        return acc == 0
    if kind == 1:
        acc = 0
        for t in range(k):
            acc += b[t] * u[t]
        return acc % p == 0
    acc = 0
    for t in range(k):
        acc = add_t[acc, mul_t[b[t], u[t]]]
    return acc == 0


@njit(cache=True, nogil=True, parallel=True)
def subspace_zero_counts_tab(D, B, kind, p, add_t, mul_t):
    N = B.shape[0]
    r = B.shape[1]
    A = D.shape[0]
    out = np.zeros(N, np.int64)
    for s in prange(N):
        cnt = 0
        for u in range(A):
            ok = True
            for j in range(r):
                if not _dot_zero(B[s, j], D[u], kind, p, add_t, mul_t):
                    ok = False
                    break
            if ok:
                cnt += 1
        out[s] = cnt
    return out


@njit(cache=True, nogil=True, parallel=True)
def span_weight_sums_tab(weights, B, coefs, q, kind, p, add_t, mul_t):
    N = B.shape[0]
    r = B.shape[1]
    k = B.shape[2]
    C = coefs.shape[0]
    out = np.zeros(N, np.int64)
    for s in prange(N):
        v = np.zeros(k, np.int64)
        total = 0
        for c in range(C):
            for t in range(k):
                acc = 0
                for j in range(r):
                    a = coefs[c, j]
                    if kind == 0:
                        acc ^= a & B[s, j, t]
                    elif kind == 1:
                        acc += a * B[s, j, t]
                    else:
                        acc = add_t[acc, mul_t[a, B[s, j, t]]]
                v[t] = acc % p if kind == 1 else acc
            idx = 0
            for t in range(k):
                idx = idx * q + v[t]
            total += weights[idx]
        out[s] = total
    return out
