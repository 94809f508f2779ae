"""Brute-force reference computations.

Nothing here imports the package: field arithmetic is schoolbook polynomial
multiplication, codes are enumerated with itertools.product, and ranks come
from counting the distinct vectors of a span.  Slow, but only used on tiny inputs.
"""

from itertools import product


class RefField:
    """GF(p^m) on base-p digit codes, low-order digit first."""

    def __init__(self, p, m=1, modulus=(0, 1)):
        self.p, self.m, self.q = p, m, p**m
        self.modulus = tuple(modulus)

    def digits(self, a):
        out = []
        for _ in range(self.m):
            out.append(a % self.p)
            a //= self.p
        return out

    def code(self, d):
        return sum(c * self.p**i for i, c in enumerate(d))

    def add(self, a, b):
        return self.code([(x + y) % self.p for x, y in zip(self.digits(a), self.digits(b))])

    def neg(self, a):
        return self.code([(-x) % self.p for x in self.digits(a)])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        p, m = self.p, self.m
        x, y = self.digits(a), self.digits(b)
        prod = [0] * (2 * m - 1)
        for i, u in enumerate(x):
            for j, v in enumerate(y):
                prod[i + j] = (prod[i + j] + u * v) % p
        # reduce by the monic modulus from the top degree down
        for deg in range(len(prod) - 1, m - 1, -1):
            c = prod[deg]
            if c:
                for t in range(m + 1):
                    prod[deg - m + t] = (prod[deg - m + t] - c * self.modulus[t]) % p
        return self.code(prod[:m])

    def pow(self, a, e):
        r = 1
        for _ in range(e):
            r = self.mul(r, a)
        return r

    def order(self, a):
        if a == 0:
            return None
        x, e = a, 1
        while x != 1:
            x, e = self.mul(x, a), e + 1
        return e

    def trace(self, a):
        acc, x = 0, a
        for _ in range(self.m):
            acc = self.add(acc, x)
            x = self.pow(x, self.p)
        return acc

    def dot(self, u, v):
        acc = 0
        for a, b in zip(u, v):
            acc = self.add(acc, self.mul(a, b))
        return acc


def ref_field(F):
    return RefField(F.p, F.m, F.modulus)


def messages(q, k):
    return list(product(range(q), repeat=k))


def encode(R, G, u):
    n = len(G[0])
    word = [0] * n
    for coef, row in zip(u, G):
        if coef:
            word = [R.add(w, R.mul(coef, g)) for w, g in zip(word, row)]
    return tuple(word)


def codewords(R, G):
    """All codewords in lexicographic message order."""
    return [encode(R, G, u) for u in messages(R.q, len(G))]


def weight(v):
    return sum(1 for x in v if x)


def distribution(R, G):
    n = len(G[0])
    A = [0] * (n + 1)
    for c in codewords(R, G):
        A[weight(c)] += 1
    return A


def span(R, rows, n=None):
    """Set of all linear combinations, grown one generator at a time."""
    rows = [tuple(r) for r in rows]
    n = len(rows[0]) if rows else (n or 0)
    out = {tuple([0] * n)}
    for v in rows:
        if v in out:
            continue
        out = {tuple(R.add(x, R.mul(a, y)) for x, y in zip(s, v)) for s in out for a in range(R.q)}
    return out


def rank(R, rows):
    """log_q of the span size."""
    size, r = len(span(R, rows)), 0
    while R.q**r < size:
        r += 1
    return r


def dual_words(R, G):
    n = len(G[0])
    return [v for v in product(range(R.q), repeat=n) if all(R.dot(g, v) == 0 for g in G)]


def normalized(v):
    for x in v:
        if x:
            return x == 1
    return False


def projective_points(R, k):
    return [v for v in product(range(R.q), repeat=k) if normalized(v)]
