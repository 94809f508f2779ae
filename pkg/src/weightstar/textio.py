"""Generator-matrix text files and weight-distribution JSON.

Text format::

    q=<q> k=<k> n=<n> [modulus=<c0,...,cm>]
    <k lines of n space-separated element codes>
"""

from __future__ import annotations

import json
import re

import numpy as np

from .code import code_from_generator
from .errors import ParseError, WeightStarError
from .gfield import field_new, prime_power

_HEADER = re.compile(r"^\s*q\s*=\s*(\d+)\s+k\s*=\s*(\d+)\s+n\s*=\s*(\d+)(?:\s+modulus\s*=\s*([\d,\s]+))?\s*$")


def format_code(C):
    F = C.field
    head = f"q={F.q} k={C.k} n={C.n}"
    if F.m > 1:
        head += " modulus=" + ",".join(str(c) for c in F.modulus)
    lines = [head] + [" ".join(str(int(x)) for x in row) for row in C.G]
    return "\n".join(lines) + "\n"


def parse_code(text, guard=None):
    lines = [ln for ln in (s.split("#", 1)[0].strip() for s in text.splitlines()) if ln]
    if not lines:
        raise ParseError("empty code file")
    mt = _HEADER.match(lines[0])
    if not mt:
        raise ParseError(f"bad header {lines[0]!r}; expected 'q=<q> k=<k> n=<n> [modulus=...]'")
    q, k, n = (int(x) for x in mt.groups()[:3])
    pm = prime_power(q)
    if pm is None:
        raise ParseError(f"q={q} is not a prime power")
    modulus = None
    if mt.group(4):
        modulus = [int(c) for c in mt.group(4).replace(" ", "").split(",") if c]
    try:
        F = field_new(pm[0], pm[1], modulus)
    except WeightStarError as e:
        raise ParseError(str(e)) from e
    rows = lines[1:]
    if len(rows) != k:
        raise ParseError(f"header says k={k} but {len(rows)} rows follow")
    try:
        G = np.array([[int(x) for x in row.split()] for row in rows], dtype=np.int64)
    except ValueError as e:
        raise ParseError(f"non-integer entry: {e}") from e
    if G.ndim != 2 or G.shape != (k, n):
        raise ParseError(f"expected {k} rows of {n} entries")
    if G.size and (G.min() < 0 or G.max() >= q):
        raise ParseError(f"entries must be element codes in [0, {q})")
    return code_from_generator(F, G, guard)


def read_code(path, guard=None):
    import sys

    if path == "-":
        return parse_code(sys.stdin.read(), guard)
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e}") from e
    return parse_code(text, guard)


def dist_json(dist):
    return json.dumps(dist.to_json(), separators=(",", ":"))


def parse_dist_json(text):
    """(A, n, k, q) from a distribution JSON document."""
    try:
        obj = json.loads(text)
        A = [int(a) for a in obj["A"]]
        n, k, q = int(obj["n"]), int(obj["k"]), int(obj["q"])
    except (ValueError, KeyError, TypeError) as e:
        raise ParseError(f"bad distribution JSON: {e}") from e
    if len(A) != n + 1:
        raise ParseError(f"A has {len(A)} entries, expected n+1 = {n + 1}")
    return A, n, k, q
