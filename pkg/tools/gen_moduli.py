"""Regenerate src/weightstar/_moduli.py.

For every GF(p^m) with m >= 2 and p^m <= 3^6, plus GF(2^m) for m <= 16, pick the
monic polynomial x^m + r(x) with the smallest code r (base-p digits of r's
coefficients, low-order first) that is primitive, i.e. irreducible with x of
multiplicative order p^m - 1.  Choosing primitive moduli makes alpha = x.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from weightstar.gfield import _polypowmod, _prime_factors, is_irreducible, is_prime  # noqa: E402


def _primitive(f, p, m):
    q = p**m
    if not is_irreducible(f, p):
        return False
    for r in _prime_factors(q - 1):
        if _polypowmod([0, 1], (q - 1) // r, f, p) == [1]:
            return False
    return True


def smallest_primitive(p, m):
    for r in range(p**m):
        low = [(r // p**i) % p for i in range(m)]
        f = low + [1]
        if f[0] and _primitive(f, p, m):
            return tuple(f)
    raise AssertionError


def targets():
    out = []
    for p in range(2, 730):
        if not is_prime(p):
            continue
        m = 2
        while p**m <= 729:
            out.append((p, m))
            m += 1
    for m in range(10, 17):
        out.append((2, m))
    return sorted(set(out))


def main():
    lines = [
        '"""Default moduli: smallest-code primitive polynomial per field (see tools/gen_moduli.py).',
        "",
        "Keys are (p, m); values are coefficient tuples, low-order first, monic.",
        '"""',
        "",
        "DEFAULT_MODULI = {",
    ]
    for p, m in targets():
        lines.append(f"    ({p}, {m}): {smallest_primitive(p, m)},")
    lines.append("}")
    dest = Path(__file__).resolve().parents[1] / "src" / "weightstar" / "_moduli.py"
    dest.write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
