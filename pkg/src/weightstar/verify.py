"""Named verification suites: every identity and theorem checked against enumeration.

A suite runs over a grid of family instances (plus, for the general identities, a
seeded corpus of random codes) and returns a ``VerificationReport``.  Each check
ends in one of three verdicts; a failed check always carries a witness.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import comb

import numpy as np

from . import _config
from .code import (
    LinearCode,
    codewords_of_weight,
    codim_one_subcodes,
    dual,
    from_rows_any_rank,
    generalized_hamming_weight,
    hyperplane_counts,
    hyperplanes,
    is_projective,
    minimum_distance,
    puncture,
    shorten,
    subcode_counts,
    support_design_check,
    weight_distribution,
)
from .construct import (
    complement_code,
    complement_points,
    double_star_check,
    extend_if_possible,
    is_blocking_set,
    point_set,
    star,
)
from .equivalence import UNKNOWN, YES, find_transform
from .errors import (
    BoundaryCase,
    BoundViolated,
    DimensionDropped,
    DivisibilityViolated,
    EnumerationGuard,
    EquivalenceUnknown,
    HypothesisViolated,
    NonIntegralResult,
    ParseError,
    UnknownSuite,
    WeightStarError,
)
from .families import FamilyId, simplex
from .geometry import gaussian_binomial, normalize, pg_points, subspaces
from .gfield import field_new, prime_power
from .identities import (
    bounds_check,
    codim1_distribution,
    coset_weight_spectrum,
    divisibility_check,
    extendability_criterion,
    macwilliams,
    macwilliams_coefficient_check,
    pless_check,
    profile_from_distribution,
    star_closed_form,
    star_prediction,
    star_quotient_form,
)
from .kernels import all_weights, prepare, span_weight_sums
from .linalg import kernel_array, rank_array, rref_array, solve_array

PASS, FAIL, SKIP = "pass", "fail", "skipped-hypothesis"

CORPUS_SEED = 20240607
CORPUS_SIZE = 50
CODIM2_LIMIT = 10**4  # codimension-2 scans only when [k 2]_q is at most this
DUAL_ENUM_LIMIT = 1 << 20  # enumerate the dual directly up to this many words
GHW_LIMIT = 1 << 12  # q^k bound for the generalized Hamming weight cross-check
EQUIV_BUDGET = 10**7

DEFAULT_GRID = (
    *(FamilyId("punctured_simplex", (2, k)) for k in range(3, 9)),
    FamilyId("simplex", (2, 3)),
    FamilyId("simplex", (3, 3)),
    FamilyId("complement_of_subspace", (2, 3, 0)),
    FamilyId("complement_of_subspace", (2, 4, 0)),
    FamilyId("complement_of_subspace", (2, 4, 1)),
    FamilyId("complement_of_subspace", (3, 3, 0)),
    FamilyId("complement_of_subspace", (3, 4, 0)),
    FamilyId("complement_of_subspace", (3, 4, 1)),
    FamilyId("complement_of_subspace", (4, 3, 0)),
    FamilyId("two_disjoint_subspaces", (2, 2)),
    FamilyId("two_disjoint_subspaces", (2, 3)),
    FamilyId("two_disjoint_subspaces", (3, 2)),
    FamilyId("two_disjoint_subspaces", (4, 2)),
    FamilyId("hyperoval", (2,)),
    FamilyId("hyperoval", (4,)),
    FamilyId("hyperoval", (8,)),
    FamilyId("hyperoval", (16,)),
    FamilyId("denniston", (4, 2)),
    FamilyId("denniston", (8, 2)),
    FamilyId("denniston", (8, 4)),
    FamilyId("denniston", (16, 4)),
    FamilyId("ternary_golay"),
    FamilyId("trace_f729"),
)


# ---------------------------------------------------------------------------
# report types


@dataclass
class Check:
    id: str
    ref: str
    verdict: str
    witness: dict | None = None
    ms: float | None = None

    def to_json(self, timing=False):
        out = {"id": self.id, "ref": self.ref, "verdict": self.verdict, "witness": self.witness}
        if timing:
            out["ms"] = round(self.ms or 0.0, 3)
        return out


@dataclass
class VerificationReport:
    suite: str
    checks: list = field(default_factory=list)

    @property
    def ok(self):
        return all(c.verdict != FAIL for c in self.checks)

    def counts(self):
        out = {PASS: 0, FAIL: 0, SKIP: 0}
        for c in self.checks:
            out[c.verdict] += 1
        return out

    def failures(self):
        return [c for c in self.checks if c.verdict == FAIL]

    def to_json(self, timing=False):
        return {
            "suite": self.suite,
            "ok": self.ok,
            "summary": self.counts(),
            "checks": [c.to_json(timing) for c in self.checks],
        }

    def dumps(self, timing=False):
        return json.dumps(self.to_json(timing), indent=1, default=_jsonable)


def _jsonable(x):
    if isinstance(x, np.integer):
        return int(x)
    if isinstance(x, np.ndarray):
        return x.tolist()
    if isinstance(x, np.bool_):
        return bool(x)
    return str(x)


class Skip(Exception):
    """Raised inside a check whose theorem does not apply to the instance."""

    def __init__(self, witness):
        self.witness = witness
        super().__init__(str(witness))


class _Runner:
    def __init__(self, suite):
        self.report = VerificationReport(suite)
        self._ids = set()

    def check(self, cid, ref, fn):
        """Run fn() -> (ok, witness).  Exceptions become verdicts."""
        if cid in self._ids:
            raise AssertionError(f"duplicate check id {cid}")
        self._ids.add(cid)
        t0 = time.perf_counter()
        try:
            ok, wit = fn()
            verdict = PASS if ok else FAIL
            if not ok and not wit:
                wit = {"reason": "check returned false"}
            if ok:
                wit = None
        except Skip as e:
            verdict, wit = SKIP, e.witness
        except HypothesisViolated as e:
            verdict, wit = SKIP, {"hypothesis": e.hypothesis, "report": e.details}
        except DimensionDropped as e:
            verdict, wit = SKIP, {"hypothesis": "full span", "error": str(e)}
        except (AssertionError, WeightStarError) as e:
            verdict, wit = FAIL, {"error": type(e).__name__, "message": str(e)}
        ms = (time.perf_counter() - t0) * 1000
        self.report.checks.append(Check(cid, ref, verdict, wit, ms))


# ---------------------------------------------------------------------------
# instances


@dataclass
class Instance:
    label: str
    code: LinearCode

    def __str__(self):
        return self.label


@lru_cache(maxsize=None)
def _build(fid):
    return fid.build()


def grid_instances(grid=None, max_messages=1 << 16):
    """Family instances with q^k within ``max_messages`` (default grid when None)."""
    out = []
    for fid in DEFAULT_GRID if grid is None else grid:
        C = _build(fid)
        if C.size <= max_messages:
            out.append(Instance(str(fid), C))
    return out


@lru_cache(maxsize=None)
def _corpus(count, seed):
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < count:
        q = int(rng.choice([2, 3, 4]))
        k = int(rng.integers(1, 7))
        n = int(rng.integers(k, 13))
        F = field_new(*prime_power(q))
        G = rng.integers(0, q, size=(k, n))
        if rank_array(F, G) < k:
            continue
        out.append(Instance(f"random{len(out)}[q={q},n={n},k={k}]", LinearCode(F, G)))
    return tuple(out)


def random_corpus(count=CORPUS_SIZE, seed=CORPUS_SEED):
    """Seeded random full-rank codes with n <= 12, k <= 6, q in {2, 3, 4}."""
    return list(_corpus(count, seed))


def load_grid(path):
    """Read a grid file: a JSON list whose entries are {"name", "params"},
    [name, p1, ...] or "name(p1,...)"."""
    try:
        with open(path) as fh:
            raw = json.load(fh)
    except (OSError, ValueError) as e:
        raise ParseError(f"cannot read grid file {path}: {e}") from e
    if not isinstance(raw, list):
        raise ParseError("grid file must hold a JSON list")
    out = []
    for item in raw:
        if isinstance(item, dict):
            out.append(FamilyId(item["name"], tuple(item.get("params", ()))))
        elif isinstance(item, list) and item:
            out.append(FamilyId(item[0], tuple(item[1:])))
        elif isinstance(item, str):
            name, _, rest = item.partition("(")
            params = tuple(int(x) for x in rest.rstrip(")").split(",") if x.strip())
            out.append(FamilyId(name.strip(), params))
        else:
            raise ParseError(f"bad grid entry {item!r}")
    return out


@dataclass
class _TwoWeight:
    inst: Instance
    profile: object


def _two_weight(inst):
    C = inst.code
    dist = weight_distribution(C)
    if len(dist.nonzero_weights) != 2 or not is_projective(C):
        return None
    return _TwoWeight(inst, profile_from_distribution(dist, True))


class Context:
    def __init__(self, grid=None, corpus=True, derived=True):
        self.grid = grid_instances(grid)
        self.corpus = random_corpus() if corpus else []
        self.derived = derived
        self._tw = None

    def general(self):
        return self.grid + self.corpus

    def two_weight(self, with_stars=None):
        """Projective two-weight instances; optionally also their projectivized stars."""
        if self._tw is None:
            base = [t for t in map(_two_weight, self.grid) if t]
            stars = []
            for t in base:
                for w in (t.profile.w1, t.profile.w2):
                    P = star(t.inst.code, w).proj
                    s = _two_weight(Instance(f"{t.inst.label}*{w}", P))
                    if s:
                        stars.append(s)
            self._tw = (base, stars)
        base, stars = self._tw
        with_stars = self.derived if with_stars is None else with_stars
        return base + stars if with_stars else list(base)


# ---------------------------------------------------------------------------
# helpers


def _same_space(F, A, B):
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    ra, rb = rank_array(F, A), rank_array(F, B)
    if ra != rb:
        return False
    if ra == 0:
        return True
    return rank_array(F, np.vstack([A, B])) == ra


def _dist_list(C):
    return [int(x) for x in weight_distribution(C).counts]


def _nonzero(d):
    return {int(i): int(a) for i, a in enumerate(d) if i and a}


def _weights_of(C):
    return weight_distribution(C).nonzero_weights


def _equivalent(Ca, Cb):
    verdict, _ = find_transform(Ca, Cb, EQUIV_BUDGET)
    if verdict == UNKNOWN:
        raise EquivalenceUnknown(f"equivalence search exceeded {EQUIV_BUDGET} nodes")
    return verdict == YES


def _skip_if(cond, why):
    if cond:
        raise Skip({"hypothesis": why})


# ---------------------------------------------------------------------------
# suites


def _suite_punc_shor(ctx, run):
    ref = "puncturing and shortening: duality and dimensions"
    for inst in ctx.general():
        C = inst.code
        F, n, k = C.field, C.n, C.k
        if k == n:
            run.check(f"{inst}/full-space", ref, lambda: _skip_if(True, "k < n"))
            continue
        d = minimum_distance(C)
        D = dual(C)
        sets = []
        for t in range(1, min(d - 1, 3) + 1):
            for T in (tuple(range(t)), tuple(range(n - t, n))):
                if T not in sets:
                    sets.append(T)

        def small_t(T, C=C, D=D):
            t = len(T)
            CT, DsT = puncture(C, T), shorten(D, T)
            wit = {}
            if not _same_space(F, DsT.G, dual(CT).G):
                wit["dual_shortened_vs_punctured_dual"] = "row spaces differ"
            if not _same_space(F, puncture(D, T).G, dual(shorten(C, T)).G):
                wit["dual_punctured_vs_shortened_dual"] = "row spaces differ"
            if CT.k != k:
                wit["punctured_dim"] = [CT.k, k]
            if DsT.k != n - k - t:
                wit["shortened_dual_dim"] = [DsT.k, n - k - t]
            return not wit, wit

        for T in sets:
            run.check(f"{inst}/T={list(T)}", ref, lambda T=T: small_t(T))

        if d < n:

            def at_d(C=C, D=D, d=d):
                _, cw = codewords_of_weight(C, d)
                T = tuple(int(i) for i in np.flatnonzero(cw[0]))
                CT, DsT = puncture(C, T), shorten(D, T)
                wit = {}
                if CT.k != k - 1:
                    wit["punctured_dim"] = [CT.k, k - 1]
                if DsT.k != n - k - d + 1:
                    wit["shortened_dual_dim"] = [DsT.k, n - k - d + 1]
                if wit:
                    wit["T"] = list(T)
                return not wit, wit

            run.check(f"{inst}/T=supp(min word)", ref, at_d)


def _dual_distribution(C):
    """Enumerated dual distribution when affordable, else None."""
    if C.q ** (C.n - C.k) > DUAL_ENUM_LIMIT:
        return None
    return _dist_list(dual(C))


def _suite_macwilliams(ctx, run, dist=None):
    ref = "MacWilliams transform"
    if dist is not None:
        A, n, k, q = dist

        def given():
            wit = {"A": A, "n": n, "k": k, "q": q}
            if A[0] != 1:
                return False, {**wit, "error": "A_0 != 1"}
            try:
                B = macwilliams(A, n, k, q)
                back = macwilliams(B, n, n - k, q)
            except NonIntegralResult as e:
                return False, {**wit, "error": str(e)}
            if back != list(A):
                return False, {**wit, "round_trip": back}
            return True, None

        run.check("given-distribution", ref, given)
        return
    for inst in ctx.general():
        C = inst.code

        def one(C=C):
            n, k, q = C.n, C.k, C.q
            A = _dist_list(C)
            B = macwilliams(A, n, k, q)
            wit = {}
            if macwilliams(B, n, n - k, q) != A:
                wit["round_trip"] = "differs"
            Bd = _dual_distribution(C)
            if Bd is not None and Bd != B:
                wit["transform"], wit["enumerated_dual"] = B, Bd
            res = macwilliams_coefficient_check(A, B, n, k, q)
            bad = [r for r, x in enumerate(res) if x != 0]
            if bad:
                wit["coefficient_form_failing_r"] = bad
            return not wit, wit

        run.check(f"{inst}", ref, one)


def _suite_pless(ctx, run):
    ref = "first four power moments"
    for inst in ctx.general():
        C = inst.code

        def one(C=C):
            A = _dist_list(C)
            B = _dual_distribution(C)
            src = "enumerated"
            if B is None:
                B, src = macwilliams(A, C.n, C.k, C.q), "transform"
            rep = pless_check(A, B, C.n, C.k, C.q)
            if rep.holds:
                return True, None
            return False, {
                "dual_from": src,
                "failing": [{"order": m.order, "form": m.form, "lhs": m.lhs, "rhs": str(m.rhs)} for m in rep.failing()],
            }

        run.check(f"{inst}", ref, one)


def _suite_dim_star(ctx, run):
    ref = "dimension of the star code equals the rank of the weight-w words"
    for inst in ctx.general():
        C = inst.code
        for w in _weights_of(C):

            def one(C=C, w=w):
                st = star(C, w)
                _, cw = codewords_of_weight(C, w)
                r = rank_array(C.field, cw)
                counts = hyperplane_counts(C, w)
                full = bool(counts.max() < st.A_w) if len(counts) else True
                wit = {}
                if not (st.span_dim == r == st.star.k == st.proj.k):
                    wit["dims"] = {"span": st.span_dim, "rank": r, "star": st.star.k, "proj": st.proj.k}
                if (r == C.k) != full:
                    wit["full_span_vs_hyperplane_test"] = [r == C.k, full]
                if st.star.n != st.A_w or st.proj.n * (C.q - 1) != st.A_w:
                    wit["lengths"] = [st.star.n, st.proj.n, st.A_w]
                return not wit, wit

            run.check(f"{inst}/w={w}", ref, one)


def _subcode_tables(C):
    """A_w of every codimension-1 subcode, by enumerating each subcode's messages."""
    rows = [h.weight_distribution() for h in codim_one_subcodes(C)]
    return np.array(rows, dtype=np.int64).reshape(-1, C.n + 1)


def _suite_wt_eq_aw(ctx, run):
    ref = "weight of a star subcode equals A_w minus A_w of the matching subcode"
    for inst in ctx.general():
        C = inst.code
        F, k, q = C.field, C.k, C.q
        table = None
        for w in _weights_of(C):

            def one(C=C, w=w):
                nonlocal table
                # the identity is per functional, so no span hypothesis is needed
                st = star(C, w)
                if table is None:
                    table = _subcode_tables(C)
                H = hyperplanes(C)
                direct = np.count_nonzero(
                    _mat_dot(F, H, st.messages.T), axis=1
                )  # weight of the star codeword for each functional
                wit = {}
                bad = np.flatnonzero(direct != st.A_w - table[:, w])
                if len(bad):
                    i = int(bad[0])
                    wit["codim1"] = {"functional": H[i].tolist(), "star_weight": int(direct[i]), "A_w(B)": int(table[i, w])}
                if k >= 2 and gaussian_binomial(k, 2, q) <= CODIM2_LIMIT:
                    W = subspaces(F, k, 2)
                    # star word weights indexed by functional, valid even when the words do not span
                    per_functional = all_weights(prepare(F, st.messages.T))
                    sums = span_weight_sums(F, per_functional, W)
                    supp = sums // (q * q - q)
                    cnt = subcode_counts(C, w, W)
                    bad2 = np.flatnonzero(supp != st.A_w - cnt)
                    if len(bad2):
                        i = int(bad2[0])
                        wit["codim2"] = {"functionals": W[i].tolist(), "support": int(supp[i]), "A_w(B)": int(cnt[i])}
                return not wit, wit

            run.check(f"{inst}/w={w}", ref, one)


def _mat_dot(F, A, B):
    """A @ B over the field without reducing to a code (A: a x k, B: k x b)."""
    if F.m == 1:
        return (A @ B) % F.p
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for j in range(A.shape[1]):
        out = F.add(out, F.mul(A[:, j : j + 1], B[j : j + 1, :]))
    return out


def _span_code(C, w):
    """The subcode spanned by the weight-w words, as a code on its own basis."""
    _, cw = codewords_of_weight(C, w)
    return from_rows_any_rank(C.field, cw)


def ghw_prediction(C, w, r):
    """(d_r, histogram) of C*(w) from A_w counts over codimension-r subcodes.

    Works on the span S of the weight-w words, where the star has full dimension,
    so the formula needs no rank hypothesis on C itself.
    """
    S = _span_code(C, w)
    Aw = int(weight_distribution(S)[w])
    if r == S.k:
        cnt = np.zeros(1, dtype=np.int64)
    else:
        cnt = subcode_counts(S, w, subspaces(S.field, S.k, r))
    vals = Aw - cnt
    return int(vals.min()), np.bincount(vals, minlength=Aw + 1)


def _suite_ghw_star(ctx, run):
    ref = "generalized Hamming weights of the star from codimension-r subcodes"
    for inst in ctx.general():
        C = inst.code
        if C.size > GHW_LIMIT:
            continue
        for w in _weights_of(C):

            def one(C=C, w=w):
                st = star(C, w)
                wit = {}
                for r in (1, 2):
                    if r > st.span_dim or gaussian_binomial(st.span_dim, r, C.q) > CODIM2_LIMIT:
                        continue
                    g = generalized_hamming_weight(st.star, r)
                    d_pred, hist = ghw_prediction(C, w, r)
                    direct = np.array(g.distribution)
                    L = max(len(direct), len(hist))
                    direct = np.pad(direct, (0, L - len(direct)))
                    hist = np.pad(hist, (0, L - len(hist)))
                    if g.d_r != d_pred or not np.array_equal(direct, hist):
                        wit[f"r={r}"] = {"direct": g.d_r, "predicted": d_pred}
                    gp = generalized_hamming_weight(st.proj, r)
                    if gp.d_r * (C.q - 1) != d_pred:
                        wit[f"proj r={r}"] = {"direct": gp.d_r, "predicted": d_pred / (C.q - 1)}
                return not wit, wit

            run.check(f"{inst}/w={w}", ref, one)


def _suite_codim1_2wt(ctx, run):
    ref = "codimension-1 subcodes of projective two-weight codes"
    for tw in ctx.two_weight(with_stars=False):
        C, p = tw.inst.code, tw.profile

        def one(C=C, p=p):
            F, n = C.field, C.n
            H = hyperplanes(C)
            cols = normalize(F, C.G.T)
            on = (H[:, None, :] == cols[None, :, :]).all(axis=2).sum(axis=1)  # columns proportional to h
            supp = []
            for h in codim_one_subcodes(C):
                supp.append(h.support_size())
            supp = np.array(supp)
            wit = {}
            if not np.array_equal(supp, n - on):
                wit["support_vs_columns"] = "support differs from n - #{g_j ~ h}"
            if not np.all((supp == n) | (supp == n - 1)):
                wit["supports"] = sorted(set(supp.tolist()))
            if int(np.sum(supp == n - 1)) != n:
                wit["count_n_minus_1"] = int(np.sum(supp == n - 1))
            c1, c2 = hyperplane_counts(C, p.w1), hyperplane_counts(C, p.w2)
            for s in (n, n - 1):
                sel = supp == s
                if sel.any():
                    a1, a2 = codim1_distribution(p, int(s))
                    if not (np.all(c1[sel] == a1) and np.all(c2[sel] == a2)):
                        wit[f"distribution_support_{s}"] = {"predicted": [a1, a2]}
            return not wit, wit

        run.check(f"{tw.inst}/subcodes", ref, one)

    ref2 = "codimension-1 subcodes from supercodes of the dual"
    ref3 = "nonzero weights of the projectivized star bounded by u-1"
    for inst in ctx.general():
        C = inst.code
        if C.k == C.n or C.q**C.n > _config.COSET_GUARD:
            continue

        def cosets(C=C):
            F = C.field
            D = dual(C)
            seen = set()
            for h in codim_one_subcodes(C):
                v = solve_array(F, C.G, h.functionals[0])
                if v is None:
                    return False, {"functional": h.functionals[0].tolist(), "error": "no preimage"}
                sup = np.vstack([D.G, v[None, :]])
                if rank_array(F, sup) != C.n - C.k + 1:
                    return False, {"functional": h.functionals[0].tolist(), "error": "supercode rank"}
                if h.basis.shape[0] and np.any(_mat_dot(F, h.basis, sup.T)):
                    return False, {"functional": h.functionals[0].tolist(), "error": "subcode not orthogonal"}
                R, piv = rref_array(F, sup)
                seen.add(R[: len(piv)].tobytes())
            N = (C.q**C.k - 1) // (C.q - 1)
            return len(seen) == N, {"distinct_supercodes": len(seen), "expected": N}

        run.check(f"{inst}/dual-supercodes", ref2, cosets)

        def bound(C=C):
            u, _ = coset_weight_spectrum(C)
            wit = {}
            for w in _weights_of(C):
                st = star(C, w)
                if st.span_dim < C.k:
                    continue
                m = len(_weights_of(st.proj))
                if m > u - 1:
                    wit[f"w={w}"] = {"weights": m, "u": u}
            return not wit, wit

        run.check(f"{inst}/coset-bound", ref3, bound)


def _is_subspace_points(F, P, k):
    """Do the normalized points P form all points of one projective subspace?"""
    if len(P) == 0:
        return True, 0
    r = rank_array(F, P)
    return len(P) == (F.q**r - 1) // (F.q - 1), r


def _suite_bounds_2wt(ctx, run):
    ref = "weight bounds for projective two-weight codes"
    ref_b = "boundary case: complement of a subspace, simplex star"
    for tw in ctx.two_weight(with_stars=True):
        C, p = tw.inst.code, tw.profile

        def one(C=C, p=p):
            rep = bounds_check(p)
            comp = complement_points(C).points if p.n_comp else np.zeros((0, C.k), dtype=np.int64)
            is_sub, _ = _is_subspace_points(C.field, comp, C.k)
            if is_sub != rep.boundary:
                return False, {"boundary_flag": rep.boundary, "complement_is_subspace": is_sub}
            return True, None

        run.check(f"{tw.inst}/bounds", ref, one)
        if p.boundary:
            run.check(f"{tw.inst}/boundary", ref_b, lambda C=C, p=p: boundary_check(C, p))


def boundary_check(C, p):
    """Structure of the stars when w1 = n(q-1)/q."""
    F, k, q = C.field, C.k, C.q
    k2 = bounds_check(p).k2
    wit = {}
    comp = complement_points(C).points
    is_sub, dimU = _is_subspace_points(F, comp, k)
    if not is_sub or dimU != k - k2:
        wit["complement"] = {"is_subspace": is_sub, "dim": dimU, "expected": k - k2}
    s2 = star(C, p.w2)
    S = simplex(q, k2)
    if s2.proj.k != k2 or s2.proj.n != S.n or not _equivalent(s2.proj, S):
        wit["star_w2"] = {"n": s2.proj.n, "k": s2.proj.k, "expected": [S.n, k2]}
    elif len(_weights_of(s2.proj)) != 1 or np.unique(normalize(F, s2.proj.G.T), axis=0).shape[0] != S.n:
        wit["equidistant"] = "simplex star is not one copy of every point"
    # star at w1: complement of U-perp in the message space
    s1 = star(C, p.w1)
    Uperp = kernel_array(F, comp) if len(comp) else np.eye(k, dtype=np.int64)
    Pu = pg_points(F, k)
    inside = ~np.any(_mat_dot(F, Pu, comp.T), axis=1) if len(comp) else np.ones(len(Pu), bool)
    expect = Pu[~inside]
    got = np.unique(s1.proj_points, axis=0)
    if rank_array(F, Uperp) != k2 or not np.array_equal(np.unique(expect, axis=0), got):
        wit["star_w1"] = {"points": len(got), "expected": len(expect)}
    if wit:
        wit["k2"] = k2
    return not wit, wit


def _star_table(C, w):
    P = star(C, w).proj
    return P.n, P.k, _nonzero(weight_distribution(P).counts)


def _suite_dual_2wt(ctx, run):
    ref = "stars of a projective two-weight code are two-weight with predicted parameters"
    for tw in ctx.two_weight(with_stars=True):
        C, p = tw.inst.code, tw.profile
        if p.boundary:
            run.check(f"{tw.inst}/boundary", "boundary case: complement of a subspace, simplex star",
                      lambda C=C, p=p: boundary_check(C, p))
            continue

        def one(C=C, p=p):
            pr = star_prediction(p)
            wit = {}
            for w, L, pw in ((p.w1, pr.length1, pr.weights1), (p.w2, pr.length2, pr.weights2)):
                n_, k_, got = _star_table(C, w)
                want = {int(a): int(b) for a, b in pw.items()}
                if (n_, k_, got) != (L, pr.k, want):
                    wit[f"w={w}"] = {"observed": [n_, k_, got], "predicted": [L, pr.k, want]}
                full = star(C, w).star
                got_full = _nonzero(weight_distribution(full).counts)
                want_full = {a * (C.q - 1): b for a, b in want.items()}
                if got_full != want_full:
                    wit[f"unprojectivized w={w}"] = {"observed": got_full, "predicted": want_full}
            return not wit, wit

        run.check(f"{tw.inst}", ref, one)


def _suite_wij(ctx, run):
    ref = "star weights: closed form against frequency quotients"
    for tw in ctx.two_weight(with_stars=True):
        C, p = tw.inst.code, tw.profile

        def one(C=C, p=p):
            _skip_if(p.boundary, "w1 != n(q-1)/q")
            cf, qf = star_closed_form(p), star_quotient_form(p)
            wit = {}
            if tuple(cf) != tuple(qf):
                wit["forms"] = {"closed": [str(x) for x in cf], "quotient": [str(x) for x in qf]}
            g = (p.w2 - p.w1)
            if (cf[1] - cf[0]) * g != C.q ** (C.k - 2) or (cf[3] - cf[2]) * g != C.q ** (C.k - 2):
                wit["gap"] = "weight gap relation fails"
            obs1 = _weights_of(star(C, p.w1).proj)
            obs2 = _weights_of(star(C, p.w2).proj)
            if [cf[0], cf[1]] != obs1 or [cf[2], cf[3]] != obs2:
                wit["observed"] = {"w1": obs1, "w2": obs2}
            return not wit, wit

        run.check(f"{tw.inst}", ref, one)


def _suite_divisibility(ctx, run):
    ref = "divisibility conditions for projective two-weight codes"
    for tw in ctx.two_weight(with_stars=True):
        p = tw.profile

        def one(p=p):
            try:
                divisibility_check(p)
            except DivisibilityViolated as e:
                return False, {"violated": str(e), "profile": p.to_json()}
            return True, None

        run.check(f"{tw.inst}", ref, one)


def _suite_double_star(ctx, run):
    ref = "star of the star recovers the code"
    ref_c = "other star of the star gives the complement"
    tws = ctx.two_weight(with_stars=True)
    done = set()
    for tw in tws:
        C, p = tw.inst.code, tw.profile
        done.add(tw.inst.label)
        for w in (p.w1, p.w2):

            def one(C=C, w=w):
                r = double_star_check(C, w, EQUIV_BUDGET)
                return r.holds, {"lambda": r.lambda_, **r.witness}

            run.check(f"{tw.inst}/w={w}", ref, one)
        if p.boundary or p.n_comp == 0:
            continue

        def comp(C=C, p=p):
            pr = star_prediction(p)
            Comp = complement_code(C)
            _skip_if(Comp.k < C.k, "complement spans the space")
            wit = {}
            for w, lam in ((p.w1, pr.closed_form[1]), (p.w2, pr.closed_form[2])):
                back = star(star(C, w).proj, int(lam)).proj
                if (back.n, back.k) != (Comp.n, Comp.k) or not _equivalent(back, Comp):
                    wit[f"w={w}"] = {"double_star": [back.n, back.k], "complement": [Comp.n, Comp.k]}
            return not wit, wit

        run.check(f"{tw.inst}/complement", ref_c, comp)
    # the hypothesis-violation path on codes that are not two-weight
    for inst in ctx.grid:
        if inst.label in done:
            continue
        C = inst.code
        if len(_weights_of(C)) == 1:
            continue
        for w in _weights_of(C):

            def one(C=C, w=w):
                r = double_star_check(C, w, EQUIV_BUDGET)
                return r.holds, {"lambda": r.lambda_, **r.witness}

            run.check(f"{inst}/w={w}", ref, one)


def _suite_blocking(ctx, run):
    ref = "weight-w words block every codimension-1 subcode iff the star has no full-weight word"
    for inst in ctx.general():
        C = inst.code
        for w in _weights_of(C):

            def one(C=C, w=w):
                res = is_blocking_set(C, w)
                # third route: enumerate each subcode directly
                brute = all(h.weight_distribution()[w] > 0 for h in codim_one_subcodes(C))
                return res == brute, {"paths": res, "subcode_enumeration": brute}

            run.check(f"{inst}/w={w}", ref, one)


def _suite_extendability(ctx, run):
    ref = "extendability criterion against constructive extension"
    ref_g = "extension through a hyperplane free of minimum-weight words"
    seen = set()
    for tw in ctx.two_weight(with_stars=True):
        C, p = tw.inst.code, tw.profile
        seen.add(tw.inst.label)

        def one(C=C, p=p):
            pred = extendability_criterion(p)
            res = extend_if_possible(C)
            got = res is not None
            wit = {"criterion": pred, "constructed": got}
            if got:
                wit["extended_d"] = minimum_distance(res[0])
            return pred == got, wit

        run.check(f"{tw.inst}", ref, one)
    for inst in ctx.general():
        if inst.label in seen:
            continue
        C = inst.code

        def gen(C=C):
            res = extend_if_possible(C)
            if res is None:
                return True, None
            d = minimum_distance(C)
            ext, _ = res
            ok = ext.n == C.n + 1 and ext.k == C.k and minimum_distance(ext) == d + 1
            return ok, {"extension": [ext.n, ext.k, minimum_distance(ext)], "d": d}

        run.check(f"{inst}", ref_g, gen)


def _suite_design_support(ctx, run):
    ref = "supports of weight-w words as a t-design"
    tw_labels = {t.inst.label for t in ctx.two_weight(with_stars=False)}
    for inst in ctx.general():
        C = inst.code
        for w in _weights_of(C):

            def one(C=C, w=w, two=inst.label in tw_labels):
                n, q = C.n, C.q
                wit = {}
                _, cw = codewords_of_weight(C, w)
                per_coord = np.count_nonzero(cw, axis=0)  # words covering each coordinate
                for t in (1, 2):
                    if t > w or comb(n, t) > 10**4:
                        continue
                    dc = support_design_check(C, w, t)
                    if dc.has_uniform_multiplicity and dc.b * (q - 1) != len(cw):
                        wit[f"t={t} blocks"] = [dc.b, len(cw)]
                    if dc.is_design and dc.lambda_ * comb(n, t) != dc.b * comb(w, t):
                        wit[f"t={t} counting"] = {"lambda": dc.lambda_, "b": dc.b}
                    if t == 1:
                        direct = bool(np.all(per_coord == per_coord[0]))
                        if dc.is_design != (direct and dc.has_uniform_multiplicity):
                            wit["t=1 direct"] = per_coord.tolist()
                        if two and not dc.is_design:
                            wit["two-weight 1-design"] = per_coord.tolist()
                return not wit, wit

            run.check(f"{inst}/w={w}", ref, one)


SUITES = {
    "punc-shor": _suite_punc_shor,
    "macwilliams": _suite_macwilliams,
    "pless": _suite_pless,
    "dim-star": _suite_dim_star,
    "wt-eq-Aw": _suite_wt_eq_aw,
    "ghw-star": _suite_ghw_star,
    "codim1-2wt": _suite_codim1_2wt,
    "bounds-2wt": _suite_bounds_2wt,
    "dual-2wt": _suite_dual_2wt,
    "wij": _suite_wij,
    "divisibility": _suite_divisibility,
    "double-star": _suite_double_star,
    "blocking": _suite_blocking,
    "extendability": _suite_extendability,
    "design-support": _suite_design_support,
}


def run_suite(name, grid=None, corpus=True, dist=None, context=None):
    """Run one suite; ``dist`` = (A, n, k, q) checks a supplied distribution (macwilliams)."""
    if name not in SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    run = _Runner(name)
    if dist is not None:
        if name != "macwilliams":
            raise UnknownSuite("a distribution file is only accepted by the macwilliams suite")
        _suite_macwilliams(None, run, dist=dist)
        return run.report
    ctx = context or Context(grid, corpus=corpus)
    SUITES[name](ctx, run)
    return run.report


__all__ = [
    "Check",
    "Context",
    "DEFAULT_GRID",
    "SUITES",
    "VerificationReport",
    "ghw_prediction",
    "grid_instances",
    "load_grid",
    "random_corpus",
    "run_suite",
]
