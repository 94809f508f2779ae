"""Command-line front end.

    weightstar weights  <source>
    weightstar star     <source> [w] [-w W] [--proj]
    weightstar dual | complement <source>
    weightstar puncture | shorten <source> <coord>... [--coords 0,3]
    weightstar family   <name> <params...>
    weightstar analyze-two-weight (<n> <k> <q> <w1> <w2> | <source>)
    weightstar verify   <suite> [--grid file.json] [--dist file.json] [--no-corpus]

A source is a generator file (``-`` for stdin) or ``family <name> <params...>``.
Exit codes: 0 ok, 1 check failure, 2 usage or parse error, 3 guard exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import _config
from .code import check_guard, dual, is_projective, puncture, shorten, weight_distribution
from .construct import complement_code, extend_if_possible, star
from .errors import (
    BoundaryCase,
    BoundViolated,
    DivisibilityViolated,
    EnumerationGuard,
    NonIntegralResult,
    ParseError,
    WeightStarError,
)
from .families import FAMILIES, FamilyId
from .identities import (
    TwoWeightProfile,
    bounds_check,
    divisibility_check,
    profile_from_distribution,
    star_prediction,
)
from .textio import dist_json, format_code, parse_dist_json, read_code
from .verify import SUITES, load_grid, run_suite

EXIT_OK, EXIT_CHECK, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


class UsageError(WeightStarError):
    pass


def _int(tok, what):
    try:
        return int(tok)
    except ValueError:
        raise UsageError(f"{what} must be an integer, got {tok!r}") from None


def resolve_source(tokens, guard=None):
    """(code, leftover tokens) from a file path, '-' or 'family <name> <params>'."""
    if not tokens:
        raise UsageError("missing code source (a file, '-' or 'family <name> <params>')")
    if tokens[0] == "family":
        if len(tokens) < 2:
            raise UsageError("family needs a name")
        name = tokens[1]
        if name not in FAMILIES:
            raise UsageError(f"unknown family {name!r}; choose from {', '.join(FAMILIES)}")
        arity = FAMILIES[name][1]
        params = [_int(t, "family parameter") for t in tokens[2 : 2 + arity]]
        if len(params) != arity:
            raise UsageError(f"{name} takes {arity} parameters")
        C = FamilyId(name, tuple(params)).build()
        check_guard(C, guard)
        return C, tokens[2 + arity :]
    return read_code(tokens[0], guard), tokens[1:]


def _emit(args, text, payload=None):
    sys.stdout.write(text if text.endswith("\n") else text + "\n")
    if args.json and payload is not None:
        with open(args.json, "w") as fh:
            json.dump(payload, fh, indent=1)
            fh.write("\n")


def _no_extra(rest):
    if rest:
        raise UsageError(f"unexpected arguments: {' '.join(rest)}")


# ---------------------------------------------------------------------------
# commands


def cmd_weights(args):
    C, rest = resolve_source(args.source, args.guard)
    _no_extra(rest)
    dist = weight_distribution(C, args.guard)
    _emit(args, f"{dist_json(dist)}\nW(x,y) = {dist.enumerator()}", dist.to_json())
    return EXIT_OK


def cmd_star(args):
    C, rest = resolve_source(args.source, args.guard)
    w = args.w
    if rest:
        if w is not None or len(rest) > 1:
            raise UsageError("give the weight once, as a positional or with -w")
        w = _int(rest[0], "weight")
    if w is None:
        raise UsageError("star needs a weight")
    check_guard(C, args.guard)
    st = star(C, w)
    summary = st.summary()
    out = st.proj if args.proj else st.star
    _emit(args, format_code(out) + json.dumps(summary), summary)
    return EXIT_OK


def cmd_dual(args):
    C, rest = resolve_source(args.source, args.guard)
    _no_extra(rest)
    _emit(args, format_code(dual(C)))
    return EXIT_OK


def cmd_complement(args):
    C, rest = resolve_source(args.source, args.guard)
    _no_extra(rest)
    _emit(args, format_code(complement_code(C)))
    return EXIT_OK


def _coords(args, rest):
    T = [_int(t, "coordinate") for t in rest]
    if args.coords:
        T += [_int(t, "coordinate") for t in args.coords.split(",") if t.strip()]
    if not T:
        raise UsageError("no coordinates given")
    return T


def cmd_puncture(args):
    C, rest = resolve_source(args.source, args.guard)
    try:
        _emit(args, format_code(puncture(C, _coords(args, rest))))
    except IndexError as e:
        raise UsageError(str(e)) from None
    return EXIT_OK


def cmd_shorten(args):
    C, rest = resolve_source(args.source, args.guard)
    try:
        _emit(args, format_code(shorten(C, _coords(args, rest))))
    except IndexError as e:
        raise UsageError(str(e)) from None
    return EXIT_OK


def cmd_family(args):
    C, rest = resolve_source(["family", *args.spec], args.guard)
    _no_extra(rest)
    _emit(args, format_code(C))
    return EXIT_OK


def _verdict(fn):
    try:
        fn()
    except (BoundViolated, DivisibilityViolated, NonIntegralResult, BoundaryCase) as e:
        return {"verdict": "fail", "error": type(e).__name__, "message": str(e)}
    return {"verdict": "pass"}


def analyze_two_weight(profile, code=None):
    """JSON-ready report: profile, check verdicts, predictions and observations."""
    rep = {"profile": profile.to_json(), "checks": {}}
    checks = rep["checks"]
    if not profile.projective:
        # every two-weight theorem here assumes pairwise independent columns
        checks["projective"] = {"verdict": "skipped-hypothesis"}
        return rep
    checks["bounds"] = _verdict(lambda: bounds_check(profile))
    checks["divisibility"] = _verdict(lambda: divisibility_check(profile))
    if profile.boundary:
        try:
            rep["boundary"] = {"k2": bounds_check(profile).k2}
        except BoundViolated:
            pass
    else:
        pr = None

        def predict():
            nonlocal pr
            pr = star_prediction(profile)

        checks["prediction"] = _verdict(predict)
        if pr is not None:
            rep["prediction"] = pr.to_json()
    rep["extendable_predicted"] = profile.extendable_predicted
    if code is not None:
        obs = {}
        for w in (profile.w1, profile.w2):
            st = star(code, w)
            obs[str(w)] = {
                "length": st.proj.n,
                "k": st.proj.k,
                "weights": {str(i): a for i, a in weight_distribution(st.proj).as_dict().items() if i},
            }
        rep["observed"] = obs
        ext = None
        try:
            ext = extend_if_possible(code) is not None
        except WeightStarError:
            pass
        rep["extendable_observed"] = ext
        if "prediction" in rep:
            match = all(
                obs[str(w)]["weights"] == rep["prediction"][key]["weights"]
                and obs[str(w)]["length"] == rep["prediction"][key]["length"]
                for w, key in ((profile.w1, "w1"), (profile.w2, "w2"))
            )
            checks["observed_vs_predicted"] = {"verdict": "pass" if match else "fail"}
        if ext is not None:
            ok = ext == profile.extendable_predicted
            checks["extendability"] = {"verdict": "pass" if ok else "fail"}
    return rep


def cmd_analyze(args):
    toks = args.source
    code = None
    if len(toks) == 5 and all(t.lstrip("-").isdigit() for t in toks):
        n, k, q, w1, w2 = (int(t) for t in toks)
        try:
            profile = TwoWeightProfile(n, k, q, w1, w2)
        except (NonIntegralResult, ValueError, ZeroDivisionError) as e:
            rep = {"feasible": False, "error": type(e).__name__, "message": str(e)}
            _emit(args, json.dumps(rep, indent=1), rep)
            return EXIT_CHECK
    else:
        code, rest = resolve_source(toks, args.guard)
        _no_extra(rest)
        dist = weight_distribution(code, args.guard)
        if len(dist.nonzero_weights) != 2:
            rep = {"two_weight": False, "weights": dist.nonzero_weights}
            _emit(args, json.dumps(rep, indent=1), rep)
            return EXIT_CHECK
        profile = profile_from_distribution(dist, is_projective(code))
    rep = analyze_two_weight(profile, code)
    _emit(args, json.dumps(rep, indent=1), rep)
    failed = any(c["verdict"] == "fail" for c in rep["checks"].values())
    return EXIT_CHECK if failed else EXIT_OK


def cmd_verify(args):
    grid = load_grid(args.grid) if args.grid else None
    dist = None
    if args.dist:
        try:
            with open(args.dist) as fh:
                dist = parse_dist_json(fh.read())
        except OSError as e:
            raise ParseError(f"cannot read {args.dist}: {e}") from e
    rep = run_suite(args.suite, grid=grid, corpus=not args.no_corpus, dist=dist)
    text = rep.dumps(timing=args.timing)
    _emit(args, text, json.loads(text))
    return EXIT_OK if rep.ok else EXIT_CHECK


# ---------------------------------------------------------------------------


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--guard", type=int, default=None, help="max messages per exhaustive scan")
    common.add_argument("--threads", type=int, default=None, help="worker threads for scans")
    common.add_argument("--json", metavar="PATH", default=None, help="also write JSON output to PATH")
    common.add_argument("--timing", action="store_true", help="report timings (stderr; per check for verify)")

    p = argparse.ArgumentParser(prog="weightstar", description="Weight-w star codes and two-weight code checks.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_, src=True):
        sp = sub.add_parser(name, parents=[common], help=help_)
        if src:
            sp.add_argument("source", nargs="*", help="file, '-' or 'family <name> <params>'")
        sp.set_defaults(func=fn)
        return sp

    add("weights", cmd_weights, "weight distribution and enumerator")
    sp = add("star", cmd_star, "the star code C*(w)")
    sp.add_argument("-w", type=int, default=None, help="weight")
    sp.add_argument("--proj", action="store_true", help="emit the projectivized star")
    add("dual", cmd_dual, "dual code")
    for name, fn in (("puncture", cmd_puncture), ("shorten", cmd_shorten)):
        sp = add(name, fn, f"{name} coordinates (0-based)")
        sp.add_argument("--coords", default=None, help="comma-separated coordinates")
    add("complement", cmd_complement, "code of the complementary point set")
    sp = add("family", cmd_family, "generator matrix of a family member", src=False)
    sp.add_argument("spec", nargs="+", help="<name> <params...>")
    add("analyze-two-weight", cmd_analyze, "two-weight profile checks and predictions")
    sp = add("verify", cmd_verify, "run a verification suite", src=False)
    sp.add_argument("suite", help=", ".join(SUITES))
    sp.add_argument("--grid", default=None, help="JSON list of family instances")
    sp.add_argument("--dist", default=None, help="distribution JSON to check (macwilliams)")
    sp.add_argument("--no-corpus", action="store_true", help="skip the random corpus")
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.guard is not None:
        if args.guard < 1:
            parser.error("--guard must be positive")
        _config.set_guard(args.guard)
    if args.threads is not None:
        _config.set_threads(args.threads)
    t0 = time.perf_counter()
    try:
        code = args.func(args)
    except EnumerationGuard as e:
        print(f"weightstar: {e}", file=sys.stderr)
        return EXIT_GUARD
    except WeightStarError as e:
        print(f"weightstar: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        _config.set_guard(None)
        _config.set_threads(None)
    if args.timing:
        print(f"elapsed {time.perf_counter() - t0:.3f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
