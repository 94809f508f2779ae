import json

import numpy as np
import pytest

from weightstar import family
from weightstar.errors import ParseError, UnknownSuite
from weightstar.families import FamilyId
from weightstar.verify import (
    FAIL,
    PASS,
    SKIP,
    SUITES,
    Check,
    Context,
    VerificationReport,
    boundary_check,
    grid_instances,
    load_grid,
    random_corpus,
    run_suite,
)
from weightstar.identities import profile_from_distribution
from weightstar import weight_distribution


@pytest.fixture(scope="module")
def ctx():
    return Context()


@pytest.mark.parametrize("suite", sorted(SUITES))
def test_suite_passes_with_well_formed_report(ctx, suite):
    rep = run_suite(suite, context=ctx)
    assert rep.ok, [(c.id, c.witness) for c in rep.failures()[:5]]
    ids = [c.id for c in rep.checks]
    assert len(ids) == len(set(ids))
    counts = rep.counts()
    assert sum(counts.values()) == len(rep.checks) and counts[PASS] > 0
    for c in rep.checks:
        assert c.ref
        assert (c.witness is None) == (c.verdict == PASS)
    doc = json.loads(rep.dumps())
    assert doc["suite"] == suite and doc["summary"] == counts
    assert set(doc["checks"][0]) == {"id", "ref", "verdict", "witness"}


def test_report_accounting():
    rep = VerificationReport("x", [Check("a", "r", PASS), Check("b", "r", SKIP, {"h": 1}, 2.0)])
    assert rep.ok and rep.counts() == {PASS: 1, FAIL: 0, SKIP: 1}
    rep.checks.append(Check("c", "r", FAIL, {"why": 0}, 1.5))
    assert not rep.ok and [c.id for c in rep.failures()] == ["c"]
    assert rep.to_json(timing=True)["checks"][2]["ms"] == 1.5


def test_supplied_distribution():
    ok = run_suite("macwilliams", dist=([1, 0, 0, 0, 7, 0, 0, 0], 7, 3, 2))
    assert ok.ok
    bad = run_suite("macwilliams", dist=([1, 0, 0, 1, 6, 0, 0, 0], 7, 3, 2))
    assert not bad.ok and all(c.witness for c in bad.failures())
    with pytest.raises(UnknownSuite):
        run_suite("pless", dist=([1, 1], 1, 1, 2))
    with pytest.raises(UnknownSuite):
        run_suite("nope")


def test_corpus_is_deterministic_and_bounded():
    a, b = random_corpus(), random_corpus()
    assert len(a) == 50
    for x, y in zip(a, b):
        assert x.label == y.label and np.array_equal(x.code.G, y.code.G)
    for inst in a:
        C = inst.code
        assert C.n <= 12 and 1 <= C.k <= 6 and C.q in (2, 3, 4)


def test_grid_respects_message_bound():
    insts = grid_instances(max_messages=1 << 10)
    assert insts and all(i.code.size <= 1 << 10 for i in insts)
    labels = [str(i) for i in grid_instances([FamilyId("simplex", (2, 3))])]
    assert labels == ["simplex(2,3)"]


def test_load_grid(tmp_path):
    p = tmp_path / "g.json"
    p.write_text('["hyperoval(4)", ["simplex", 2, 3], {"name": "ternary_golay"}]')
    assert [str(f) for f in load_grid(str(p))] == ["hyperoval(4)", "simplex(2,3)", "ternary_golay()"]
    for text in ("{}", "[", "[3]"):
        p.write_text(text)
        with pytest.raises(ParseError):
            load_grid(str(p))
    with pytest.raises(ParseError):
        load_grid(str(tmp_path / "missing.json"))


@pytest.mark.parametrize("q,k,t", [(2, 3, 0), (2, 4, 1), (3, 3, 0), (4, 3, 0)])
def test_boundary_check_on_complement_family(q, k, t):
    C = family("complement_of_subspace", q, k, t)
    p = profile_from_distribution(weight_distribution(C))
    assert p.boundary
    ok, wit = boundary_check(C, p)
    assert ok, wit
