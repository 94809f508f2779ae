import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracle
from weightstar import (
    code_from_generator,
    codewords_of_weight,
    codim_one_subcodes,
    dual,
    family,
    field_new,
    generalized_hamming_weight,
    is_projective,
    macwilliams,
    minimum_distance,
    monomial_equivalent,
    puncture,
    shorten,
    support_design_check,
    weight_distribution,
)
from weightstar.code import LinearCode, hyperplane_counts, subcode_supports
from weightstar.errors import (
    AllCoordinatesRemoved,
    EnumerationGuard,
    FieldMismatch,
    NoSuchWeight,
    NotProjective,
    ParameterMismatch,
    RankDeficient,
    SubcodeGuard,
)
from weightstar.families import GOLAY_G
from weightstar.gfield import prime_power
from weightstar.linalg import rref_array

FIELDS = {q: field_new(*prime_power(q)) for q in (2, 3, 4, 5)}


@st.composite
def small_codes(draw, qs=(2, 3, 4), max_k=4, max_n=7):
    q = draw(st.sampled_from(qs))
    F = FIELDS[q]
    k = draw(st.integers(1, max_k))
    n = draw(st.integers(k, max_n))
    while True:
        flat = draw(st.lists(st.integers(0, q - 1), min_size=k * n, max_size=k * n))
        G = np.array(flat).reshape(k, n)
        # force full rank by overwriting a k x k block with the identity when needed
        if oracle.rank(oracle.ref_field(F), G.tolist()) < k:
            G[:, :k] = np.eye(k, dtype=int)
        return LinearCode(F, G)


def _rowspace(C):
    R, piv = rref_array(C.field, C.G)
    return R[: len(piv)].tobytes()


@given(small_codes())
def test_distribution_matches_oracle(C):
    R = oracle.ref_field(C.field)
    assert weight_distribution(C).A == oracle.distribution(R, C.G.tolist())


@given(small_codes())
def test_distribution_invariants(C):
    dist = weight_distribution(C)
    assert dist[0] == 1 and sum(dist.A) == C.q**C.k
    assert all(dist[i] == 0 for i in range(1, dist.d))
    # nonzero scalar multiples share a weight
    assert all(a % (C.q - 1) == 0 for a in dist.A[1:])


@given(small_codes(max_n=6))
def test_dual_matches_oracle(C):
    R = oracle.ref_field(C.field)
    D = dual(C)
    assert D.k == C.n - C.k
    words = oracle.dual_words(R, C.G.tolist())
    A = [0] * (C.n + 1)
    for v in words:
        A[oracle.weight(v)] += 1
    assert weight_distribution(D).A == A


def test_dual_of_dual_twenty_codes():
    rng = np.random.default_rng(7)
    done = 0
    while done < 20:
        q = int(rng.choice([2, 3, 4, 5]))
        F = FIELDS[q]
        k, n = int(rng.integers(1, 5)), int(rng.integers(5, 9))
        G = rng.integers(0, q, size=(k, n))
        try:
            C = code_from_generator(F, G)
        except RankDeficient:
            continue
        if C.k == C.n:
            continue
        assert _rowspace(dual(dual(C))) == _rowspace(C)
        done += 1


@given(small_codes(max_n=6), st.data())
def test_codewords_of_weight(C, data):
    R = oracle.ref_field(C.field)
    w = data.draw(st.integers(0, C.n))
    U, cw = codewords_of_weight(C, w)
    msgs = oracle.messages(C.q, C.k)
    words = oracle.codewords(R, C.G.tolist())
    expect = [(m, c) for m, c in zip(msgs, words) if oracle.weight(c) == w]
    assert [tuple(u) for u in U.tolist()] == [m for m, _ in expect]
    assert [tuple(c) for c in cw.tolist()] == [c for _, c in expect]


def test_golay_distribution(golay):
    dist = weight_distribution(golay)
    assert dist.as_dict() == {0: 1, 5: 132, 6: 132, 8: 330, 9: 110, 11: 24}
    assert minimum_distance(golay) == 5
    assert len(codewords_of_weight(golay, 11)[0]) == 24
    assert dist.enumerator() == (
        "x^11 + 132x^6y^5 + 132x^5y^6 + 330x^3y^8 + 110x^2y^9 + 24y^11"
    )


def test_golay_dual_matches_macwilliams(golay):
    D = dual(golay)
    assert (D.n, D.k) == (11, 5)
    assert weight_distribution(D).A == macwilliams(weight_distribution(golay), 11, 6, 3)


def test_simplex_and_trace(trace_code):
    assert weight_distribution(family("simplex", 2, 3)).as_dict() == {0: 1, 4: 7}
    assert weight_distribution(trace_code).as_dict() == {0: 1, 72: 504, 81: 224}


def test_zero_weight_and_punctured_simplex():
    C = family("punctured_simplex", 2, 3)
    U, cw = codewords_of_weight(C, 0)
    assert U.tolist() == [[0, 0, 0]] and not cw.any()
    assert len(codewords_of_weight(C, 3)[0]) == 4


def test_constructor_validation():
    F2 = field_new(2)
    C = code_from_generator(F2, [[1, 1, 1]])
    assert (C.n, C.k) == (3, 1)
    assert weight_distribution(dual(C)).A == [1, 0, 3, 0]
    with pytest.raises(RankDeficient):
        code_from_generator(F2, [[1, 0, 1], [1, 0, 1]])
    with pytest.raises(FieldMismatch):
        code_from_generator(F2, [[1, 2]])
    with pytest.raises(FieldMismatch):
        code_from_generator("GF(2)", [[1]])
    with pytest.raises(EnumerationGuard):
        code_from_generator(F2, np.eye(12, dtype=int), guard=1000)
    Cg = code_from_generator(field_new(3), GOLAY_G)
    assert np.array_equal(Cg.G, np.array(GOLAY_G))


def test_guard_on_enumeration():
    C = LinearCode(field_new(2), np.eye(20, dtype=int))
    with pytest.raises(EnumerationGuard):
        weight_distribution(C, guard=1 << 19)


def test_puncture_examples(golay):
    S = family("simplex", 2, 3)
    P = puncture(S, [0])
    assert (P.n, P.k) == (6, 3)
    assert weight_distribution(P).nonzero_weights == [3, 4]
    # one coordinate below d keeps the dimension; a minimum-weight support drops it
    assert puncture(golay, [4]).k == 6
    _, cw = codewords_of_weight(golay, 5)
    T = np.flatnonzero(cw[0])
    assert puncture(golay, T).k == 5
    with pytest.raises(AllCoordinatesRemoved):
        puncture(S, range(7))
    with pytest.raises(IndexError):
        puncture(S, [7])


@given(small_codes(max_n=6), st.data())
def test_shorten_matches_oracle(C, data):
    T = data.draw(st.sets(st.integers(0, C.n - 1), max_size=min(2, C.n - 1)))
    R = oracle.ref_field(C.field)
    keep = [i for i in range(C.n) if i not in T]
    expect = {tuple(c[i] for i in keep) for c in oracle.codewords(R, C.G.tolist()) if all(c[t] == 0 for t in T)}
    zero = {tuple([0] * len(keep))}
    S = shorten(C, T)
    assert (set(oracle.span(R, S.G.tolist())) if S.k else zero) == expect
    P = puncture(C, T)
    punctured = {tuple(c[i] for i in keep) for c in oracle.codewords(R, C.G.tolist())}
    assert (set(oracle.span(R, P.G.tolist())) if P.k else zero) == punctured


@given(small_codes(max_n=7), st.data())
def test_puncture_shorten_duality(C, data):
    if C.n < 2:
        return
    T = sorted(data.draw(st.sets(st.integers(0, C.n - 1), min_size=1, max_size=min(2, C.n - 1))))
    D = dual(C)
    if D.k:
        assert _rowspace(shorten(D, T)) == _rowspace(dual(puncture(C, T)))
        assert _rowspace(puncture(D, T)) == _rowspace(dual(shorten(C, T)))


def test_codim_one_counts(golay):
    F2 = field_new(2)
    C = LinearCode(F2, [[1, 0, 1], [0, 1, 1]])
    subs = list(codim_one_subcodes(C))
    assert len(subs) == 3
    assert len({s.message_indices().tobytes() for s in subs}) == 3
    assert sum(1 for _ in codim_one_subcodes(golay)) == 364


@given(small_codes(max_k=3, max_n=6))
def test_codim_one_subcodes_are_hyperplanes(C):
    R = oracle.ref_field(C.field)
    seen = set()
    for h in codim_one_subcodes(C):
        idx = h.message_indices()
        assert len(idx) == C.q ** (C.k - 1)
        msgs = C.messages(idx)
        assert all(R.dot(h.functionals[0].tolist(), u) == 0 for u in msgs.tolist())
        seen.add(frozenset(idx.tolist()))
        sub = h.code()
        assert sub.k == C.k - 1 or C.k == 1
    assert len(seen) == (C.q**C.k - 1) // (C.q - 1)


def test_two_weight_codim_one_support_sizes():
    for C in (family("punctured_simplex", 2, 4), family("hyperoval", 4), family("two_disjoint_subspaces", 3, 2)):
        sizes = [h.support_size() for h in codim_one_subcodes(C)]
        assert set(sizes) <= {C.n, C.n - 1}
        assert sizes.count(C.n - 1) == C.n


@given(small_codes(max_k=3, max_n=6))
def test_ghw_against_support_union(C):
    R = oracle.ref_field(C.field)
    # one representative per scalar class; two distinct ones always span a plane
    pts = [c for c in oracle.codewords(R, C.G.tolist()) if oracle.normalized(c)]
    d1 = min(oracle.weight(c) for c in pts)
    assert generalized_hamming_weight(C, 1).d_r == d1 == minimum_distance(C)
    if C.k >= 2:
        d2 = min(
            sum(1 for j in range(C.n) if a[j] or b[j])
            for i, a in enumerate(pts)
            for b in pts[i + 1 :]
        )
        assert generalized_hamming_weight(C, 2).d_r == d2
    full = sum(1 for j in range(C.n) if C.G[:, j].any())
    assert generalized_hamming_weight(C, C.k).d_r == full


def test_ghw_golay(golay):
    assert generalized_hamming_weight(golay, 1).d_r == 5
    assert generalized_hamming_weight(golay, 2).d_r == 7
    assert generalized_hamming_weight(golay, 6).d_r == 11
    _, supp = subcode_supports(golay, 2)
    assert len(supp) == (3**6 - 1) * (3**6 - 3) // ((9 - 1) * (9 - 3))
    with pytest.raises(SubcodeGuard):
        generalized_hamming_weight(golay, 3, guard=10)


def test_design_examples(golay):
    d = support_design_check(family("simplex", 2, 3), 4, 1)
    assert d.is_design and d.lambda_ == 4 and d.b == 7
    d = support_design_check(golay, 5, 4)
    assert d.is_design and d.lambda_ == 1 and d.b == 66 and d.has_uniform_multiplicity
    d = support_design_check(family("two_disjoint_subspaces", 2, 2), 2, 1)
    assert d.is_design and d.lambda_ == 2
    with pytest.raises(NoSuchWeight):
        support_design_check(golay, 7, 1)


def test_design_negative():
    # punctured simplex: weight-3 supports miss the coordinates of the removed point's lines unevenly
    d = support_design_check(family("punctured_simplex", 2, 3), 3, 2)
    assert not d.is_design and d.lambda_ is None


def test_equivalence_examples(golay):
    rng = np.random.default_rng(3)
    C = family("hyperoval", 4)
    F = C.field
    perm = rng.permutation(C.n)
    scale = rng.integers(1, F.q, size=C.n)
    D = LinearCode(F, F.mul(C.G[:, perm], scale[None, :]))
    assert monomial_equivalent(C, C) == "yes"
    assert monomial_equivalent(C, D) == "yes"
    S = family("simplex", 2, 3)
    G = S.G.copy()
    G[:, 6] = G[:, 5]
    assert monomial_equivalent(S, LinearCode(S.field, G)) == "no"
    with pytest.raises(ParameterMismatch):
        monomial_equivalent(S, family("punctured_simplex", 2, 3))
    R = LinearCode(S.field, G)
    with pytest.raises(NotProjective):
        monomial_equivalent(R, R)


def test_equivalence_between_families():
    H, D = family("hyperoval", 4), family("denniston", 4, 2)
    assert monomial_equivalent(H, D) == "yes"
    from weightstar.geometry import pg_points

    other = LinearCode(H.field, pg_points(H.field, 3)[:6].T)
    assert monomial_equivalent(H, other) == "no"


def test_hyperplane_counts_match_subcodes(golay):
    counts = hyperplane_counts(golay, 9)
    direct = [h.weight_distribution()[9] for h in codim_one_subcodes(golay)]
    assert counts.tolist() == direct


def test_is_projective():
    assert is_projective(family("simplex", 3, 3))
    assert not is_projective(LinearCode(field_new(2), [[1, 1, 0], [0, 0, 1]]))
    assert not is_projective(LinearCode(field_new(2), [[1, 0, 0], [0, 1, 0]]))
