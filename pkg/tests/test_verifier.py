from __future__ import annotations

import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from weighttest import verifier
from weighttest.corpus import default_sweep, gen_family, paper_weights
from weighttest.dsl import parse_word
from weighttest.labels import LabelKind
from weighttest.stargraph import EdgePair, StarGraph, Vertex, build_star_graph
from weighttest.verifier import Overall, WeightError, check_w1, check_w3, verify
from weighttest.w2 import W2Verdict, check_w2, is_closed_walk, is_cyclically_reduced, walk_label, walk_weight
from weighttest.words import ConstraintEnv, Word

sys.path.insert(0, str(Path(__file__).parent))
from oracle import label_tokens  # noqa: E402

T, TI = Vertex("t", 1), Vertex("t", -1)


def graph(*edges) -> StarGraph:
    """Hand-built graph; each edge is (iota, tau, label text)."""
    pairs = tuple(EdgePair((0, k), a, b, parse_word(lab, ("t",)) if lab else Word(()), k)
                  for k, (a, b, lab) in enumerate(edges))
    return StarGraph((T, TI), pairs, (len(pairs),))


def test_w1_sums_for_l1(l1_43):
    g = build_star_graph(l1_43.presentation())
    rows = check_w1(g, paper_weights(l1_43, g))
    assert [r.slack_sum for r in rows] == [2, 2]
    assert all(isinstance(r.slack_sum, Fraction) and r.passed for r in rows)


def test_w1_all_ones_and_all_zeros(l1_43):
    g = build_star_graph(l1_43.presentation())
    ones = check_w1(g, {e.id: Fraction(1) for e in g.pairs})
    assert [r.slack_sum for r in ones] == [0, 0] and not any(r.passed for r in ones)
    zeros = {e.id: Fraction(0) for e in g.pairs}
    assert [r.slack_sum for r in check_w1(g, zeros)] == [2, 3]
    rep = verify(l1_43.presentation(), zeros, g=g)
    assert rep.stage == "W2" and rep.overall is not Overall.CERTIFIED


def test_w3():
    assert check_w3({(0, 0): Fraction(0), (0, 1): Fraction(1)}) == []
    assert check_w3({(0, 0): Fraction(-1, 2), (0, 1): Fraction(1)}) == [(0, 0)]
    assert check_w3({}) == []


def test_w2_passes_on_l1(l1_43):
    g = build_star_graph(l1_43.presentation())
    res = check_w2(g, paper_weights(l1_43, g), l1_43.equation.env)
    assert res.verdict is W2Verdict.PASS and not res.witnesses


def test_trivially_labelled_zero_loop_is_refuted():
    env = ConstraintEnv(frozenset({"g1", "g3"}), {"g3": ("g1", -1)}, frozenset({"g1"}))
    g = graph((T, T, "g3 g1"), (T, TI, "g1"))
    res = check_w2(g, {(0, 0): Fraction(0), (0, 1): Fraction(1)}, env)
    assert res.verdict is W2Verdict.REFUTED
    w = res.witnesses[0]
    assert w.weight == 0 and w.label_class.kind is LabelKind.TRIVIAL and len(w.walk) == 1


def test_two_parallel_power_loops_are_refuted():
    env = ConstraintEnv(frozenset({"g1"}), {}, frozenset({"g1"}))
    g = graph((T, T, "g1"), (T, T, "g1"))
    res = check_w2(g, {(0, 0): Fraction(0), (0, 1): Fraction(0)}, env)
    assert res.verdict is W2Verdict.REFUTED
    assert label_tokens(g, [(g.index[e], d) for e, d in res.witnesses[0].walk], env) == []


def test_single_power_loop_passes():
    env = ConstraintEnv(frozenset({"g1"}), {}, frozenset({"g1"}))
    g = graph((T, T, "g1^2"))
    assert check_w2(g, {(0, 0): Fraction(0)}, env).passed


def test_loop_power_family_with_solution_is_refuted():
    # loop g1^2 at weight 0 plus a weight-1 loop g1^-4: g1^-4 (g1^2)^2 is trivial
    env = ConstraintEnv(frozenset({"g1"}), {}, frozenset({"g1"}))
    g = graph((T, T, "g1^2"), (T, T, "g1^-4"))
    res = check_w2(g, {(0, 0): Fraction(0), (0, 1): Fraction(1)}, env)
    assert res.verdict is W2Verdict.REFUTED


def test_loop_power_family_without_solution_passes():
    # g1^-3 (g1^2)^m is never trivial
    env = ConstraintEnv(frozenset({"g1"}), {}, frozenset({"g1"}))
    g = graph((T, T, "g1^2"), (T, T, "g1^-3"))
    assert check_w2(g, {(0, 0): Fraction(0), (0, 1): Fraction(1)}, env).passed


def test_verify_l1(l1_43):
    p = l1_43.presentation()
    g = build_star_graph(p)
    rep = verify(p, paper_weights(l1_43, g), g=g)
    assert rep.certified and rep.stage == "all"
    assert "s(t)=1 is solvable over every torsion-free group satisfying env" in rep.summary()
    ones = verify(p, {e.id: Fraction(1) for e in g.pairs}, g=g)
    assert ones.overall is Overall.REFUTED and ones.stage == "W1"
    assert "relator 0 sum 0/1" in ones.summary()


def test_weakened_env_is_inconclusive(l1_43):
    p = l1_43.presentation()
    g = build_star_graph(p)
    weak = p.env.without_nontrivial({"g4"})
    rep = verify(p, paper_weights(l1_43, g), env=weak, g=g)
    assert rep.overall is Overall.INCONCLUSIVE
    assert str(rep.witnesses[0].label) == "g4"


def test_missing_weight(l1_43):
    g = build_star_graph(l1_43.presentation())
    theta = paper_weights(l1_43, g)
    del theta[g.pairs[0].id]
    with pytest.raises(WeightError, match="weight function not total"):
        verify(l1_43.presentation(), theta, g=g)


def test_orientability_gate_reported(l1_43, monkeypatch):
    monkeypatch.setattr(verifier, "is_orientable", lambda p: False)
    g = build_star_graph(l1_43.presentation())
    rep = verify(l1_43.presentation(), paper_weights(l1_43, g), g=g)
    assert rep.overall is Overall.REFUTED and rep.stage == "orientability"


def test_report_dict_uses_exact_strings(l1_43):
    g = build_star_graph(l1_43.presentation())
    d = verify(l1_43.presentation(), paper_weights(l1_43, g), g=g).to_dict()
    assert [r["sum"] for r in d["w1"]] == ["2/1", "2/1"]
    assert d["overall"] == "certified"


# -- properties ------------------------------------------------------------------

CERTIFIED = [(f, p) for f, p in default_sweep(("L1", "L2", "L3", "T1")) if gen_family(f, p).zero_edges is not None]


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(CERTIFIED), st.data())
def test_monotone_in_nontrivial_facts(case, data):
    inst = gen_family(*case)
    p = inst.presentation()
    g = build_star_graph(p)
    theta = paper_weights(inst, g)
    facts = sorted(p.env.nontrivial)
    dropped = data.draw(st.sets(st.sampled_from(facts)))
    weak = p.env.without_nontrivial(dropped)
    if verify(p, theta, env=weak, g=g).certified:
        assert verify(p, theta, g=g).certified


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(CERTIFIED), st.fractions(min_value=1, max_value=3).filter(lambda c: c > 1))
def test_scaling(case, c):
    inst = gen_family(*case)
    p = inst.presentation()
    g = build_star_graph(p)
    theta = paper_weights(inst, g)
    scaled = {e: c * v for e, v in theta.items()}
    assert check_w3(scaled) == []
    assert check_w2(g, scaled, p.env).passed
    rows = check_w1(g, scaled)
    for r in rows:
        total = sum(scaled[e.id] for e in g.relator_edges(r.relator))
        assert r.passed == (total <= r.variables - 2)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(CERTIFIED), st.data())
def test_witnesses_are_genuine(case, data):
    inst = gen_family(*case)
    p = inst.presentation()
    g = build_star_graph(p)
    theta = {e.id: data.draw(st.sampled_from([Fraction(0), Fraction(1, 2), Fraction(1)])) for e in g.pairs}
    res = check_w2(g, theta, p.env)
    for w in res.witnesses:
        walk = [(g.index[e], d) for e, d in w.walk]
        assert is_closed_walk(g, walk) and is_cyclically_reduced(walk)
        assert w.weight == walk_weight(g, walk, theta) < 2
        assert walk_label(g, walk, p.env) == w.label
        if w.label_class.kind is LabelKind.TRIVIAL:
            assert label_tokens(g, walk, p.env) == []
    assert (res.verdict is W2Verdict.REFUTED) == any(w.label_class.kind is LabelKind.TRIVIAL for w in res.witnesses)
