from __future__ import annotations

import json

import pytest

from weighttest.corpus import (FAMILIES, FamilyError, default_sweep, dump_manifest, format_report, gen_family,
                               load_manifest, paper_weights, parse_range, run_corpus, run_one)
from weighttest.dsl import format_equation
from weighttest.stargraph import build_star_graph
from weighttest.verifier import verify


def test_l1_text():
    inst = gen_family("L1", {"n": 4, "i": 3})
    assert format_equation(inst.equation).splitlines() == [
        "g1 t g2 t^-1 g3 t g4 t^-1", "let g3 = g1^-1", "nontrivial g1 g2 g3 g4"]
    assert str(inst.pattern) == "1:g1:1:x"


def test_t1_text():
    inst = gen_family("T1", {"k": [2, 2]})
    assert format_equation(inst.equation).splitlines()[0] == "g1 t a1 t a2 t^-1 g2 t a3 t a4 t^-1"
    assert dict(inst.equation.env.equalities) == {"g2": ("g1", -1)}


def test_keyword_arguments():
    assert gen_family("L1", n=5, i=3).equation.word == gen_family("L1", {"n": 5, "i": 3}).equation.word


@pytest.mark.parametrize("family, params, needle", [
    ("L1", {"n": 4, "i": 4}, "t^-1 g4 t^-1"),
    ("L1", {"n": 3, "i": 2}, "n >= 4 (n=3)"),
    ("L3", {"n": 6, "i": 3, "j": 4}, "t^-1 g3 t^-1"),
    ("L2", {"m": [0, 1, 1], "i": 2}, "m_1 >= 1 (m_1=0)"),
    ("T2", {"k": [2, 2], "m": [1, 2, 1, 1]}, "m_1 > m_{k_1}"),
    ("X", {}, "unknown family 'X'"),
])
def test_invalid_parameters_are_named(family, params, needle):
    with pytest.raises(FamilyError) as info:
        gen_family(family, params)
    assert needle in str(info.value)


def test_no_published_assignment():
    inst = gen_family("L2", {"m": [2, 2, 2, 1, 1], "i": 3})
    assert inst.zero_edges is None
    with pytest.raises(FamilyError, match="no published assignment"):
        paper_weights(inst)


@pytest.mark.parametrize("n, i", [(4, 3), (6, 3), (6, 5), (9, 4)])
def test_l1_w1_sums(n, i):
    inst = gen_family("L1", {"n": n, "i": i})
    g = build_star_graph(inst.presentation())
    rep = verify(inst.presentation(), paper_weights(inst, g), g=g)
    assert rep.certified
    assert [r.slack_sum for r in rep.w1] == [2, 2]


def test_parse_range():
    assert parse_range("4..6") == [4, 5, 6]
    assert parse_range("5") == [5]
    assert parse_range("3,5") == [3, 5]


def test_sweep_is_stable():
    items = default_sweep()
    assert items == default_sweep()
    assert {f for f, _ in items} == set(FAMILIES)
    assert len(default_sweep(("L1",))) == sum(n - 3 for n in range(4, 11))


def test_empty_corpus():
    assert run_corpus([]) == []
    assert format_report([]).splitlines()[-1] == "0 instances, 0 certified, 0 failed, 0 named assignments not certified"


def test_manifest_round_trip(tmp_path):
    items = default_sweep(("L1", "T2R"))[:6]
    path = tmp_path / "m.json"
    path.write_text(dump_manifest(items))
    assert load_manifest(str(path)) == items
    assert all("expected" in row for row in json.loads(path.read_text()))


def test_bad_manifest(tmp_path):
    path = tmp_path / "m.json"
    path.write_text('{"family": "L1"}')
    with pytest.raises(FamilyError, match="JSON list"):
        load_manifest(str(path))


def test_run_one_rows():
    row = run_one("L1", {"n": 4, "i": 3})
    assert row.ok and row.round_trip and row.named == "certified" and row.w1 == "2/1,2/1"
    bad = run_one("L1", {"n": 4, "i": 4})
    assert not bad.ok and "forbidden" in bad.error
    report = format_report([row, bad])
    assert "1 failed" in report and report.rstrip().splitlines()[-1].startswith("error L1")


def test_report_without_timing_is_byte_stable():
    items = default_sweep(("L1",))[:4]
    assert format_report(run_corpus(items)) == format_report(run_corpus(items))
