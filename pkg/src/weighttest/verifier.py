"""Weight-test verification: orientability, then W3, W1 and W2."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .rewrite import Presentation, is_orientable
from .stargraph import EdgeId, StarGraph, build_star_graph
from .w2 import CycleWitness, W2Result, W2Verdict, check_w2
from .words import ConstraintEnv

__all__ = [
    "WeightFunction",
    "WeightError",
    "Overall",
    "W1Row",
    "VerificationReport",
    "check_w1",
    "check_w3",
    "verify",
    "fmt_q",
    "CONSEQUENCE",
]

WeightFunction = dict[EdgeId, Fraction]

CONSEQUENCE = ("aspherical; equation solvable over every torsion-free group satisfying env "
               "(s(t)=1 is solvable over every torsion-free group satisfying env)")


class WeightError(ValueError):
    pass


class Overall(enum.Enum):
    CERTIFIED = "certified"
    REFUTED = "refuted"
    INCONCLUSIVE = "inconclusive"


def fmt_q(q: Fraction) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class W1Row:
    relator: int
    variables: int
    slack_sum: Fraction  # sum over the relator's edges of (1 - theta)

    @property
    def passed(self) -> bool:
        return self.slack_sum >= 2


def _total(g: StarGraph, theta: Mapping[EdgeId, Fraction]) -> None:
    missing = [p.id for p in g.pairs if p.id not in theta]
    if missing:
        raise WeightError(f"weight function not total: no weight for edge(s) {missing}")
    extra = set(theta) - {p.id for p in g.pairs}
    if extra:
        raise WeightError(f"weight function names unknown edge(s) {sorted(extra)}")


def check_w1(g: StarGraph, theta: Mapping[EdgeId, Fraction]) -> list[W1Row]:
    _total(g, theta)
    rows = []
    for r, v in enumerate(g.relator_sizes):
        s = sum((1 - Fraction(theta[p.id]) for p in g.relator_edges(r)), Fraction(0))
        rows.append(W1Row(r, v, s))
    return rows


def check_w3(theta: Mapping[EdgeId, Fraction]) -> list[EdgeId]:
    """Edges with negative weight (empty list means W3 holds)."""
    return sorted(e for e, w in theta.items() if Fraction(w) < 0)


@dataclass
class VerificationReport:
    orientable: bool
    w3_negative: list[EdgeId]
    w1: list[W1Row]
    w2: W2Result | None
    overall: Overall
    stage: str  # first failing stage, or "all"
    weights: WeightFunction = field(default_factory=dict)

    @property
    def certified(self) -> bool:
        return self.overall is Overall.CERTIFIED

    @property
    def witnesses(self) -> list[CycleWitness]:
        return self.w2.witnesses if self.w2 else []

    def summary(self) -> str:
        if self.certified:
            return CONSEQUENCE
        if self.stage == "orientability":
            return "not orientable: a relator is a cyclic permutation of its inverse"
        if self.stage == "W3":
            return f"W3 fails: negative weight on {self.w3_negative}"
        if self.stage == "W1":
            bad = [f"relator {r.relator} sum {fmt_q(r.slack_sum)}" for r in self.w1 if not r.passed]
            return "W1 fails: " + ", ".join(bad)
        head = self.witnesses[0] if self.witnesses else None
        what = ""
        if head:
            what = f"; witness label {head.label} ({head.label_class.kind.value}), weight {fmt_q(head.weight)}"
        return f"W2 {self.w2.verdict.value}{what}"

    def to_dict(self) -> dict:
        return {
            "overall": self.overall.value,
            "stage": self.stage,
            "summary": self.summary(),
            "orientable": self.orientable,
            "w3": {"passed": not self.w3_negative, "negative": [list(e) for e in self.w3_negative]},
            "w1": [{"relator": r.relator, "variables": r.variables, "sum": fmt_q(r.slack_sum),
                    "passed": r.passed} for r in self.w1],
            "w2": None if self.w2 is None else {
                "verdict": self.w2.verdict.value,
                "witnesses": [_witness_dict(w) for w in self.w2.witnesses],
                "notes": list(self.w2.notes),
            },
        }


def _witness_dict(w: CycleWitness) -> dict:
    return {
        "walk": [[eid[0], eid[1], d] for eid, d in w.walk],
        "weight": fmt_q(w.weight),
        "label": str(w.label),
        "class": w.label_class.kind.value,
        "reason": w.reason,
    }


def verify(p: Presentation, theta: Mapping[EdgeId, Fraction], env: ConstraintEnv | None = None,
           g: StarGraph | None = None, *, exhaustive: bool = True) -> VerificationReport:
    """Run every check; W2 only runs once the cheaper conditions hold."""
    env = p.env if env is None else env
    g = build_star_graph(p) if g is None else g
    _total(g, theta)
    theta = {k: Fraction(v) for k, v in theta.items()}
    orientable = is_orientable(p)
    neg = check_w3(theta)
    w1 = check_w1(g, theta)
    rep = VerificationReport(orientable, neg, w1, None, Overall.REFUTED, "orientability", theta)
    if not orientable:
        return rep
    if neg:
        rep.stage = "W3"
        return rep
    if not all(r.passed for r in w1):
        rep.stage = "W1"
        return rep
    rep.w2 = check_w2(g, theta, env, exhaustive=exhaustive)
    if rep.w2.verdict is W2Verdict.PASS:
        rep.overall, rep.stage = Overall.CERTIFIED, "all"
    else:
        rep.stage = "W2"
        rep.overall = Overall.REFUTED if rep.w2.verdict is W2Verdict.REFUTED else Overall.INCONCLUSIVE
    return rep
