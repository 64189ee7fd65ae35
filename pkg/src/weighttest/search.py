"""Automatic construction of weight functions.

``search_binary`` walks {0,1}-assignments depth first, zeros first, pruning
partial assignments that already break W1 or already admit a W2 witness.  ``search_lp`` solves an exact LP
and adds a cut ``sum_e count_e * theta_e >= 2`` for every offending walk the
W2 checker reports.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .labels import LabelKind
from .lp import IncrementalLP
from .rewrite import Presentation
from .stargraph import StarGraph, build_star_graph
from .verifier import Overall, VerificationReport, WeightFunction, verify
from .w2 import check_w2
from .words import ConstraintEnv

__all__ = ["OutcomeKind", "SearchOutcome", "search_binary", "search_lp", "search"]


CUTS_PER_ROUND = 8


class OutcomeKind(enum.Enum):
    FOUND = "found"
    EXHAUSTED = "exhausted"
    CAP = "iteration-cap-reached"


@dataclass
class SearchOutcome:
    kind: OutcomeKind
    weights: WeightFunction | None = None
    report: VerificationReport | None = None
    strategy: str = ""
    iterations: int = 0
    cuts: list[dict] = field(default_factory=list)

    @property
    def found(self) -> bool:
        return self.kind is OutcomeKind.FOUND


def _final(p: Presentation, env: ConstraintEnv, g: StarGraph, theta: WeightFunction,
           strategy: str, iterations: int, cuts=()) -> SearchOutcome:
    # never trust the search path: re-run the full verification
    rep = verify(p, theta, env, g)
    assert rep.overall is Overall.CERTIFIED, rep.summary()
    return SearchOutcome(OutcomeKind.FOUND, theta, rep, strategy, iterations, list(cuts))


def search_binary(p: Presentation, env: ConstraintEnv | None = None, *,
                  max_evaluations: int | None = None) -> SearchOutcome:
    """First certified {0,1}-assignment in lexicographic order (pair order, 0 before 1).

    Unassigned edges count as weight 1 while checking W2 at inner nodes.
    Lowering weights never removes a light walk, so a witness found there
    rules out every completion.
    """
    env = p.env if env is None else env
    g = build_star_graph(p)
    n = len(g.pairs)
    budget = [v - 2 for v in g.relator_sizes]
    if any(b < 0 for b in budget):
        return SearchOutcome(OutcomeKind.EXHAUSTED, strategy="binary")
    used = [0] * len(budget)
    value = [1] * n
    evaluations = 0

    def theta_now() -> WeightFunction:
        return {e.id: Fraction(value[j]) for j, e in enumerate(g.pairs)}

    def viable() -> bool:
        nonlocal evaluations
        evaluations += 1
        res = check_w2(g, theta_now(), env, exhaustive=False)
        # only a non-power witness is guaranteed to survive in every completion
        return res.passed or not any(w.label_class.kind is not LabelKind.POWER for w in res.witnesses)

    def rec(k: int, changed: bool) -> bool | None:
        if max_evaluations is not None and evaluations >= max_evaluations:
            return None
        if changed and not viable():
            return False
        if k == n:
            # a viable leaf with no witness may still be over the skeleton budget
            return check_w2(g, theta_now(), env, exhaustive=False).passed
        r = g.pairs[k].relator
        value[k] = 0
        res = rec(k + 1, True)
        if res is None or res:
            return res
        value[k] = 1
        if used[r] < budget[r]:
            used[r] += 1
            res = rec(k + 1, False)
            used[r] -= 1
            if res is None or res:
                return res
        return False

    res = rec(0, True)
    if res is None:
        return SearchOutcome(OutcomeKind.CAP, strategy="binary", iterations=evaluations)
    if not res:
        return SearchOutcome(OutcomeKind.EXHAUSTED, strategy="binary", iterations=evaluations)
    theta = {e.id: Fraction(value[k]) for k, e in enumerate(g.pairs)}
    return _final(p, env, g, theta, "binary", evaluations)


def search_lp(p: Presentation, env: ConstraintEnv | None = None, cap: int = 100,
              extra_cuts: list[dict] | None = None) -> SearchOutcome:
    """Cutting-plane search over an exact LP, warm-started between rounds."""
    env = p.env if env is None else env
    g = build_star_graph(p)
    n = len(g.pairs)
    s = n  # index of the slack variable
    cuts: list[dict] = []
    if any(v < 2 for v in g.relator_sizes):
        return SearchOutcome(OutcomeKind.EXHAUSTED, strategy="lp", iterations=1)
    rows = []
    for r, v in enumerate(g.relator_sizes):
        row = {g.index[e.id]: Fraction(1) for e in g.relator_edges(r)}
        row[s] = Fraction(1)
        rows.append((row, Fraction(v - 2)))
    # stage A maximizes the least W1 slack s, stage B then minimizes total weight
    lp = IncrementalLP(n + 1, rows, [{s: Fraction(-1)}, {k: Fraction(1) for k in range(n)}])
    pending = [dict(c) for c in (extra_cuts or [])]
    for it in range(cap):
        for cut in pending:
            lp.add_ge({g.index[eid]: Fraction(c) for eid, c in cut.items()}, 2)
            cuts.append(cut)
        if lp.solve() != "optimal":
            return SearchOutcome(OutcomeKind.EXHAUSTED, strategy="lp", iterations=it + 1, cuts=cuts)
        x = lp.x()
        theta = {e.id: x[k] for k, e in enumerate(g.pairs)}
        res = check_w2(g, theta, env, exhaustive=False, max_witnesses=4 * CUTS_PER_ROUND)
        if res.passed:
            return _final(p, env, g, theta, "lp", it + 1, cuts)
        fresh = []
        for w in sorted(res.witnesses, key=lambda w: w.weight):
            if w.label_class.kind is LabelKind.POWER:
                continue  # not a valid cut: the walk may stay light in a certificate
            c = w.edge_counts()
            if c not in cuts and c not in fresh:
                fresh.append(c)
        pending = fresh[:CUTS_PER_ROUND]
        if not pending:
            # nothing left to cut away, yet the checker cannot certify this point
            return SearchOutcome(OutcomeKind.CAP, strategy="lp", iterations=it + 1, cuts=cuts)
    return SearchOutcome(OutcomeKind.CAP, strategy="lp", iterations=cap, cuts=cuts)


def search(p: Presentation, env: ConstraintEnv | None = None, strategy: str = "auto",
           cap: int = 100) -> SearchOutcome:
    """``auto`` runs the binary search first and falls back to the LP."""
    if strategy == "binary":
        return search_binary(p, env)
    if strategy == "lp":
        return search_lp(p, env, cap)
    if strategy != "auto":
        raise ValueError(f"unknown strategy {strategy!r}")
    out = search_binary(p, env, max_evaluations=20_000)
    if out.found:
        return out
    lp = search_lp(p, env, cap)
    return lp if lp.found or out.kind is OutcomeKind.CAP else out
