"""Parametric equation families with their substitutions and known zero-edge sets.

Each generator writes the equation as DSL text and sends it through the same
parser, substitution and star-graph code a user file would go through.

Families (``K`` = total block length, blocks given by sizes ``k``):

* ``L1(n, i)``      ``g1 t g2 t ... g_{i-1} t^-1 g_i t ... g_n t^-1`` with ``g_i = g1^-1``
* ``L2(m, i)``      the same with powers ``t^{±m_j}``
* ``L3(n, i, j)``   two inverted coefficients ``g_i = g_j = g1^-1``
* ``L4(m, i, j)``   ``L3`` with powers
* ``T1(k)``         ``g1 E_1 g2 E_2 ...`` with ``E = t a t a ... t a t^-1`` and ``g_j = g1^-1``
* ``T2(k, m)``      ``E = t^{m} a t^{m} ... a t^{-m}`` with power conditions
* ``T2R(k, m, split)`` ``T2`` with some inner powers replaced by ``b t^q b t^q ...`` products
"""

from __future__ import annotations

import itertools
import json
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Sequence

from .dsl import format_equation, parse_equation
from .rewrite import Presentation, SubstitutionPattern, back_substitute, substitute
from .search import search
from .stargraph import EdgeId, StarGraph, Vertex, build_star_graph
from .verifier import fmt_q, verify
from .words import Equation, Letter, ShapeError, Word, invert

__all__ = [
    "FAMILIES",
    "FamilyError",
    "EdgeDesc",
    "FamilyInstance",
    "gen_family",
    "paper_weights",
    "default_sweep",
    "parse_range",
    "run_corpus",
    "CorpusRow",
    "format_report",
    "load_manifest",
]

FAMILIES = ("L1", "L2", "L3", "L4", "T1", "T2", "T2R")


class FamilyError(ValueError):
    pass


@dataclass(frozen=True)
class EdgeDesc:
    """A named edge: its label plus, optionally, endpoints and relator.

    ``ends`` is ``(a, b)``; the pair matches if it runs ``a -> b`` with
    ``label`` or ``b -> a`` with the inverse label.
    """

    label: str
    ends: tuple[str, str] | None = None
    relator: int | None = None
    oriented: bool = False  # match only the relator's own orientation

    def __str__(self) -> str:
        s = f"[{self.label}]"
        if self.ends:
            s = f"{self.ends[0]} -> {self.ends[1]} {s}"
        if self.relator is not None:
            s += f" in relator {self.relator}"
        return s


@dataclass(frozen=True)
class FamilyInstance:
    family: str
    params: dict[str, Any]
    case: str
    equation: Equation
    pattern: SubstitutionPattern
    zero_edges: tuple[EdgeDesc, ...] | None  # None: no published assignment

    @property
    def text(self) -> str:
        return format_equation(self.equation)

    @property
    def expected(self) -> str:
        return "certified-by-named-weights" if self.zero_edges is not None else "certified-by-search"

    def presentation(self) -> Presentation:
        return substitute(self.equation, self.pattern)

    def key(self) -> str:
        return f"{self.family} {json.dumps(self.params, sort_keys=True, separators=(',', ':'))}"


# -- helpers -----------------------------------------------------------------

T = "t"


def _t(e: int) -> Letter:
    return Letter(T, e, True)


def _c(name: str) -> Letter:
    return Letter(name, 1)


def _need(cond: bool, text: str, **values) -> None:
    if not cond:
        vals = ", ".join(f"{k}={v}" for k, v in values.items())
        raise FamilyError(f"violates {text}" + (f" ({vals})" if vals else ""))


def _positive(m: Sequence[int]) -> None:
    for k, v in enumerate(m, 1):
        _need(isinstance(v, int) and v >= 1, f"m_{k} >= 1", **{f"m_{k}": v})


def _nontrivial(letters: list[Letter]) -> set[str]:
    """Single coefficients between powers of opposite sign, read cyclically."""
    n = len(letters)
    vpos = [k for k, l in enumerate(letters) if l.var]
    out = set()
    for a, b in zip(vpos, vpos[1:] + vpos[:1]):
        seg = [letters[(a + 1 + r) % n] for r in range((b - a - 1) % n)]
        if letters[a].sign != letters[b].sign and len(seg) == 1:
            out.add(seg[0].name)
    return out


def _build(family: str, params: dict, case: str, letters: list[Letter], inverted: Iterable[str],
           pattern: SubstitutionPattern, zero: tuple[EdgeDesc, ...] | None) -> FamilyInstance:
    lines = [str(Word(tuple(letters)))]
    lines += [f"let {g} = g1^-1" for g in inverted]
    nt = sorted(_nontrivial(letters))
    if nt:
        lines.append("nontrivial " + " ".join(nt))
    try:
        eq = parse_equation("\n".join(lines) + "\n")
    except ShapeError as e:
        raise FamilyError(f"{family} {params}: {e}") from None
    return FamilyInstance(family, params, case, eq, pattern, zero)


def _blocks(k: Sequence[int]) -> list[tuple[int, int]]:
    """(first index, last index) of each block, 1-based, for block sizes k."""
    out, s = [], 0
    for size in k:
        out.append((s + 1, s + size))
        s += size
    return out


ONE = "1"


# -- generators --------------------------------------------------------------

def _gen_l1(n: int, i: int) -> FamilyInstance:
    _need(n >= 4, "n >= 4", n=n)
    _need(3 <= i <= n, "3 <= i <= n - 1", n=n, i=i)
    letters = []
    for k in range(1, n + 1):
        letters += [_c(f"g{k}"), _t(-1 if k in (i - 1, n) else 1)]
    zero = (EdgeDesc("g1^-1"), EdgeDesc("g2"), EdgeDesc(f"g{n}"), EdgeDesc(ONE, ("t^-1", "x^-1"), 1))
    inst = _build("L1", {"n": n, "i": i}, "main", letters, [f"g{i}"], SubstitutionPattern(1, "g1", 1), zero)
    _need(i <= n - 1, "i <= n - 1", n=n, i=i)
    return inst


def _gen_l3(n: int, i: int, j: int) -> FamilyInstance:
    _need(n >= 6, "n >= 6", n=n)
    _need(3 <= i < j <= n, "3 <= i < j <= n - 1", i=i, j=j, n=n)
    letters = []
    for k in range(1, n + 1):
        letters += [_c(f"g{k}"), _t(-1 if k in (i - 1, j - 1, n) else 1)]
    zero = (EdgeDesc("g1^-1"), EdgeDesc("g2"), EdgeDesc(f"g{n}"), EdgeDesc(ONE, ("t^-1", "x^-1"), 1))
    inst = _build("L3", {"n": n, "i": i, "j": j}, "main", letters, [f"g{i}", f"g{j}"],
                  SubstitutionPattern(1, "g1", 1), zero)
    _need(j <= n - 1, "j <= n - 1", j=j, n=n)
    _need(j >= i + 2, "j >= i + 2", i=i, j=j)
    return inst


def _powered(m: Sequence[int], negative: set[int]) -> list[Letter]:
    letters = []
    for k, e in enumerate(m, 1):
        letters += [_c(f"g{k}"), _t(-e if k in negative else e)]
    return letters


def _gen_l2(m: Sequence[int], i: int) -> FamilyInstance:
    m = list(m)
    n = len(m)
    _positive(m)
    _need(n >= 4, "n >= 4", n=n)
    _need(3 <= i <= n, "3 <= i <= n - 1", n=n, i=i)
    M = lambda k: m[k - 1]  # noqa: E731
    _need(M(1) >= M(i - 1), "m_1 >= m_{i-1}", m_1=M(1), **{"m_{i-1}": M(i - 1)})
    first = "m_1 > m_{i-1}" if M(1) > M(i - 1) else "m_1 = m_{i-1}"
    rel = ">" if M(i) > M(n) else "<" if M(i) < M(n) else "="
    case = f"m_i {rel} m_n, {first}"
    x_t = (Vertex("x", 1), Vertex("t", -1))
    zero: tuple[EdgeDesc, ...] | None = None
    if first.startswith("m_1 >"):
        if rel in (">", "="):
            zero = (EdgeDesc("g1^-1"), EdgeDesc(f"g{i + 1}"), EdgeDesc(f"g{i - 1}"),
                    EdgeDesc(ONE, (str(x_t[0]), str(x_t[1]))))
        else:
            zero = (EdgeDesc("g1^-1"), EdgeDesc(f"g{n}"), EdgeDesc(ONE, ("x", "t"), 0),
                    EdgeDesc(ONE, ("t^-1", "x^-1"), 1))
    letters = _powered(m, {i - 1, n})
    inst = _build("L2", {"m": m, "i": i}, case, letters, [f"g{i}"],
                  SubstitutionPattern(M(i - 1), "g1", M(i)), zero)
    _need(i <= n - 1, "i <= n - 1", n=n, i=i)
    return inst


def _gen_l4(m: Sequence[int], i: int, j: int) -> FamilyInstance:
    m = list(m)
    n = len(m)
    _positive(m)
    _need(n >= 6, "n >= 6", n=n)
    _need(3 <= i < j <= n, "3 <= i < j <= n - 1", i=i, j=j, n=n)
    M = lambda k: m[k - 1]  # noqa: E731
    vals = {"m_i": M(i), "m_n": M(n), "m_1": M(1), "m_{i-1}": M(i - 1), "m_{j-1}": M(j - 1), "m_j": M(j)}
    if M(i) > M(n):
        case = "1"
        for text, ok in (("m_1 > m_{i-1}", M(1) > M(i - 1)), ("m_{i-1} < m_{j-1}", M(i - 1) < M(j - 1)),
                         ("m_j > m_i", M(j) > M(i))):
            _need(ok, f"case 1 condition {text}", **vals)
        zero = (EdgeDesc("g1^-1"), EdgeDesc(f"g{j - 1}"), EdgeDesc(ONE, ("t", "x"), 0, oriented=True),
                EdgeDesc(ONE, ("t^-1", "x^-1"), 1))
    elif M(i) == M(n):
        case = "2"
        for text, ok in (("m_1 > m_{i-1}", M(1) > M(i - 1)), ("m_{i-1} > m_{j-1}", M(i - 1) > M(j - 1)),
                         ("m_j > m_i", M(j) > M(i))):
            _need(ok, f"case 2 condition {text}", **vals)
        zero = (EdgeDesc("g1^-1"), EdgeDesc(f"g{n}"), EdgeDesc(ONE, ("x", "t"), 0),
                EdgeDesc(ONE, ("t^-1", "x^-1"), 1))
    else:
        raise FamilyError(f"violates m_i > m_n (case 1) or m_i = m_n (case 2) (m_i={M(i)}, m_n={M(n)})")
    letters = _powered(m, {i - 1, j - 1, n})
    inst = _build("L4", {"m": m, "i": i, "j": j}, case, letters, [f"g{i}", f"g{j}"],
                  SubstitutionPattern(M(i - 1), "g1", M(i)), zero)
    _need(j <= n - 1, "j <= n - 1", j=j, n=n)
    _need(j >= i + 2, "j >= i + 2", i=i, j=j)
    return inst


def _gen_t1(k: Sequence[int]) -> FamilyInstance:
    k = list(k)
    _need(len(k) >= 2, "n >= 2 (at least two blocks)", n=len(k))
    for q, size in enumerate(k, 1):
        _need(isinstance(size, int) and size >= 1, f"k_{q} >= 1", **{f"k_{q}": size})
    letters = []
    for q, (lo, hi) in enumerate(_blocks(k), 1):
        letters.append(_c(f"g{q}"))
        for a in range(lo, hi + 1):
            letters += [_t(1), _c(f"a{a}")]
        letters.append(_t(-1))
    K = sum(k)
    zero = None
    if all(size >= 2 for size in k):
        zero = (EdgeDesc("g1^-1"), EdgeDesc("a1"), EdgeDesc(f"a{K}"), EdgeDesc(ONE, ("t^-1", "x^-1"), 1))
    return _build("T1", {"k": k}, "k_i >= 2" if zero else "some k_i = 1", letters,
                  [f"g{q}" for q in range(2, len(k) + 1)], SubstitutionPattern(1, "g1", 1), zero)


def _t2_checks(k: Sequence[int], m: Sequence[int]) -> None:
    _need(len(k) >= 2, "n >= 2 (at least two blocks)", n=len(k))
    for q, size in enumerate(k, 1):
        _need(isinstance(size, int) and size >= 2, f"k_{q} >= 2", **{f"k_{q}": size})
    K = sum(k)
    _need(len(m) == K, "len(m) = k_1 + ... + k_n", len_m=len(m), K=K)
    _positive(m)
    M = lambda q: m[q - 1]  # noqa: E731
    ends = [hi for _, hi in _blocks(k)]
    e1 = ends[0]
    for q in range(2, len(k) + 1):
        _need(M(e1) > M(ends[q - 1]), "m_{k_1} > m_{k_i}", i=q, **{"m_{k_1}": M(e1), "m_{k_i}": M(ends[q - 1])})
    for q in range(2, len(k)):
        _need(M(ends[q - 1] + 1) > M(e1 + 1), "m_{k_i+1} > m_{k_1+1}", i=q,
              **{"m_{k_i+1}": M(ends[q - 1] + 1), "m_{k_1+1}": M(e1 + 1)})
    _need(M(e1 + 1) == M(ends[-1]), "m_{k_1+1} = m_{k_n}", **{"m_{k_1+1}": M(e1 + 1), "m_{k_n}": M(ends[-1])})
    _need(M(1) > M(e1), "m_1 > m_{k_1}", m_1=M(1), **{"m_{k_1}": M(e1)})


def _t2_letters(k: Sequence[int], m: Sequence[int], split: dict[int, list[int]]) -> list[Letter]:
    letters = []
    for q, (lo, hi) in enumerate(_blocks(k), 1):
        letters.append(_c(f"g{q}"))
        for a in range(lo, hi):
            if a in split:
                for r, e in enumerate(split[a], 1):
                    letters += [_c(f"b{a}_{r}"), _t(e)]
            else:
                letters.append(_t(m[a - 1]))
            letters.append(_c(f"a{a}"))
        letters.append(_t(-m[hi - 1]))
    return letters


def _t2_zero(k: Sequence[int]) -> tuple[EdgeDesc, ...]:
    last_a = sum(k) - 1
    return (EdgeDesc("g1^-1"), EdgeDesc(f"a{last_a}"), EdgeDesc(ONE, ("t^-1", "x^-1"), 1),
            EdgeDesc(ONE, ("x", "t"), 0))


def _gen_t2(k: Sequence[int], m: Sequence[int]) -> FamilyInstance:
    k, m = list(k), list(m)
    _t2_checks(k, m)
    e1 = k[0]
    return _build("T2", {"k": k, "m": m}, "main", _t2_letters(k, m, {}),
                  [f"g{q}" for q in range(2, len(k) + 1)],
                  SubstitutionPattern(m[e1 - 1], "g1", m[e1]), _t2_zero(k))


def _gen_t2r(k: Sequence[int], m: Sequence[int], split: dict) -> FamilyInstance:
    k, m = list(k), list(m)
    split = {int(a): list(v) for a, v in split.items()}
    _t2_checks(k, m)
    starts = {lo for lo, _ in _blocks(k)}
    inner = {a for lo, hi in _blocks(k) for a in range(lo, hi)} - starts
    for a, qs in split.items():
        _need(a in inner, "split positions index inner positive powers", position=a)
        _need(len(qs) >= 1 and all(isinstance(q, int) and q >= 1 for q in qs),
              "split powers are positive", position=a)
    _need(bool(split), "at least one split position")
    e1 = k[0]
    return _build("T2R", {"k": k, "m": m, "split": {str(a): split[a] for a in sorted(split)}}, "main",
                  _t2_letters(k, m, split), [f"g{q}" for q in range(2, len(k) + 1)],
                  SubstitutionPattern(m[e1 - 1], "g1", m[e1]), _t2_zero(k))


_GEN = {"L1": _gen_l1, "L2": _gen_l2, "L3": _gen_l3, "L4": _gen_l4, "T1": _gen_t1, "T2": _gen_t2, "T2R": _gen_t2r}


def gen_family(family: str, params: dict | None = None, **kw) -> FamilyInstance:
    """Generate one instance; raises :class:`FamilyError` naming the failed condition."""
    if family not in _GEN:
        raise FamilyError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
    args = dict(params or {}, **kw)
    try:
        return _GEN[family](**args)
    except TypeError as e:
        raise FamilyError(f"bad parameters for {family}: {e}") from None


# -- named weight assignments ------------------------------------------------

def _matches(p, d: EdgeDesc) -> bool:
    if d.relator is not None and p.relator != d.relator:
        return False
    lab, inv = str(p.label), str(invert(p.label))
    if d.ends is None:
        return d.label in (lab, inv)
    a, b = d.ends
    if (str(p.iota), str(p.tau), lab) == (a, b, d.label):
        return True
    return not d.oriented and (str(p.tau), str(p.iota), inv) == (a, b, d.label)


def paper_weights(inst: FamilyInstance, g: StarGraph | None = None) -> dict[EdgeId, Fraction]:
    """Zero on the instance's named edges, one elsewhere."""
    if inst.zero_edges is None:
        raise FamilyError(f"{inst.family} case '{inst.case}': no published assignment")
    g = build_star_graph(inst.presentation()) if g is None else g
    theta = {p.id: Fraction(1) for p in g.pairs}
    for d in inst.zero_edges:
        hits = [p for p in g.pairs if _matches(p, d)]
        if not hits:
            raise FamilyError(f"{inst.family} {inst.params}: named edge {d} not found")
        if len(hits) > 1:
            raise FamilyError(f"{inst.family} {inst.params}: named edge {d} is ambiguous "
                              f"({', '.join(str(p.id) for p in hits)})")
        theta[hits[0].id] = Fraction(0)
    return theta


# -- sweeps and reports ------------------------------------------------------

def parse_range(text: str) -> list[int]:
    """``"4..8"`` -> [4, 5, 6, 7, 8]; ``"3"`` -> [3]; ``"3,5"`` -> [3, 5]."""
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..", 1)
            out.extend(range(int(lo), int(hi) + 1))
        elif part:
            out.append(int(part))
    return out


def _compositions(n: int, total_max: int, least: int):
    for k in itertools.product(range(least, total_max + 1), repeat=n):
        if sum(k) <= total_max:
            yield list(k)


L2_SAMPLES = [
    ([2, 1, 2, 1], 3), ([3, 2, 1, 2, 1], 4), ([4, 1, 2, 3, 2, 1], 4),      # m_i > m_n
    ([3, 1, 1, 1, 2], 3), ([3, 2, 2, 1, 2], 4), ([4, 1, 2, 3, 2, 5], 4),   # m_i < m_n
    ([3, 1, 1, 2, 1], 3), ([2, 1, 1, 1, 1], 3), ([4, 1, 2, 3, 2, 3], 4),   # m_i = m_n
    ([2, 2, 2, 1, 1], 3), ([2, 2, 1, 1, 2], 3), ([1, 1, 1, 1], 3),         # m_1 = m_{i-1}
]
L4_SAMPLES = [
    ([3, 1, 2, 2, 3, 1], 3, 5), ([3, 1, 2, 2, 3, 1, 1], 3, 5), ([4, 1, 2, 2, 3, 3, 1], 3, 6),
    ([3, 2, 1, 1, 3, 1], 3, 5), ([3, 2, 1, 1, 3, 1, 1], 3, 5), ([3, 1, 2, 1, 2, 1, 3, 1], 4, 7),
]
T2_SAMPLES = [
    ([2, 2], [3, 2, 1, 1]), ([2, 3], [4, 3, 1, 5, 1]), ([3, 2], [5, 4, 3, 1, 1]),
    ([2, 2, 2], [4, 3, 1, 2, 2, 1]),
]
T2R_SAMPLES = [
    ([3, 2], [5, 4, 3, 1, 1], {"2": [1, 2]}), ([2, 3], [4, 3, 1, 5, 1], {"4": [2, 1]}),
    ([3, 3], [5, 4, 3, 1, 2, 1], {"2": [2], "5": [1, 1]}),
]


def default_sweep(families: Iterable[str] = FAMILIES) -> list[tuple[str, dict]]:
    """The standard regression set, in a fixed order."""
    out: list[tuple[str, dict]] = []
    for fam in families:
        if fam == "L1":
            out += [("L1", {"n": n, "i": i}) for n in range(4, 11) for i in range(3, n)]
        elif fam == "L2":
            out += [("L2", {"m": m, "i": i}) for m, i in L2_SAMPLES]
        elif fam == "L3":
            out += [("L3", {"n": n, "i": i, "j": j}) for n in range(6, 9)
                    for i in range(3, n) for j in range(i + 2, n)]
        elif fam == "L4":
            out += [("L4", {"m": m, "i": i, "j": j}) for m, i, j in L4_SAMPLES]
        elif fam == "T1":
            out += [("T1", {"k": k}) for n in (2, 3, 4) for k in _compositions(n, 8, 1)]
        elif fam == "T2":
            out += [("T2", {"k": k, "m": m}) for k, m in T2_SAMPLES]
        elif fam == "T2R":
            out += [("T2R", {"k": k, "m": m, "split": sp}) for k, m, sp in T2R_SAMPLES]
        else:
            raise FamilyError(f"unknown family {fam!r}")
    return out


def load_manifest(path: str) -> list[tuple[str, dict]]:
    """JSON list of ``{"family": ..., "params": {...}}`` objects (extra keys ignored)."""
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, list):
        raise FamilyError("manifest must be a JSON list")
    return [(str(item["family"]), dict(item["params"])) for item in data]


def dump_manifest(items: Sequence[tuple[str, dict]]) -> str:
    rows = []
    for fam, params in items:
        inst = gen_family(fam, params)
        rows.append({"family": fam, "params": params, "case": inst.case, "expected": inst.expected})
    return json.dumps(rows, indent=2, sort_keys=True) + "\n"


@dataclass
class CorpusRow:
    family: str
    params: dict
    case: str
    pairs: int
    named: str          # verdict under the named assignment, or "none"
    w1: str             # W1 sums under the named assignment
    search: str         # search outcome
    round_trip: bool
    ok: bool
    seconds: float | None = None
    error: str = ""

    def cells(self, timing: bool) -> list[str]:
        out = [self.family, json.dumps(self.params, sort_keys=True, separators=(",", ":")), self.case,
               str(self.pairs), self.named, self.w1, self.search,
               "yes" if self.round_trip else "NO", "ok" if self.ok else "FAIL"]
        if timing:
            out.append(f"{self.seconds:.3f}")
        return out


HEADER = ["family", "params", "case", "pairs", "named-weights", "W1", "search", "round-trip", "status"]


def run_one(family: str, params: dict, strategy: str = "auto", cap: int = 100,
            do_search: bool = True) -> CorpusRow:
    start = time.perf_counter()
    try:
        inst = gen_family(family, params)
        p = inst.presentation()
    except (FamilyError, ValueError) as e:
        return CorpusRow(family, params, "-", 0, "-", "-", "-", False, False, time.perf_counter() - start, str(e))
    g = build_star_graph(p)
    back = back_substitute(p, inst.pattern, inst.equation.variable)
    round_trip = back.same_cycle(inst.equation.word) or back.same_cycle(
        Word(tuple(inst.equation.env.rewrite(l) for l in inst.equation.word), True))
    named, w1 = "none", "-"
    certified = False
    if inst.zero_edges is not None:
        try:
            theta = paper_weights(inst, g)
            rep = verify(p, theta, g=g)
            named = rep.overall.value
            w1 = ",".join(fmt_q(r.slack_sum) for r in rep.w1)
            certified = rep.certified
        except FamilyError as e:
            named = f"error: {e}"
    found = "skipped"
    if do_search:
        out = search(p, strategy=strategy, cap=cap)
        found = f"{out.kind.value}({out.strategy})"
        certified = certified or out.found
    return CorpusRow(family, params, inst.case, len(g.pairs), named, w1, found, round_trip,
                     certified and round_trip, time.perf_counter() - start)


def run_corpus(items: Iterable[tuple[str, dict]], strategy: str = "auto", cap: int = 100,
               do_search: bool = True) -> list[CorpusRow]:
    return [run_one(f, p, strategy, cap, do_search) for f, p in items]


def format_report(rows: Sequence[CorpusRow], timing: bool = False) -> str:
    header = HEADER + (["seconds"] if timing else [])
    table = [header] + [r.cells(timing) for r in rows]
    widths = [max(len(row[c]) for row in table) for c in range(len(header))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in table]
    failed = [r for r in rows if not r.ok]
    named_bad = [r for r in rows if r.named not in ("none", "certified")]
    lines.append("")
    lines.append(f"{len(rows)} instances, {len(rows) - len(failed)} certified, {len(failed)} failed, "
                 f"{len(named_bad)} named assignments not certified")
    for r in rows:
        if r.error:
            lines.append(f"error {r.family} {json.dumps(r.params, sort_keys=True)}: {r.error}")
    return "\n".join(lines) + "\n"
