"""Condition W2: closed walks of weight below 2 must carry a non-identity label.

The check is symbolic and sound for every torsion-free coefficient group.
The zero-weight subgraph is split into components; each component may have
cycle rank at most 1, and its basis cycle must be labelled by a power of a
nontrivial symbol.  Every walk that uses positive-weight edges then has the
shape ``e_1 p_1 e_2 p_2 ... e_k p_k`` where the ``e_i`` are positive edges of
total weight < 2 (a *skeleton*) and each ``p_i`` is a reduced zero path,
i.e. a tree path wound ``m_i`` times around its component's cycle.  The label
of the whole family is computed with symbolic exponents in the ``m_i``; a
family collapsing to ``s^(j + sum k_i m_i)`` is decided exactly.  Anything
outside that fragment is reported as inconclusive, never guessed.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterator, Mapping

from .labels import LabelClass, LabelKind, classify_label
from .stargraph import EdgeId, StarGraph, Vertex
from .words import ConstraintEnv, Letter, Word, invert, reduce

__all__ = [
    "W2Verdict",
    "CycleWitness",
    "W2Result",
    "check_w2",
    "walk_label",
    "walk_weight",
    "is_closed_walk",
    "is_cyclically_reduced",
    "search_trivial_walk",
]

TWO = Fraction(2)
Traversal = tuple[int, int]  # (pair index, +1 along iota->tau, -1 against)


class W2Verdict(enum.Enum):
    PASS = "pass"
    REFUTED = "refuted"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class CycleWitness:
    walk: tuple[tuple[EdgeId, int], ...]
    weight: Fraction
    label: Word
    label_class: LabelClass
    reason: str

    def edge_counts(self) -> dict[EdgeId, int]:
        counts: dict[EdgeId, int] = {}
        for eid, _ in self.walk:
            counts[eid] = counts.get(eid, 0) + 1
        return counts


@dataclass
class W2Result:
    verdict: W2Verdict
    witnesses: list[CycleWitness] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.verdict is W2Verdict.PASS


# -- walks -------------------------------------------------------------------

def _ends(g: StarGraph, tr: Traversal) -> tuple[Vertex, Vertex]:
    p = g.pairs[tr[0]]
    return (p.iota, p.tau) if tr[1] > 0 else (p.tau, p.iota)


def _tr_label(g: StarGraph, tr: Traversal) -> tuple[Letter, ...]:
    lab = g.pairs[tr[0]].label
    return lab.letters if tr[1] > 0 else invert(lab).letters


def walk_label(g: StarGraph, walk, env: ConstraintEnv) -> Word:
    """Env-reduced cyclic label of a closed walk given as (pair index, direction)."""
    letters: list[Letter] = []
    for tr in walk:
        letters.extend(_tr_label(g, tr))
    return reduce(Word(tuple(letters), True), env)


def walk_weight(g: StarGraph, walk, theta: Mapping[EdgeId, Fraction]) -> Fraction:
    return sum((Fraction(theta[g.pairs[e].id]) for e, _ in walk), Fraction(0))


def is_closed_walk(g: StarGraph, walk) -> bool:
    if not walk:
        return False
    return all(_ends(g, a)[1] == _ends(g, b)[0] for a, b in zip(walk, walk[1:] + walk[:1]))


def is_cyclically_reduced(walk) -> bool:
    return all(not (a[0] == b[0] and a[1] == -b[1]) for a, b in zip(walk, walk[1:] + walk[:1]))


def _reverse(walk) -> list[Traversal]:
    return [(e, -d) for e, d in reversed(walk)]


def _reduce_walk(walk) -> list[Traversal]:
    out: list[Traversal] = []
    for tr in walk:
        if out and out[-1][0] == tr[0] and out[-1][1] == -tr[1]:
            out.pop()
        else:
            out.append(tr)
    return out


def _cyclic_reduce_walk(walk) -> list[Traversal]:
    out = _reduce_walk(walk)
    while len(out) >= 2 and out[0][0] == out[-1][0] and out[0][1] == -out[-1][1]:
        out.pop()
        out.pop(0)
    return out


# -- zero-weight components --------------------------------------------------

@dataclass
class _Component:
    root: Vertex
    vertices: list[Vertex]
    chords: list[int]
    cycle: list[Traversal] = field(default_factory=list)   # basis cycle at root (rank 1)
    cycle_label: tuple[Letter, ...] = ()
    conj: tuple[Letter, ...] | None = None                  # cycle label = conj s^k conj^-1
    power: Letter | None = None

    @property
    def rank(self) -> int:
        return len(self.chords)


class _Zero:
    def __init__(self, g: StarGraph, w: list[Fraction], env: ConstraintEnv):
        self.g = g
        self.env = env
        adj: dict[Vertex, list[Traversal]] = {v: [] for v in g.vertices}
        zero = [k for k, x in enumerate(w) if x == 0]
        for k in zero:
            p = g.pairs[k]
            adj[p.iota].append((k, 1))
            adj[p.tau].append((k, -1))
        self.comp_of: dict[Vertex, int] = {}
        self.path: dict[Vertex, list[Traversal]] = {}
        self.comps: list[_Component] = []
        tree: set[int] = set()
        for root in g.vertices:
            if root in self.comp_of:
                continue
            ci = len(self.comps)
            self.comp_of[root] = ci
            self.path[root] = []
            order = [root]
            queue = [root]
            while queue:
                u = queue.pop(0)
                for tr in adj[u]:
                    v = _ends(g, tr)[1]
                    if v not in self.comp_of:
                        self.comp_of[v] = ci
                        self.path[v] = self.path[u] + [tr]
                        tree.add(tr[0])
                        order.append(v)
                        queue.append(v)
            chords = sorted({k for u in order for k, _ in adj[u]} - tree)
            self.comps.append(_Component(root, order, chords))
        for c in self.comps:
            if c.rank == 1:
                k = c.chords[0]
                p = g.pairs[k]
                c.cycle = _reduce_walk(self.path[p.iota] + [(k, 1)] + _reverse(self.path[p.tau]))
                c.cycle_label = self.label_of(c.cycle)
                n = len(c.cycle_label)
                q = n // 2
                if n % 2 and all(c.cycle_label[i] == c.cycle_label[n - 1 - i].inverse() for i in range(q)):
                    c.conj = c.cycle_label[:q]
                    c.power = c.cycle_label[q]

    def label_of(self, walk) -> tuple[Letter, ...]:
        letters: list[Letter] = []
        for tr in walk:
            letters.extend(_tr_label(self.g, tr))
        return reduce(Word(tuple(letters)), self.env).letters

    def comp(self, v: Vertex) -> _Component:
        return self.comps[self.comp_of[v]]


# -- symbolic labels ---------------------------------------------------------

# a symbolic letter: (name, (const, c_0, ..., c_{r-1})); exponent = const + sum c_i m_i
SymLetter = tuple[str, tuple[int, ...]]


def _sym_reduce(letters: list[SymLetter]) -> list[SymLetter]:
    out: list[SymLetter] = []
    for name, form in letters:
        if out and out[-1][0] == name:
            merged = tuple(a + b for a, b in zip(out[-1][1], form))
            out.pop()
            if any(merged):
                out.append((name, merged))
        elif any(form):
            out.append((name, form))
    while len(out) >= 2 and out[0][0] == out[-1][0]:
        name, form = out.pop()
        merged = tuple(a + b for a, b in zip(out[0][1], form))
        if any(merged):
            out[0] = (name, merged)
        else:
            out.pop(0)
    return out


def _vectors(r: int, norm: int) -> Iterator[tuple[int, ...]]:
    """All integer r-vectors with L1 norm exactly ``norm``, in a fixed order."""
    if r == 0:
        if norm == 0:
            yield ()
        return
    for a in range(norm + 1):
        for rest in _vectors(r - 1, norm - a):
            if a == 0:
                yield (0,) + rest
            else:
                yield (a,) + rest
                yield (-a,) + rest


def _zero_solvable(j: int, ks: tuple[int, ...], nonzero: set[int]) -> bool:
    """Is ``j + sum k_i m_i = 0`` solvable in integers with m_i != 0 for i in ``nonzero``?"""
    live = [i for i, k in enumerate(ks) if k]
    if not live:
        return j == 0
    if len(live) == 1:
        k = ks[live[0]]
        if j % k:
            return False
        return not (live[0] in nonzero and j == 0)
    # the solution lattice has positive dimension, so it avoids the coordinate hyperplanes
    return j % gcd(*(ks[i] for i in live)) == 0


def _solve_linear(j: int, ks: tuple[int, ...], nonzero: set[int], max_tests: int = 50_000):
    """A small integer solution of ``j + sum k_i m_i = 0`` respecting ``nonzero``, or None."""
    m = [1 if i in nonzero else 0 for i in range(len(ks))]
    live = [i for i, k in enumerate(ks) if k]
    if not live:
        return tuple(m) if j == 0 else None
    if len(live) == 1:
        k = ks[live[0]]
        if j % k or (j == 0 and live[0] in nonzero):
            return None
        m[live[0]] = -j // k
        return tuple(m)
    bound = abs(j) + sum(abs(k) for k in ks) + 2
    tests = 0
    for norm in range(bound + 1):
        for v in _vectors(len(live), norm):
            if any(i in nonzero and not x for i, x in zip(live, v)):
                continue
            if j + sum(ks[i] * x for i, x in zip(live, v)) == 0:
                for i, x in zip(live, v):
                    m[i] = x
                return tuple(m)
            tests += 1
            if tests >= max_tests:
                return None
    return None


# -- the check ---------------------------------------------------------------

class _Checker:
    def __init__(self, g: StarGraph, theta: Mapping[EdgeId, Fraction], env: ConstraintEnv,
                 max_witnesses: int | None, refine: bool, budget: int):
        self.g = g
        self.env = env
        self.theta = theta
        self.w = [Fraction(theta[p.id]) for p in g.pairs]
        self.max_witnesses = max_witnesses
        self.refine = refine
        self.budget = budget
        self.zero = _Zero(g, self.w, env)
        self.witnesses: list[CycleWitness] = []
        self.refuted = False
        self.notes: list[str] = []

    def stop(self) -> bool:
        return self.max_witnesses is not None and len(self.witnesses) >= self.max_witnesses

    def witness(self, walk, reason: str) -> CycleWitness:
        walk = list(walk)
        assert is_closed_walk(self.g, walk) and is_cyclically_reduced(walk), walk
        label = walk_label(self.g, walk, self.env)
        cls = classify_label(label, self.env)
        wit = CycleWitness(tuple((self.g.pairs[e].id, d) for e, d in walk),
                           sum((self.w[e] for e, _ in walk), Fraction(0)), label, cls, reason)
        if cls.kind is LabelKind.TRIVIAL:
            self.refuted = True
        if all(w.walk != wit.walk for w in self.witnesses):
            self.witnesses.append(wit)
        return wit

    # zero-weight closed walks
    def check_components(self) -> None:
        z = self.zero
        for c in z.comps:
            if self.stop():
                return
            if c.rank == 1:
                cls = classify_label(Word(c.cycle_label, True), self.env)
                if cls.kind is not LabelKind.POWER:
                    self.witness(_cyclic_reduce_walk(c.cycle),
                                 f"zero-weight cycle at {c.root} has {cls.kind.value} label")
            elif c.rank >= 2:
                self.check_high_rank(c)

    def check_high_rank(self, c: _Component) -> None:
        z = self.zero
        cycles = []
        for k in c.chords:
            p = self.g.pairs[k]
            cycles.append(_reduce_walk(z.path[p.iota] + [(k, 1)] + _reverse(z.path[p.tau])))
        candidates = [cyc for cyc in cycles]
        for a, b in itertools.combinations(cycles, 2):
            for sb in (b, _reverse(b)):
                candidates.append(_reduce_walk(a + sb))
        for walk in candidates:
            walk = _cyclic_reduce_walk(walk)
            if walk and classify_label(walk_label(self.g, walk, self.env), self.env).kind is LabelKind.TRIVIAL:
                self.witness(walk, f"zero-weight component at {c.root} has a trivially labelled cycle")
                return
        # the commutator has zero exponent sums, so its label is never a nonzero power
        comm = cycles[0] + cycles[1] + _reverse(cycles[0]) + _reverse(cycles[1])
        self.witness(_cyclic_reduce_walk(comm),
                     f"zero-weight component at {c.root} has cycle rank {c.rank} > 1")

    # walks through positive edges
    def check_skeletons(self) -> None:
        g, z = self.g, self.zero
        pos = [(k, d) for k, x in enumerate(self.w) if 0 < x < TWO for d in (1, -1)]
        if not pos:
            return
        # integer weights: scale by the common denominator
        scale = 1
        for x in self.w:
            scale = scale * x.denominator // gcd(scale, x.denominator)
        iw = [int(x * scale) for x in self.w]
        bound = 2 * scale
        comp_of = {tr: (z.comp_of[_ends(g, tr)[0]], z.comp_of[_ends(g, tr)[1]]) for tr in pos}
        by_comp: dict[int, list[Traversal]] = {}
        for tr in pos:
            by_comp.setdefault(comp_of[tr][0], []).append(tr)
        # cheapest positive route between components, a lower bound for closing a skeleton
        nc = len(z.comps)
        inf = bound
        dist = [[0 if a == b else inf for b in range(nc)] for a in range(nc)]
        for tr in pos:
            a, b = comp_of[tr]
            dist[a][b] = min(dist[a][b], iw[tr[0]]) if a != b else 0
        for k in range(nc):
            for a in range(nc):
                for b in range(nc):
                    if dist[a][k] + dist[k][b] < dist[a][b]:
                        dist[a][b] = dist[a][k] + dist[k][b]
        order = {tr: i for i, tr in enumerate(pos)}
        count = 0

        def extend(seq: list[Traversal], weight: int, start: int) -> bool:
            nonlocal count
            if self.stop():
                return False
            count += 1
            if count > self.budget:
                return False
            end_comp = comp_of[seq[-1]][1]
            if end_comp == start:
                self.evaluate(seq)
            first = order[seq[0]]
            for tr in by_comp.get(end_comp, ()):
                nw = weight + iw[tr[0]]
                if order[tr] >= first and nw + dist[comp_of[tr][1]][start] < bound:
                    seq.append(tr)
                    ok = extend(seq, nw, start)
                    seq.pop()
                    if not ok:
                        return False
            return True

        for tr in pos:
            start = comp_of[tr][0]
            if iw[tr[0]] + dist[comp_of[tr][1]][start] < bound and not extend([tr], iw[tr[0]], start):
                break
        if count > self.budget:
            self.notes.append(f"skeleton budget {self.budget} exhausted")
            self.budget_hit = True

    def scan_walks(self, max_len: int, nodes: int) -> None:
        for walk, label in _light_walks(self.g, self.theta, self.env, max_len, TWO, nodes):
            if not _power_tokens(label, self.env):
                self.witness(walk, "light walk found by bounded search")
                if self.stop():
                    return

    def evaluate(self, seq: list[Traversal]) -> None:
        g, z = self.g, self.zero
        k = len(seq)
        params: list[int] = []        # junction index per parameter
        nonzero: set[int] = set()
        junctions = []
        for i, tr in enumerate(seq):
            nxt = seq[(i + 1) % k]
            a, b = _ends(g, tr)[1], _ends(g, nxt)[0]
            comp = z.comp(a)
            if comp.rank >= 2 or (comp.rank == 1 and comp.power is None):
                return  # already reported by the component check
            backtrack = a == b and nxt[0] == tr[0] and nxt[1] == -tr[1]
            if comp.rank == 0:
                if backtrack:
                    return  # only the non-reduced walk e e^-1 has this skeleton
                junctions.append((tr, a, b, comp, None))
            else:
                pi = len(params)
                params.append(i)
                if backtrack:
                    nonzero.add(pi)
                junctions.append((tr, a, b, comp, pi))
        r = len(params)
        const = (0,) * (r + 1)
        sym: list[SymLetter] = []

        def put(letters, form=None):
            for l in letters:
                f = form if form is not None else (l.exp,) + (0,) * r
                sym.append((l.name, f if form is None else tuple(l.exp * x for x in form)))

        for tr, a, b, comp, pi in junctions:
            put(_tr_label(g, tr))
            put(invert(Word(tuple(z.label_of(z.path[a])))).letters)
            if pi is not None:
                put(comp.conj)
                s = comp.power
                form = [0] * (r + 1)
                form[1 + pi] = s.exp
                sym.append((s.name, tuple(form)))
                put(invert(Word(comp.conj)).letters)
            put(z.label_of(z.path[b]))
        del const
        red = _sym_reduce(sym)
        base = tuple(1 if i in nonzero else 0 for i in range(r))
        if not red:
            self.witness(self.walk(junctions, base), "positive-edge family is identically trivial")
            return
        if len(red) == 1:
            name, form = red[0]
            j, ks = form[0], form[1:]
            if _zero_solvable(j, ks, nonzero):
                m = _solve_linear(j, ks, nonzero)
                if m is None:
                    self.notes.append(f"trivial member exists for family {seq} but none found in search box")
                    self.witness(self.walk(junctions, base), "family has a trivial member (not located)")
                else:
                    self.witness(self.walk(junctions, m), "family member has trivial label")
            elif not self.env.is_nontrivial(name):
                self.witness(self.walk(junctions, base), f"family labels are powers of {name}, not known nontrivial")
            return
        # several letters survive: look for a trivial member, otherwise inconclusive
        # a trivial word has zero exponent sum in every symbol
        totals: dict[str, list[int]] = {}
        for name, form in red:
            acc = totals.setdefault(name, [0] * (r + 1))
            for q, v in enumerate(form):
                acc[q] += v

        def trivial_at(m):
            if any(f[0] + sum(a * b for a, b in zip(f[1:], m)) for f in totals.values()):
                return False
            lets = []
            for name, form in red:
                e = form[0] + sum(a * b for a, b in zip(form[1:], m))
                if e:
                    lets.append(Letter(name, e))
            return not reduce(Word(tuple(lets), True), self.env)

        m = None
        if r and self.refine and all(any(f[1:]) or f[0] == 0 for f in totals.values()):
            m = self.find(r, nonzero, trivial_at, limit=6, max_tests=5000)
        if m is not None:
            self.witness(self.walk(junctions, m), "family member has trivial label")
            return

        def mixed_at(m):
            lets = [Letter(name, e) for name, form in red
                    if (e := form[0] + sum(a * b for a, b in zip(form[1:], m)))]
            return classify_label(Word(tuple(lets), True), self.env).kind is not LabelKind.POWER

        m = self.find(r, nonzero, mixed_at, limit=4, max_tests=500) or base
        self.witness(self.walk(junctions, m), "family labels mix several symbols")

    @staticmethod
    def find(r: int, nonzero: set[int], pred, limit: int = 40, max_tests: int = 200_000):
        tests = 0
        for norm in range(limit + 1):
            for m in _vectors(r, norm):
                if all(m[i] for i in nonzero):
                    if pred(m):
                        return m
                    tests += 1
                    if tests >= max_tests:
                        return None
        return None

    def walk(self, junctions, m) -> list[Traversal]:
        z = self.zero
        out: list[Traversal] = []
        for tr, a, b, comp, pi in junctions:
            out.append(tr)
            seg = _reverse(z.path[a])
            if pi is not None and m[pi]:
                cyc = comp.cycle if m[pi] > 0 else _reverse(comp.cycle)
                seg += cyc * abs(m[pi])
            seg += z.path[b]
            out.extend(_reduce_walk(seg))
        return out


QUICK_NODES = 20_000


def _power_tokens(label: tuple, env: ConstraintEnv) -> bool:
    """Whether a freely reduced unit-token label is, cyclically, a nonzero power of a nontrivial symbol."""
    lo, hi = 0, len(label)
    while hi - lo >= 2 and label[lo][0] == label[hi - 1][0] and label[lo][1] == -label[hi - 1][1]:
        lo, hi = lo + 1, hi - 1
    core = set(label[lo:hi])
    return len(core) == 1 and env.is_nontrivial(next(iter(core))[0])


def _unit_tokens(g: StarGraph, env: ConstraintEnv, tr: Traversal) -> tuple[tuple[str, int], ...]:
    out = []
    for l in _tr_label(g, tr):
        l = env.rewrite(l)
        out.extend([(l.name, l.sign)] * abs(l.exp))
    return tuple(out)


def _light_walks(g: StarGraph, theta: Mapping[EdgeId, Fraction], env: ConstraintEnv, max_len: int,
                 bound: Fraction, node_budget: int):
    """Closed cyclically reduced walks of weight < ``bound``, one rotation each, by DFS.

    Yields ``(walk, tokens)`` where ``tokens`` is the freely reduced label as
    unit letters, maintained incrementally; it is empty iff the label is trivial.
    """
    w = [Fraction(theta[p.id]) for p in g.pairs]
    scale = 1
    for x in w:
        scale = scale * x.denominator // gcd(scale, x.denominator)
    iw = [int(x * scale) for x in w]
    ibound = Fraction(bound) * scale
    if ibound.denominator == 1:
        ibound = int(ibound)  # keep the inner loop on plain integers
    trs = [(k, d) for k in range(len(g.pairs)) if iw[k] < ibound for d in (1, -1)]
    index = {tr: i for i, tr in enumerate(trs)}
    toks = {tr: _unit_tokens(g, env, tr) for tr in trs}
    vid = {v: i for i, v in enumerate(g.vertices)}
    out: list[list[Traversal]] = [[] for _ in g.vertices]
    for tr in trs:
        out[vid[_ends(g, tr)[0]]].append(tr)
    ends = {tr: vid[_ends(g, tr)[1]] for tr in trs}

    def push(stack: tuple, add: tuple) -> tuple:
        s = list(stack)
        for t in add:
            if s and s[-1][0] == t[0] and s[-1][1] == -t[1]:
                s.pop()
            else:
                s.append(t)
        return tuple(s)

    nodes = 0
    for first in trs:
        start = vid[_ends(g, first)[0]]
        fi = index[first]
        stack = [([first], iw[first[0]], toks[first])]
        while stack:
            walk, weight, label = stack.pop()
            nodes += 1
            if nodes > node_budget:
                return
            last = walk[-1]
            here = ends[last]
            if here == start and not (first[0] == last[0] and first[1] == -last[1]):
                yield walk, label
            if len(walk) >= max_len:
                continue
            for tr in reversed(out[here]):
                if index[tr] < fi or (tr[0] == last[0] and tr[1] == -last[1]):
                    continue
                nw = weight + iw[tr[0]]
                if nw < ibound:
                    stack.append((walk + [tr], nw, push(label, toks[tr])))


def search_trivial_walk(g: StarGraph, theta: Mapping[EdgeId, Fraction], env: ConstraintEnv,
                        max_len: int = 10, bound: Fraction = TWO, node_budget: int = 2_000_000):
    """Depth-first search for a closed reduced walk of weight < ``bound`` with trivial label."""
    for walk, label in _light_walks(g, theta, env, max_len, bound, node_budget):
        if not label:
            return walk
    return None


def check_w2(g: StarGraph, theta: Mapping[EdgeId, Fraction], env: ConstraintEnv, *,
             exhaustive: bool = True, max_witnesses: int | None = None, refute_len: int = 10,
             budget: int = 200_000) -> W2Result:
    """Decide W2 soundly; weights must already be non-negative.

    ``exhaustive=False`` is the fast mode used inside the searches: it stops
    after ``max_witnesses`` (default 1) witnesses and never tries to upgrade
    an inconclusive witness to a refutation.
    """
    if not exhaustive and max_witnesses is None:
        max_witnesses = 1
    ch = _Checker(g, theta, env, max_witnesses, exhaustive, budget)
    ch.budget_hit = False
    ch.check_components()
    if not exhaustive and not ch.witnesses:
        # cheap first pass: short light walks whose label is not a power are genuine witnesses
        ch.scan_walks(refute_len or 10, QUICK_NODES)
    if not ch.stop() and not (not exhaustive and ch.witnesses):
        ch.check_skeletons()
    if ch.budget_hit and not ch.witnesses:
        ch.scan_walks(refute_len or 10, budget)
        if not ch.witnesses:
            return W2Result(W2Verdict.INCONCLUSIVE, [], ch.notes)
    if not ch.witnesses:
        return W2Result(W2Verdict.PASS, [], ch.notes)
    if not ch.refuted and exhaustive and refute_len > 0:
        walk = search_trivial_walk(g, theta, env, refute_len)
        if walk is not None:
            ch.witness(walk, "bounded search found a trivially labelled walk")
    verdict = W2Verdict.REFUTED if ch.refuted else W2Verdict.INCONCLUSIVE
    wits = sorted(ch.witnesses, key=lambda wt: (wt.label_class.kind is not LabelKind.TRIVIAL, len(wt.walk)))
    return W2Result(verdict, wits, ch.notes)
