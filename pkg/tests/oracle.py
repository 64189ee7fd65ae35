"""Brute-force reference for the W2 checker: enumerate closed walks directly.

Labels are reduced with a plain string-token free reduction, separate from the
package's word code.
"""

from __future__ import annotations

import math
from fractions import Fraction


def _tokens(pair, direction, env_eqs):
    toks = []
    for l in pair.label.letters:
        name, exp = l.name, l.exp
        if name in env_eqs:
            dst, e = env_eqs[name]
            name, exp = dst, exp * e
        step = 1 if exp > 0 else -1
        toks.extend([(name, step)] * abs(exp))
    if direction < 0:
        toks = [(n, -s) for n, s in reversed(toks)]
    return toks


def _free(toks):
    out = []
    for t in toks:
        if out and out[-1][0] == t[0] and out[-1][1] == -t[1]:
            out.pop()
        else:
            out.append(t)
    return out


def token_table(graph, env):
    return {(k, d): _tokens(p, d, env.equalities) for k, p in enumerate(graph.pairs) for d in (1, -1)}


def label_tokens(graph, walk, env, table=None):
    table = table or token_table(graph, env)
    toks = []
    for t in walk:
        toks.extend(table[t])
    out = _free(toks)
    while len(out) >= 2 and out[0][0] == out[-1][0] and out[0][1] == -out[-1][1]:
        out = out[1:-1]
    return out


def classify(toks, env):
    if not toks:
        return "trivial"
    names = {n for n, _ in toks}
    signs = {s for _, s in toks}
    if len(names) == 1 and len(signs) == 1 and env.is_nontrivial(next(iter(names))):
        return "power"
    return "unknown"


def _ends(graph, k, d):
    p = graph.pairs[k]
    return (p.iota, p.tau) if d > 0 else (p.tau, p.iota)


def closed_walks(graph, weights, max_len=10, bound=Fraction(2)):
    """Yield every cyclically reduced closed walk of weight < bound, one rotation each."""
    exact = [Fraction(weights[p.id]) for p in graph.pairs]
    scale = math.lcm(*(x.denominator for x in exact), Fraction(bound).denominator)
    w = [int(x * scale) for x in exact]
    bound = int(Fraction(bound) * scale)
    trs = [(k, d) for k in range(len(graph.pairs)) for d in (1, -1)]
    rank = {t: i for i, t in enumerate(trs)}
    vid = {v: i for i, v in enumerate(graph.vertices)}
    head = {t: vid[_ends(graph, *t)[1]] for t in trs}
    leaving = [[t for t in trs if _ends(graph, *t)[0] == v] for v in graph.vertices]
    for first in trs:
        if w[first[0]] >= bound:
            continue
        start = vid[_ends(graph, *first)[0]]
        todo = [([first], w[first[0]])]
        while todo:
            walk, weight = todo.pop()
            last = walk[-1]
            here = head[last]
            if here == start and not (last[0] == first[0] and last[1] == -first[1]):
                yield walk
            if len(walk) == max_len:
                continue
            for t in leaving[here]:
                if rank[t] < rank[first] or (t[0] == last[0] and t[1] == -last[1]):
                    continue
                if weight + w[t[0]] < bound:
                    todo.append((walk + [t], weight + w[t[0]]))


def scan(graph, weights, env, max_len=10):
    """Return (first trivial walk or None, first unknown walk or None)."""
    trivial = unknown = None
    table = token_table(graph, env)
    for walk in closed_walks(graph, weights, max_len):
        c = classify(label_tokens(graph, walk, env, table), env)
        if c == "trivial" and trivial is None:
            trivial = walk
            break
        if c == "unknown" and unknown is None:
            unknown = walk
    return trivial, unknown
