"""Star graph of a relative presentation, plus deterministic DOT export.

For every rotation ``R = S g`` of a relator (or its inverse) that starts with a
variable letter, there is a directed edge from the inverse of the last
variable letter of ``S`` to the first letter of ``S``, labelled by the trailing
coefficient word ``g``.  The edge coming from ``R`` and the one coming from
``R^-1`` at the same corner are reverses of each other; they are stored once
as an :class:`EdgePair` so a weight function is automatically symmetric.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .rewrite import Presentation
from .words import Letter, Word, cyclic_permutations, expand_powers, invert, natural_key, reduce

__all__ = ["Vertex", "EdgeId", "EdgePair", "StarGraph", "build_star_graph", "to_dot", "canonical_form"]

EdgeId = tuple[int, int]  # (relator index, rotation index)


@dataclass(frozen=True)
class Vertex:
    name: str
    sign: int

    @classmethod
    def of(cls, letter: Letter) -> Vertex:
        return cls(letter.name, letter.sign)

    @classmethod
    def parse(cls, text: str) -> Vertex:
        name, _, exp = text.partition("^")
        return cls(name, -1 if exp == "-1" else 1)

    def inverse(self) -> Vertex:
        return Vertex(self.name, -self.sign)

    def sort_key(self):
        return natural_key(self.name), -self.sign

    def __str__(self) -> str:
        return self.name if self.sign > 0 else f"{self.name}^-1"


@dataclass(frozen=True)
class EdgePair:
    """One undirected edge; ``iota -> tau`` with ``label`` is the relator's orientation."""

    id: EdgeId
    iota: Vertex
    tau: Vertex
    label: Word
    inverse_rotation: int  # rotation index of the twin edge in the inverted relator

    @property
    def relator(self) -> int:
        return self.id[0]

    @property
    def rotation(self) -> int:
        return self.id[1]

    @property
    def is_loop(self) -> bool:
        return self.iota == self.tau


@dataclass(frozen=True)
class StarGraph:
    vertices: tuple[Vertex, ...]
    pairs: tuple[EdgePair, ...]
    relator_sizes: tuple[int, ...]

    def pair(self, eid: EdgeId) -> EdgePair:
        return self.pairs[self.index[eid]]

    @property
    def index(self) -> dict[EdgeId, int]:
        idx = self.__dict__.get("_index")
        if idx is None:
            idx = {p.id: k for k, p in enumerate(self.pairs)}
            object.__setattr__(self, "_index", idx)
        return idx

    def relator_edges(self, r: int) -> list[EdgePair]:
        return [p for p in self.pairs if p.relator == r]


def _corner_edges(perms: list[Word]) -> list[tuple[Vertex, Vertex, Word]]:
    edges = []
    for R in perms:
        last = max(k for k, l in enumerate(R) if l.var)
        edges.append((Vertex.of(R[last].inverse()), Vertex.of(R[0]), Word(R.letters[last + 1:])))
    return edges


def build_star_graph(p: Presentation) -> StarGraph:
    if not p.relators:
        raise ValueError("presentation has no relators")
    pairs = []
    sizes = []
    for ri, rel in enumerate(p.relators):
        w = expand_powers(reduce(rel, p.env))
        v = w.variable_count
        if v < 2:
            raise ValueError(f"relator {ri} ({rel}) has {v} variable letter(s); at least 2 needed")
        fwd = _corner_edges(cyclic_permutations(w))
        back = _corner_edges(cyclic_permutations(invert(w)))
        for j, (iota, tau, label) in enumerate(fwd):
            jj = (v - j) % v
            b_iota, b_tau, b_label = back[jj]
            # the R^-1 corner edge is the reverse of the R corner edge
            assert (b_iota, b_tau) == (tau, iota) and b_label == invert(label), (ri, j)
            pairs.append(EdgePair((ri, j), iota, tau, reduce(label, p.env), jj))
        sizes.append(v)
    vertices = sorted({Vertex(n, s) for n in p.variables for s in (1, -1)}, key=Vertex.sort_key)
    return StarGraph(tuple(vertices), tuple(pairs), tuple(sizes))


def canonical_form(g: StarGraph) -> tuple:
    """Rotation-independent summary: sorted (endpoints, label) over both orientations."""
    items = []
    for e in g.pairs:
        a = (str(e.iota), str(e.tau), str(e.label))
        b = (str(e.tau), str(e.iota), str(invert(e.label)))
        items.append(min(a, b))
    return tuple(str(v) for v in g.vertices), tuple(sorted(items))


def _fmt(q: Fraction) -> str:
    return str(q)


def to_dot(g: StarGraph, weights: Mapping[EdgeId, Fraction] | None = None, name: str = "star_graph") -> str:
    lines = [f"graph {name} {{"]
    for v in g.vertices:
        lines.append(f'  "{v}";')
    for e in g.pairs:
        label = str(e.label)
        if weights is not None:
            label += f" w={_fmt(weights[e.id])}"
        lines.append(f'  "{e.iota}" -- "{e.tau}" [label="{label}", id="r{e.relator}e{e.rotation}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
