"""Substitution ``x = t^-a g^-1 t^b`` turning an equation into a two-relator presentation.

The equation word is kept as the first relator with every occurrence of the
coefficient ``g`` lifted through the new variable; the defining word
``t^-a g^-1 t^b x^-1`` becomes the second relator.  Both are then checked in
one star graph.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .words import ConstraintEnv, Equation, Letter, Word, expand_powers, invert, reduce

__all__ = [
    "SubstitutionError",
    "SubstitutionPattern",
    "Presentation",
    "Occurrence",
    "occurrences",
    "substitute",
    "back_substitute",
    "is_orientable",
]


class SubstitutionError(ValueError):
    pass


@dataclass(frozen=True)
class SubstitutionPattern:
    left: int
    coefficient: str
    right: int
    new_variable: str = "x"

    def __post_init__(self) -> None:
        if self.left < 1 or self.right < 1:
            raise SubstitutionError(f"substitution powers must be positive, got {self.left}, {self.right}")

    @classmethod
    def parse(cls, text: str) -> SubstitutionPattern:
        """Parse the ``a:g:b:x`` command-line form."""
        m = re.fullmatch(r"\s*(\d+):([A-Za-z_]\w*):(\d+):([A-Za-z_]\w*)\s*", text)
        if not m:
            raise SubstitutionError(f"bad substitution {text!r}, expected a:g:b:x")
        return cls(int(m[1]), m[2], int(m[3]), m[4])

    def __str__(self) -> str:
        return f"{self.left}:{self.coefficient}:{self.right}:{self.new_variable}"

    def defining_word(self, variable: str = "t") -> Word:
        """``t^-a g^-1 t^b``, the word the new variable stands for."""
        return Word((Letter(variable, -self.left, True), Letter(self.coefficient, -1),
                     Letter(variable, self.right, True)))


@dataclass(frozen=True)
class Presentation:
    relators: tuple[Word, ...]
    variables: frozenset[str]
    env: ConstraintEnv

    def __post_init__(self) -> None:
        object.__setattr__(self, "relators", tuple(r.as_cyclic() for r in self.relators))
        object.__setattr__(self, "variables", frozenset(self.variables))
        for k, r in enumerate(self.relators):
            if reduce(r, self.env).letters != r.letters:
                raise ValueError(f"relator {k} ({r}) is not cyclically reduced under the env")
            if r.variable_count < 2:
                raise ValueError(f"relator {k} ({r}) has fewer than 2 variable letters")
            for l in r:
                if l.var and l.name not in self.variables:
                    raise ValueError(f"relator {k} uses undeclared variable {l.name!r}")
                if not l.var and l.name not in self.env.alphabet:
                    raise ValueError(f"relator {k} uses unknown symbol {l.name!r}")

    @classmethod
    def create(cls, relators, variables, env: ConstraintEnv) -> Presentation:
        """Reduce the relators under ``env`` and build the presentation."""
        return cls(tuple(reduce(r.as_cyclic(), env) for r in relators), frozenset(variables), env)


@dataclass(frozen=True)
class Occurrence:
    start: int
    inverse: bool


def _matches_at(word: Word, pat: tuple[Letter, ...], k: int) -> bool:
    n = len(word)
    return all(word[(k + r) % n] == pat[r] for r in range(len(pat)))


def occurrences(word: Word, pattern: SubstitutionPattern, variable: str = "t") -> list[Occurrence]:
    """Exact cyclic occurrences of ``t^-a g^-1 t^b`` (and its inverse) in an expanded word.

    Forward matches are claimed first, scanning from the canonical rotation;
    inverse matches overlapping a claimed one are dropped.  Results are sorted
    by start position in ``word``.
    """
    n = len(word)
    fwd = expand_powers(pattern.defining_word(variable)).letters
    inv = invert(Word(fwd)).letters
    if n == 0 or len(fwd) > n:
        return []
    canon = word.as_cyclic().canonical()
    offset = next(k for k in range(n) if word.rotate(k).letters == canon.letters)
    claimed: set[int] = set()
    found: list[Occurrence] = []
    for pat, is_inv in ((fwd, False), (inv, True)):
        for r in range(n):
            k = (offset + r) % n
            span = {(k + q) % n for q in range(len(pat))}
            if span & claimed or not _matches_at(word, pat, k):
                continue
            claimed |= span
            found.append(Occurrence(k, is_inv))
    return sorted(found, key=lambda o: o.start)


def _overlaps(word: Word, pattern: SubstitutionPattern, variable: str) -> list[tuple[int, int]]:
    n = len(word)
    fwd = expand_powers(pattern.defining_word(variable)).letters
    inv = invert(Word(fwd)).letters
    spans = []
    for pat, is_inv in ((fwd, False), (inv, True)):
        for k in range(n):
            if len(pat) <= n and _matches_at(word, pat, k):
                spans.append((k, {(k + q) % n for q in range(len(pat))}, is_inv))
    return [(a, b) for a, sa, ia in spans for b, sb, ib in spans if not ia and ib and sa & sb]


def _lift(letter: Letter, pattern: SubstitutionPattern, variable: str) -> list[Letter]:
    """``g^-1 = t^a x t^-b`` and ``g = t^b x^-1 t^-a``, applied |exp| times."""
    t, x = variable, pattern.new_variable
    if letter.sign < 0:
        unit = [Letter(t, pattern.left, True), Letter(x, 1, True), Letter(t, -pattern.right, True)]
    else:
        unit = [Letter(t, pattern.right, True), Letter(x, -1, True), Letter(t, -pattern.left, True)]
    return unit * abs(letter.exp)


def substitute(eq: Equation, pattern: SubstitutionPattern) -> Presentation:
    """Rewrite ``eq`` through ``pattern``; returns the two-relator presentation.

    Every letter ``g^{±1}`` of the env-reduced equation word is lifted, not only
    the exact occurrences: a block ``t^-c g^-1 t^d`` with ``c != a`` becomes
    ``t^(a-c) x t^(d-b)``.  At least one exact occurrence is required.
    """
    t, x, g = eq.variable, pattern.new_variable, pattern.coefficient
    if x == t or x in eq.env.alphabet:
        raise SubstitutionError(f"new variable {x!r} clashes with an existing name")
    if g not in eq.env.alphabet:
        raise SubstitutionError(f"unknown coefficient {g!r}")
    word = reduce(eq.word, eq.env)
    expanded = expand_powers(word)
    if not occurrences(expanded, pattern, t):
        raise SubstitutionError(f"pattern {pattern.defining_word(t)} does not occur in {word}")
    bad = _overlaps(expanded, pattern, t)
    if bad:
        raise SubstitutionError(f"forward and inverse occurrences overlap at positions {bad}")
    lifted: list[Letter] = []
    for l in word:
        lifted.extend(_lift(l, pattern, t) if not l.var and l.name == g else [l])
    r1 = reduce(Word(tuple(lifted), True), eq.env)
    r2 = Word(pattern.defining_word(t).letters + (Letter(x, -1, True),), True)
    try:
        return Presentation((r1, r2), frozenset({t, x}), eq.env)
    except ValueError as e:
        raise SubstitutionError(f"substitution yields an unusable presentation: {e}") from None


def back_substitute(p: Presentation, pattern: SubstitutionPattern, variable: str = "t") -> Word:
    """Replace the new variable in relator 0 by its defining word and reduce."""
    x = pattern.new_variable
    d = pattern.defining_word(variable)
    out: list[Letter] = []
    for l in p.relators[0]:
        if l.var and l.name == x:
            piece = d if l.exp > 0 else invert(d)
            out.extend(piece.letters * abs(l.exp))
        else:
            out.append(l)
    return reduce(Word(tuple(out), True), p.env)


def is_orientable(p: Presentation) -> bool:
    """No relator is a cyclic permutation of its own inverse."""
    return not any(reduce(invert(r), p.env).same_cycle(r) for r in p.relators)
