"""Words over a mixed alphabet of variables and coefficient symbols.

A word is a tuple of :class:`Letter` objects.  Variable letters (``t``, ``x``)
stand for the unknowns of a relative presentation; coefficient letters
(``g1``, ``a3``) stand for generic elements of the coefficient group ``G``.
Nothing is known about ``G`` except what a :class:`ConstraintEnv` records:
one-step equalities ``g3 = g1^-1`` and a set of symbols known to be
non-identity.  ``G`` is always assumed torsion-free.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

__all__ = [
    "Letter",
    "Word",
    "ConstraintEnv",
    "Equation",
    "Violation",
    "EnvError",
    "ShapeError",
    "reduce",
    "free_reduce",
    "invert",
    "expand_powers",
    "cyclic_permutations",
    "validate_shape",
    "natural_key",
]

NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


def natural_key(name: str) -> tuple:
    """Sort key putting ``g2`` before ``g10``."""
    return tuple(int(p) if p.isdigit() else p for p in re.split(r"(\d+)", name))


class EnvError(ValueError):
    """Inconsistent or ill-formed constraint environment."""


class ShapeError(ValueError):
    """An equation violates the shape rules for equations over G."""

    def __init__(self, violation: "Violation"):
        super().__init__(violation.message)
        self.violation = violation


@dataclass(frozen=True, order=True)
class Letter:
    name: str
    exp: int
    var: bool = False

    def __post_init__(self) -> None:
        if self.exp == 0:
            raise ValueError(f"letter {self.name!r} has exponent 0")
        if not NAME_RE.match(self.name):
            raise ValueError(f"bad symbol name {self.name!r}")

    def inverse(self) -> Letter:
        return Letter(self.name, -self.exp, self.var)

    def with_exp(self, exp: int) -> Letter:
        return Letter(self.name, exp, self.var)

    @property
    def sign(self) -> int:
        return 1 if self.exp > 0 else -1

    def __str__(self) -> str:
        return self.name if self.exp == 1 else f"{self.name}^{self.exp}"


@dataclass(frozen=True)
class Word:
    """A finite sequence of letters; ``cyclic`` marks relators and cycle labels."""

    letters: tuple[Letter, ...] = ()
    cyclic: bool = False

    def __post_init__(self) -> None:
        if not isinstance(self.letters, tuple):
            object.__setattr__(self, "letters", tuple(self.letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __str__(self) -> str:
        return " ".join(map(str, self.letters)) if self.letters else "1"

    def __mul__(self, other: Word) -> Word:
        return Word(self.letters + other.letters, self.cyclic)

    def as_cyclic(self, cyclic: bool = True) -> Word:
        return Word(self.letters, cyclic)

    @property
    def variable_letters(self) -> tuple[Letter, ...]:
        return tuple(l for l in self.letters if l.var)

    @property
    def variable_count(self) -> int:
        """Number of variable letters once powers are expanded."""
        return sum(abs(l.exp) for l in self.letters if l.var)

    @property
    def symbols(self) -> set[str]:
        return {l.name for l in self.letters if not l.var}

    def rotate(self, k: int) -> Word:
        if not self.letters:
            return self
        k %= len(self.letters)
        return Word(self.letters[k:] + self.letters[:k], self.cyclic)

    def canonical(self) -> Word:
        """Lexicographically least rotation (identity for non-cyclic words)."""
        if not self.cyclic or not self.letters:
            return self
        best = min(range(len(self.letters)), key=lambda k: self.letters[k:] + self.letters[:k])
        return self.rotate(best)

    def same_cycle(self, other: Word) -> bool:
        return len(self) == len(other) and self.as_cyclic().canonical().letters == other.as_cyclic().canonical().letters


@dataclass(frozen=True)
class ConstraintEnv:
    """What is known about the coefficient group.

    ``equalities`` maps a symbol to ``(target, ±1)``; targets may not themselves
    be rewritten, so one pass of substitution is enough.  ``nontrivial`` is
    closed under equalities on construction: if ``g3 = g1^-1`` and ``g3`` is
    nontrivial then so is ``g1``.
    """

    alphabet: frozenset[str] = frozenset()
    equalities: Mapping[str, tuple[str, int]] = field(default_factory=dict, hash=False)
    nontrivial: frozenset[str] = frozenset()

    def __post_init__(self) -> None:
        alphabet = frozenset(self.alphabet)
        eqs = dict(self.equalities)
        nontrivial = set(self.nontrivial)
        for name in alphabet:
            if not NAME_RE.match(name):
                raise EnvError(f"bad symbol name {name!r}")
        for src, (dst, e) in eqs.items():
            for s in (src, dst):
                if s not in alphabet:
                    raise EnvError(f"unknown symbol {s!r} in equality {src} = {dst}^{e}")
            if e not in (1, -1):
                raise EnvError(f"equality {src} = {dst}^{e}: exponent must be 1 or -1")
            if dst in eqs:
                raise EnvError(f"equality cycle: {src} -> {dst} -> {eqs[dst][0]}")
        for s in nontrivial:
            if s not in alphabet:
                raise EnvError(f"unknown symbol {s!r} in nontrivial facts")
        for src, (dst, _) in eqs.items():
            if src in nontrivial:
                nontrivial.add(dst)
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "equalities", eqs)
        object.__setattr__(self, "nontrivial", frozenset(nontrivial))

    def rewrite(self, letter: Letter) -> Letter:
        if letter.var or letter.name not in self.equalities:
            return letter
        dst, e = self.equalities[letter.name]
        return Letter(dst, e * letter.exp)

    def is_nontrivial(self, name: str) -> bool:
        if name in self.nontrivial:
            return True
        if name in self.equalities:
            return self.equalities[name][0] in self.nontrivial
        return False

    def with_alphabet(self, extra: Iterable[str]) -> ConstraintEnv:
        return ConstraintEnv(self.alphabet | frozenset(extra), self.equalities, self.nontrivial)

    def with_nontrivial(self, extra: Iterable[str]) -> ConstraintEnv:
        return ConstraintEnv(self.alphabet, self.equalities, self.nontrivial | frozenset(extra))

    def without_nontrivial(self, drop: Iterable[str]) -> ConstraintEnv:
        """Drop facts (closure may re-derive a dropped equality target)."""
        return ConstraintEnv(self.alphabet, self.equalities, self.nontrivial - frozenset(drop))


def free_reduce(letters: Iterable[Letter]) -> list[Letter]:
    out: list[Letter] = []
    for l in letters:
        if out and out[-1].name == l.name and out[-1].var == l.var:
            e = out[-1].exp + l.exp
            if e:
                out[-1] = l.with_exp(e)
            else:
                out.pop()
        else:
            out.append(l)
    return out


def _cyclic_reduce(out: list[Letter]) -> list[Letter]:
    # conjugate: the trailing letter is folded into the leading one
    while len(out) >= 2 and out[0].name == out[-1].name and out[0].var == out[-1].var:
        last = out.pop()
        e = out[0].exp + last.exp
        if e:
            out[0] = last.with_exp(e)
        else:
            out.pop(0)
    return out


def reduce(word: Word, env: ConstraintEnv | None = None) -> Word:
    """Apply env equalities, then free (and, for cyclic words, cyclic) reduction."""
    letters = word.letters
    if env is not None and env.equalities:
        letters = [env.rewrite(l) for l in letters]
    out = free_reduce(letters)
    if word.cyclic:
        out = _cyclic_reduce(out)
    return Word(tuple(out), word.cyclic)


def invert(word: Word) -> Word:
    return Word(tuple(l.inverse() for l in reversed(word.letters)), word.cyclic)


def expand_powers(word: Word) -> Word:
    """Split every variable power ``t^m`` into ``|m|`` unit letters."""
    out: list[Letter] = []
    for l in word.letters:
        if l.var and abs(l.exp) > 1:
            out.extend([l.with_exp(l.sign)] * abs(l.exp))
        else:
            out.append(l)
    return Word(tuple(out), word.cyclic)


def cyclic_permutations(word: Word) -> list[Word]:
    """Rotations of an expanded cyclic word that begin with a variable letter."""
    starts = [k for k, l in enumerate(word.letters) if l.var]
    if not starts:
        raise ValueError(f"word {word} has no variable letter")
    return [word.rotate(k).as_cyclic() for k in starts]


@dataclass(frozen=True)
class Equation:
    word: Word
    env: ConstraintEnv
    variable: str = "t"

    @classmethod
    def create(cls, word: Word, env: ConstraintEnv, variable: str = "t", *,
               forbid_negative_blocks: bool = True) -> Equation:
        """Build an equation and enforce the shape rules; raises :class:`ShapeError`."""
        eq = cls(word.as_cyclic(), env, variable)
        violation = validate_shape(eq, forbid_negative_blocks)
        if violation is not None:
            raise ShapeError(violation)
        return eq


@dataclass(frozen=True)
class Violation:
    kind: str  # "no-variable" | "trivial-coefficient" | "negative-block"
    position: int
    message: str


def _segments(word: Word) -> list[tuple[int, int, tuple[int, ...]]]:
    """Cyclic coefficient segments as (prev var pos, next var pos, coefficient positions)."""
    n = len(word)
    vpos = [k for k, l in enumerate(word.letters) if l.var]
    segs = []
    for a, b in zip(vpos, vpos[1:] + vpos[:1]):
        span = (b - a - 1) % n if len(vpos) > 1 else n - 1
        segs.append((a, b, tuple((a + 1 + r) % n for r in range(span))))
    return segs


def validate_shape(eq: Equation, forbid_negative_blocks: bool = True) -> Violation | None:
    """Check the cyclic shape rules; returns the first violation by position.

    (a) a coefficient between powers of opposite sign must be non-identity in
    every torsion-free group satisfying the env; (b) optionally, no block
    ``t^-1 g t^-1`` with a nonempty coefficient ``g``.
    """
    # local import: classification lives with the verifier
    from .labels import LabelKind, classify_label

    word = eq.word
    if not any(l.var for l in word.letters):
        return Violation("no-variable", 0, f"equation {word} contains no variable letter")
    found: list[Violation] = []
    for a, b, coeffs in _segments(word):
        pa, pb = word[a], word[b]
        where = coeffs[0] if coeffs else b
        if pa.sign != pb.sign:
            label = Word(tuple(word[k] for k in coeffs))
            if classify_label(label, eq.env).kind is not LabelKind.POWER:
                found.append(Violation(
                    "trivial-coefficient", where,
                    f"coefficient {label} at position {where} sits between {pa} and {pb} "
                    f"but is not certified nontrivial"))
        elif forbid_negative_blocks and pa.sign < 0 and coeffs:
            label = Word(tuple(word[k] for k in coeffs))
            found.append(Violation(
                "negative-block", where,
                f"block {pa} {label} {pb} at position {where} has the forbidden form t^-1 g t^-1"))
    if not found:
        return None
    # a segment wrapping the seam is positioned at its first letter
    return min(found, key=lambda v: v.position)
