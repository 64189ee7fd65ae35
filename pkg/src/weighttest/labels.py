"""Classification of coefficient words against a constraint environment."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .words import ConstraintEnv, Word, reduce

__all__ = ["LabelKind", "LabelClass", "classify_label"]


class LabelKind(enum.Enum):
    TRIVIAL = "trivial"
    POWER = "power-of-nontrivial"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class LabelClass:
    kind: LabelKind
    symbol: str | None = None
    exponent: int = 0
    word: Word = field(default_factory=Word)

    def __str__(self) -> str:
        if self.kind is LabelKind.POWER:
            return f"{self.kind.value}({self.symbol}^{self.exponent})"
        if self.kind is LabelKind.UNKNOWN:
            return f"{self.kind.value}({self.word})"
        return self.kind.value


def classify_label(w: Word, env: ConstraintEnv) -> LabelClass:
    """Classify the env-reduced word ``w``.

    ``POWER`` labels are non-identity in every torsion-free group satisfying
    ``env``, ``TRIVIAL`` labels are the identity in all of them, and
    ``UNKNOWN`` labels may be either.  Cyclic words are classified up to
    conjugacy.
    """
    r = reduce(w, env)
    if not r:
        return LabelClass(LabelKind.TRIVIAL, word=r)
    if len(r) == 1 and not r[0].var and env.is_nontrivial(r[0].name):
        return LabelClass(LabelKind.POWER, r[0].name, r[0].exp, r)
    return LabelClass(LabelKind.UNKNOWN, word=r)
