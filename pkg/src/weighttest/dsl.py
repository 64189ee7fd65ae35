"""Text formats for equations and presentations.

Equation file::

    # L1 with n=4, i=3
    g1 t g2 t^-1 g3 t g4 t^-1
    let g3 = g1^-1
    nontrivial g1 g2 g3 g4

Presentation file::

    variables t x
    alphabet g1 g2 g3 g4
    relator x^-1 g2 x g4
    relator t^-1 g1^-1 t x^-1
    let g3 = g1^-1
    nontrivial g1 g2 g3 g4

``#`` starts a comment.  The formatters emit exactly this grammar, so
``parse(format(v)) == v``.
"""

from __future__ import annotations

import re

from .rewrite import Presentation
from .words import ConstraintEnv, Equation, Letter, Word, natural_key, reduce

__all__ = [
    "ParseError",
    "parse_word",
    "parse_equation",
    "format_equation",
    "parse_presentation",
    "format_presentation",
    "format_env",
    "is_presentation_text",
]

TOKEN_RE = re.compile(r"([A-Za-z_][A-Za-z0-9_]*)(?:\^(-?\d+))?\Z")
LET_RE = re.compile(r"let\s+([A-Za-z_]\w*)\s*=\s*([A-Za-z_]\w*)(?:\^(-?1))?\s*\Z")
KEYWORDS = ("let", "nontrivial", "alphabet", "variable", "variables", "relator")


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 0, column: int = 0):
        super().__init__(f"line {line}, column {column}: {message}" if line else message)
        self.line = line
        self.column = column


def _tokens(text: str):
    for m in re.finditer(r"\S+", text):
        yield m.group(), m.start()


def parse_word(text: str, variables=("t",), *, cyclic: bool = False,
               line: int = 0, column: int = 0) -> Word:
    """Parse whitespace-separated letters; ``1`` stands for the empty word."""
    letters = []
    for tok, col in _tokens(text):
        if tok == "1":
            continue
        m = TOKEN_RE.match(tok)
        if not m:
            raise ParseError(f"bad letter {tok!r}", line, column + col + 1)
        exp = int(m[2]) if m[2] is not None else 1
        if exp == 0:
            raise ParseError(f"zero exponent in {tok!r}", line, column + col + 1)
        letters.append(Letter(m[1], exp, m[1] in variables))
    return Word(tuple(letters), cyclic)


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0]
        if body.strip():
            yield no, body


def _keyword(body: str) -> str | None:
    head = body.split(None, 1)[0]
    return head if head in KEYWORDS else None


def _names(rest: str, no: int, offset: int) -> list[str]:
    out = []
    for tok, col in _tokens(rest):
        if not re.fullmatch(r"[A-Za-z_]\w*", tok):
            raise ParseError(f"bad name {tok!r}", no, offset + col + 1)
        out.append(tok)
    return out


def _parse_env(entries, alphabet: set[str]) -> ConstraintEnv:
    eqs: dict[str, tuple[str, int]] = {}
    nontrivial: set[str] = set()
    for no, body in entries:
        kw = _keyword(body)
        if kw == "let":
            m = LET_RE.match(body.strip())
            if not m:
                raise ParseError("expected 'let g = h' or 'let g = h^-1'", no, 1)
            if m[1] in eqs:
                raise ParseError(f"duplicate equality for {m[1]}", no, 1)
            eqs[m[1]] = (m[2], int(m[3]) if m[3] else 1)
        elif kw == "nontrivial":
            nontrivial.update(_names(body.strip()[len(kw):], no, body.find(kw) + len(kw)))
    return ConstraintEnv(frozenset(alphabet), eqs, frozenset(nontrivial))


def parse_equation(text: str, env_text: str = "", *, forbid_negative_blocks: bool = True) -> Equation:
    """Parse an equation file (the env may also be passed separately).

    Raises :class:`ParseError`, :class:`~weighttest.words.EnvError` or
    :class:`~weighttest.words.ShapeError`.
    """
    variable = "t"
    words: list[tuple[int, str]] = []
    env_entries = []
    extra_alphabet: set[str] = set()
    for no, body in list(_lines(text)) + list(_lines(env_text)):
        kw = _keyword(body)
        if kw == "variable":
            names = _names(body.strip()[len(kw):], no, len(kw))
            if len(names) != 1:
                raise ParseError("expected exactly one variable name", no, 1)
            variable = names[0]
        elif kw == "alphabet":
            extra_alphabet.update(_names(body.strip()[len(kw):], no, len(kw)))
        elif kw in ("let", "nontrivial"):
            env_entries.append((no, body))
        elif kw is None:
            words.append((no, body))
        else:
            raise ParseError(f"keyword {kw!r} not allowed in an equation file", no, 1)
    if len(words) != 1:
        raise ParseError(f"expected exactly one equation line, found {len(words)}")
    no, body = words[0]
    word = parse_word(body, (variable,), cyclic=True, line=no)
    env = _parse_env(env_entries, word.symbols | extra_alphabet)
    return Equation.create(word, env, variable, forbid_negative_blocks=forbid_negative_blocks)


def _sorted(names) -> list[str]:
    return sorted(names, key=natural_key)


def format_env(env: ConstraintEnv) -> list[str]:
    lines = []
    for src in _sorted(env.equalities):
        dst, e = env.equalities[src]
        lines.append(f"let {src} = {dst}" + ("^-1" if e < 0 else ""))
    if env.nontrivial:
        lines.append("nontrivial " + " ".join(_sorted(env.nontrivial)))
    return lines


def format_equation(eq: Equation) -> str:
    lines = []
    if eq.variable != "t":
        lines.append(f"variable {eq.variable}")
    lines.append(str(eq.word))
    extra = eq.env.alphabet - eq.word.symbols
    if extra:
        lines.append("alphabet " + " ".join(_sorted(extra)))
    lines.extend(format_env(eq.env))
    return "\n".join(lines) + "\n"


def is_presentation_text(text: str) -> bool:
    return any(_keyword(body) == "relator" for _, body in _lines(text))


def parse_presentation(text: str) -> Presentation:
    variables: set[str] = set()
    alphabet: set[str] = set()
    rel_lines = []
    env_entries = []
    for no, body in _lines(text):
        kw = _keyword(body)
        rest = body.strip()[len(kw or ""):]
        if kw == "variables":
            variables.update(_names(rest, no, len(kw)))
        elif kw == "alphabet":
            alphabet.update(_names(rest, no, len(kw)))
        elif kw == "relator":
            rel_lines.append((no, rest))
        elif kw in ("let", "nontrivial"):
            env_entries.append((no, body))
        else:
            raise ParseError("expected a keyword line (variables, alphabet, relator, let, nontrivial)", no, 1)
    if not variables:
        raise ParseError("presentation declares no variables")
    relators = [parse_word(rest, variables, cyclic=True, line=no) for no, rest in rel_lines]
    for r in relators:
        alphabet |= r.symbols
    env = _parse_env(env_entries, alphabet)
    try:
        return Presentation(tuple(reduce(r, env) for r in relators), frozenset(variables), env)
    except ValueError as e:
        raise ParseError(str(e)) from None


def format_presentation(p: Presentation) -> str:
    lines = ["variables " + " ".join(_sorted(p.variables))]
    if p.env.alphabet:
        lines.append("alphabet " + " ".join(_sorted(p.env.alphabet)))
    lines.extend(f"relator {r}" for r in p.relators)
    lines.extend(format_env(p.env))
    return "\n".join(lines) + "\n"
