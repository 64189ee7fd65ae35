from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from weighttest.dsl import ParseError, format_equation, parse_equation, parse_word
from weighttest.labels import LabelKind, classify_label
from weighttest.words import (ConstraintEnv, Letter, ShapeError, Word, cyclic_permutations, expand_powers,
                              invert, reduce, validate_shape)

ENV = ConstraintEnv(frozenset({"g1", "g2", "g3", "g4"}), {"g3": ("g1", -1)}, frozenset({"g1", "g2", "g3", "g4"}))
VARS = ("t", "x")


def w(text: str, cyclic: bool = False) -> Word:
    return parse_word(text, VARS, cyclic=cyclic)


def test_parse_l1_instance():
    eq = parse_equation("g1 t g2 t^-1 g3 t g4 t^-1\nlet g3 = g1^-1\nnontrivial g1 g2 g3 g4\n")
    assert len(eq.word) == 8
    assert eq.env.equalities == {"g3": ("g1", -1)}
    assert eq.env.nontrivial == {"g1", "g2", "g3", "g4"}


def test_powers_stay_symbolic():
    eq = parse_equation("g1 t^3 g2 t^-3\nnontrivial g1 g2\n")
    assert [l.exp for l in eq.word if l.var] == [3, -3]


@pytest.mark.parametrize("text, kind", [
    ("g1 t t^-1 g2\n", "trivial-coefficient"),
    ("g1 t g2 t^-1 g3 t^-1 g4\nnontrivial g1 g2 g3 g4\n", "negative-block"),
    ("g1 t g2 t^-1\nnontrivial g1\n", "trivial-coefficient"),
])
def test_shape_violations(text, kind):
    with pytest.raises(ShapeError) as err:
        parse_equation(text)
    assert err.value.violation.kind == kind


def test_negative_block_position_names_g3():
    with pytest.raises(ShapeError) as err:
        parse_equation("g1 t g2 t^-1 g3 t^-1 g4\nnontrivial g1 g2 g3 g4\n")
    assert "g3" in str(err.value)


def test_negative_blocks_allowed_when_flag_off():
    eq = parse_equation("g1 t g2 t^-1 g3 t^-1\nnontrivial g1 g2 g3\n", forbid_negative_blocks=False)
    assert validate_shape(eq, forbid_negative_blocks=False) is None
    assert validate_shape(eq, forbid_negative_blocks=True).kind == "negative-block"


@pytest.mark.parametrize("text, message", [
    ("g1 t g2^x t^-1\n", "column"),
    ("g1 g2\n", "variable"),
    ("g1 t g2 t^-1\nlet g9 = g1^-1\nnontrivial g1 g2\n", "g9"),
])
def test_parse_errors_report_position_or_cause(text, message):
    with pytest.raises((ParseError, ValueError)) as err:
        parse_equation(text)
    assert message in str(err.value)


def test_equality_cycle_rejected():
    with pytest.raises(ValueError):
        parse_equation("g1 t g2 t^-1\nlet g1 = g2^-1\nlet g2 = g1\nnontrivial g1 g2\n")


@pytest.mark.parametrize("text, cyclic, expected", [
    ("t t^-1", False, "1"),
    ("g3 g1", False, "1"),
    ("g1 t g2 t^-1 g3", False, "g1 t g2 t^-1 g1^-1"),
    ("g1 t g1^-1", True, "t"),
    ("g1 g1 g1^-1 t", False, "g1 t"),
])
def test_reduce(text, cyclic, expected):
    assert str(reduce(w(text, cyclic), ENV)) == expected


@pytest.mark.parametrize("text, expected", [
    ("g1 t", "t^-1 g1^-1"),
    ("", "1"),
    ("t^-1 g1^-1 t x^-1", "x t^-1 g1 t"),
])
def test_invert(text, expected):
    assert str(invert(w(text))) == expected


def test_invert_composes_to_identity():
    word = w("t^-1 g1^-1 t x^-1")
    assert not reduce(Word(word.letters + invert(word).letters))


def test_cyclic_permutations():
    perms = cyclic_permutations(w("t^-1 g1^-1 t x^-1", True))
    assert [str(p.letters[0]) for p in perms] == ["t^-1", "t", "x^-1"]
    assert len(cyclic_permutations(w("x^-1 g2 x g4", True))) == 2
    with pytest.raises(ValueError):
        cyclic_permutations(w("g1 g2", True))


@pytest.mark.parametrize("text, expected", [
    ("t^3", "t t t"),
    ("t^-2 g1", "t^-1 t^-1 g1"),
    ("g1 t^1", "g1 t"),
])
def test_expand_powers(text, expected):
    assert str(expand_powers(w(text))) == expected


@pytest.mark.parametrize("text, kind, symbol, exponent", [
    ("g1^-1 g1^-1", LabelKind.POWER, "g1", -2),
    ("g3 g1", LabelKind.TRIVIAL, None, None),
    ("g2 g4", LabelKind.UNKNOWN, None, None),
    ("g3^2", LabelKind.POWER, "g1", -2),
])
def test_classify_label(text, kind, symbol, exponent):
    c = classify_label(w(text, True), ENV)
    assert c.kind is kind
    if symbol:
        assert (c.symbol, c.exponent) == (symbol, exponent)


def test_power_of_unlisted_symbol_is_unknown():
    env = ConstraintEnv(frozenset({"g1", "g2"}), {}, frozenset({"g1"}))
    assert classify_label(w("g2^3", True), env).kind is LabelKind.UNKNOWN


# -- properties ------------------------------------------------------------------

letters = st.builds(Letter, st.sampled_from(["g1", "g2", "g3", "t", "x"]), st.sampled_from([-2, -1, 1, 2])) \
    .map(lambda l: Letter(l.name, l.exp, l.name in VARS))
words = st.lists(letters, max_size=12).map(lambda ls: Word(tuple(ls)))


@given(words, st.booleans())
def test_reduce_idempotent_and_shrinking(word, cyclic):
    word = word.as_cyclic(cyclic)
    once = reduce(word, ENV)
    assert reduce(once, ENV) == once
    assert len(once) <= len(word)


@given(words)
def test_word_times_inverse_is_trivial(word):
    assert not reduce(Word(word.letters + invert(word).letters), ENV)


@given(words)
def test_invert_is_involution(word):
    assert invert(invert(word)) == word


@given(words)
def test_expand_powers_preserves_reduced_word(word):
    assert reduce(expand_powers(word), ENV) == reduce(word, ENV)


@given(words)
def test_permutation_count_matches_unit_variable_letters(word):
    red = reduce(word.as_cyclic(True), ENV)
    expanded = expand_powers(red)
    count = sum(1 for l in expanded if l.var)
    if count == 0:
        return
    assert len(cyclic_permutations(expanded)) == count


@settings(max_examples=60)
@given(st.integers(4, 9), st.data())
def test_dsl_round_trip(n, data):
    from weighttest.corpus import gen_family
    i = data.draw(st.integers(3, n - 1))
    eq = gen_family("L1", {"n": n, "i": i}).equation
    text = format_equation(eq)
    again = parse_equation(text)
    assert again == eq
    assert format_equation(again) == text
