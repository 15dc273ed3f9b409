"""Bracketed-word representation: parsing, formatting, measures, contexts."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import operated_word_counts
from lsgsb import words
from lsgsb.words import STAR, Alphabet, WordSyntaxError

XY = Alphabet(("x", "y"))
XYZ = Alphabet(("x", "y", "z"))
X, Y, Z = 0, 1, 2


def primes(k=3):
    return st.recursive(
        st.integers(min_value=0, max_value=k - 1),
        lambda s: st.lists(s, min_size=1, max_size=3).map(tuple),
        max_leaves=5,
    )


def word_words(k=3):
    return st.lists(primes(k), min_size=1, max_size=4).map(tuple)


def test_alphabet_basic():
    assert XYZ.names == ("x", "y", "z")
    assert tuple(XY.letters()) == (0, 1)


def test_alphabet_rejects_duplicates():
    with pytest.raises(ValueError):
        Alphabet(("x", "x"))


@pytest.mark.parametrize(
    "text, word, canonical",
    [
        ("x", (X,), "x"),
        ("xy", (X, Y), "xy"),
        ("x x y y x y", (X, X, Y, Y, X, Y), "xxyyxy"),
        ("P(xy)", ((X, Y),), "P(xy)"),
        ("x P( x y )", (X, (X, Y)), "xP(xy)"),
        ("P(x)P(y)", ((X,), (Y,)), "P(x)P(y)"),
        ("P(x y z) P(x) P(y)", ((X, Y, Z), (X,), (Y,)), "P(xyz)P(x)P(y)"),
        ("P(P(x))", (((X,),),), "P(P(x))"),
    ],
)
def test_parse_format_examples(text, word, canonical):
    w = words.parse_word(text, XYZ)
    assert w == word
    assert words.format_word(w, XYZ) == canonical
    assert words.parse_word(canonical, XYZ) == w


@pytest.mark.parametrize("bad", ["", "P(x", "P()", "w", "x)y"])
def test_parse_rejects_malformed(bad):
    with pytest.raises(WordSyntaxError):
        words.parse_word(bad, XYZ)


@given(word_words())
def test_format_parse_roundtrip(w):
    assert words.parse_word(words.format_word(w, XYZ), XYZ) == w


@pytest.mark.parametrize(
    "text, tree, canonical",
    [
        ("x", X, "x"),
        ("P(x)", (X,), "P(x)"),
        ("((xy)y)", ((X, Y), Y), "((xy)y)"),
        ("(x(yP(z)))", (X, (Y, (Z,))), "(x(yP(z)))"),
    ],
)
def test_parse_format_trees(text, tree, canonical):
    t = words.parse_tree(text, XYZ)
    assert t == tree
    assert words.format_tree(t, XYZ) == canonical


def test_measures():
    # x P(P(x)) y: three letters, two nested operators
    w = (X, ((X,),), Y)
    assert words.degree(w) == 5
    assert words.breadth(w) == 3
    assert words.depth(w) == 2
    assert words.letter_degree(w) == 3
    assert words.measures(w) == (3, 2, 5)


def test_tree_measures():
    t = ((X, Y), Y)
    assert words.tree_degree(t) == 3
    assert words.tree_depth(t) == 0
    assert words.tree_degree((X,)) == 2
    assert words.tree_depth(((X,), (Y,))) == 1


def trees(k=3):
    return st.recursive(
        st.integers(min_value=0, max_value=k - 1),
        lambda s: st.one_of(
            st.tuples(s),
            st.tuples(s, s),
        ),
        max_leaves=6,
    )


def test_forget_brackets():
    # trees flatten to their underlying bracketed word
    assert words.forget_brackets(((X, Y), Y)) == (X, Y, Y)
    assert words.forget_brackets((X,)) == ((X,),)
    assert words.forget_brackets(((X, (Y,)), X)) == (X, (Y,), X)


@given(trees())
def test_tree_degree_matches_underlying_word(t):
    w = words.forget_brackets(t)
    assert words.tree_degree(t) == words.degree(w)
    assert words.tree_depth(t) == words.depth(w)


def test_star_words():
    q = (X, ((STAR,),), Y)
    assert words.is_star_word(q)
    assert words.star_count(q) == 1
    assert not words.is_star_word((X, Y))
    got = words.substitute(q, (Y, Y))
    assert got == (X, ((Y, Y),), Y)
    assert words.format_word(got, XYZ) == "xP(P(yy))y"


def test_find_placements():
    w = (X, Y, X)
    qs = words.find_placements(w, (X,))
    assert {words.format_word(q, XYZ) for q in qs} == {"*yx", "xy*"}
    # every placement substitutes back to the original word
    for q in qs:
        assert words.substitute(q, (X,)) == w
    inner = ((X,), X)  # P(x) x
    got = {words.format_word(q, XYZ) for q in words.find_placements(inner, (X,))}
    assert got == {"P(*)x", "P(x)*"}


@given(word_words(k=2))
def test_placements_substitute_back(w):
    for u in [w, w[:1], w[-1:]]:
        for q in words.find_placements(w, u):
            assert words.star_count(q) == 1
            assert words.substitute(q, u) == w


def test_all_words_counts_match_oracle():
    frozen = {1: 2, 2: 6, 3: 22, 4: 90, 5: 394, 6: 1806}
    by_deg = words.all_words(XY, 6)
    assert {d: len(ws) for d, ws in by_deg.items()} == frozen
    assert operated_word_counts(2, 6) == frozen
    flat = {w for ws in by_deg.values() for w in ws}
    assert len(flat) == sum(frozen.values())


def test_all_words_depth0():
    by_deg = words.all_words(XY, 4, operated=False)
    assert {d: len(ws) for d, ws in by_deg.items()} == {1: 2, 2: 4, 3: 8, 4: 16}
    assert all(words.depth(w) == 0 for ws in by_deg.values() for w in ws)


def test_all_contexts():
    by_deg = words.all_contexts(XY, 2)
    assert [words.format_word(q, XY) for q in by_deg[1]] == ["*"]
    assert {words.format_word(q, XY) for q in by_deg[2]} == {
        "*x", "*y", "x*", "y*", "P(*)",
    }
    for qs in by_deg.values():
        for q in qs:
            assert words.star_count(q) == 1


def test_validate_rejects_malformed():
    with pytest.raises(TypeError):
        words.validate_word((X, ()), XYZ)
    with pytest.raises(TypeError):
        words.validate_tree((X, Y, Z), XYZ)
    with pytest.raises(ValueError):
        words.validate_word((7,), XYZ)
