from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ctree.coeffring import UNIT, Monomial
from ctree.errors import NotH1Shape, WrongFinalLetter
from ctree.shuffle import (
    ZERO,
    IndexTuple,
    WordSum,
    format_word,
    parse_word,
    r_inverse,
    regularize,
    reverse,
    shuffle,
    shuffle_tuples,
    strip_last,
    tuple_to_word,
    word_to_tuple,
)

x, y, a, b, c = (Monomial.var(n) for n in "xyabc")
ALPHABET = [ZERO, UNIT, x, y]
words = st.lists(st.sampled_from(ALPHABET), max_size=5).map(tuple)
h1_words = st.tuples(st.sampled_from([UNIT, x, y]), st.lists(st.sampled_from(ALPHABET), max_size=6)).map(
    lambda t: (t[0],) + tuple(t[1])
)


def W(*letters):
    return WordSum.word(letters)


def test_shuffle_examples():
    assert shuffle((), (UNIT, ZERO)) == W(UNIT, ZERO)
    assert shuffle((ZERO,), (UNIT,)) == W(ZERO, UNIT) + W(UNIT, ZERO)
    assert shuffle((UNIT,), (UNIT, ZERO)) == W(UNIT, UNIT, ZERO) * 2 + W(UNIT, ZERO, UNIT)


def test_zero_and_one_are_different_letters():
    assert ZERO != UNIT
    assert format_word((ZERO, UNIT)) == "e[0] e[1]"


def test_reverse_examples():
    assert reverse((UNIT, ZERO, x)) == (x, ZERO, UNIT)
    assert reverse(()) == ()
    assert reverse((a,)) == (a,)


def test_strip_last_examples():
    assert strip_last(W(UNIT, ZERO, x)) == W(UNIT, ZERO)
    assert strip_last(WordSum.one()) == 0
    assert strip_last(W(a, b) * 2 + W(c)) == W(a) * 2 + WordSum.one()


def test_r_inverse_examples():
    assert r_inverse(W(UNIT, ZERO, x), x) == W(UNIT, ZERO)
    assert r_inverse(WordSum.one(), x) == 0
    with pytest.raises(WrongFinalLetter):
        r_inverse(W(UNIT, UNIT), x)


def test_tuple_word_examples():
    assert tuple_to_word(IndexTuple((Monomial.var("x1"), Monomial.var("x2")), (2, 1))) == (
        Monomial.var("x1"),
        ZERO,
        Monomial.var("x2"),
    )
    assert tuple_to_word(IndexTuple((), ())) == ()
    with pytest.raises(NotH1Shape):
        word_to_tuple((ZERO, UNIT))


def test_shuffle_tuples_examples():
    tx, ty = IndexTuple((x,), (1,)), IndexTuple((y,), (1,))
    assert shuffle_tuples(tx, ty) == {IndexTuple((x, y), (1, 1)): 1, IndexTuple((y, x), (1, 1)): 1}
    assert shuffle_tuples(IndexTuple((), ()), tx) == {tx: 1}
    assert shuffle_tuples(IndexTuple((x,), (2,)), ty) == {
        IndexTuple((x, y), (2, 1)): 1,
        IndexTuple((x, y), (1, 2)): 1,
        IndexTuple((y, x), (1, 2)): 1,
    }


def test_word_text_round_trip():
    w = (UNIT, ZERO, Monomial.var("x1").inverse())
    assert format_word(w) == "e[1] e[0] e[x1^-1]"
    assert parse_word(format_word(w)) == w
    assert format_word(()) == "1"


def test_word_sum_printing_is_canonical():
    s = W(UNIT, UNIT) * 2 - W(x)
    assert str(s) == "-1 * e[x] + 2 * e[1] e[1]"


@given(words, words)
def test_shuffle_commutes(u, v):
    assert shuffle(u, v) == shuffle(v, u)


@given(words, words, words)
def test_shuffle_associates(u, v, w):
    assert W(*u) * (W(*v) * W(*w)) == (W(*u) * W(*v)) * W(*w)


@given(words)
def test_empty_word_is_the_unit(u):
    assert shuffle((), u) == W(*u) == shuffle(u, ())


@given(words, words)
def test_reversal_respects_shuffle(u, v):
    assert shuffle(u, v).map_words(reverse) == shuffle(reverse(u), reverse(v))


@given(words, words)
def test_shuffle_mass_is_binomial(u, v):
    assert shuffle(u, v).coefficient_mass() == comb(len(u) + len(v), len(u))


@given(h1_words)
def test_tuple_encoding_round_trips(w):
    assert tuple_to_word(word_to_tuple(w)) == w


@given(words, words)
def test_regularization_respects_shuffle(u, v):
    lhs = regularize(shuffle(u, v))
    rhs = regularize(W(*u)) * regularize(W(*v))
    assert lhs == rhs


def test_regularization_kills_the_boundary_letters():
    assert regularize(W(ZERO)) == 0
    assert regularize(W(UNIT)) == 0
    assert regularize(W(x, UNIT)) == -W(UNIT, x)
    for w, _ in regularize(W(ZERO, x, UNIT) + W(UNIT, ZERO, UNIT)).items():
        assert w[0] is not ZERO and w[-1] != UNIT
