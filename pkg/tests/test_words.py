import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from iterid import Word, WordSyntaxError, named_word, parse_word, render_word
from iterid.words import (decompose_nilpotent, decompose_uv, engel_iterate, exponent_sum,
                          free_reduce, s_iterate, substitute, word_commutator,
                          word_conjugate, word_invert, word_multiply, word_power)

syllables = st.lists(st.tuples(st.integers(1, 3), st.integers(-3, 3)), max_size=10)
words = syllables.map(lambda s: Word(tuple(s), 3))
nontrivial = words.filter(lambda w: not w.is_identity)


def x(i, arity=3):
    return Word.var(i, arity)


# parsing and rendering

@pytest.mark.parametrize("text, expected", [
    ("[x1,x2]", ((1, -1), (2, -1), (1, 1), (2, 1))),
    ("x1^-2 x2^-1 x1", ((1, -2), (2, -1), (1, 1))),
    ("x1 x1^-1", ()),
    ("e", ()),
    ("x1^x2", ((2, -1), (1, 1), (2, 1))),
    ("(x1 x2)^2", ((1, 1), (2, 1), (1, 1), (2, 1))),
    ("[x1, x2, x2]", ((2, -1), (1, -1), (2, 1), (1, 1), (2, -1), (1, -1), (2, -1), (1, 1),
                      (2, 2))),
])
def test_parse_examples(text, expected):
    assert parse_word(text).syllables == expected


def test_parse_arity():
    assert parse_word("x2").arity == 2
    assert parse_word("x1", 4).arity == 4
    with pytest.raises(ValueError, match="arity"):
        parse_word("x3", 2)


@pytest.mark.parametrize("text, pos", [("[x1,", 4), ("x1 ^", 4), ("x1 )", 3), ("[x1]", 0),
                                       ("y1", 0)])
def test_parse_errors_report_position(text, pos):
    with pytest.raises(WordSyntaxError) as info:
        parse_word(text)
    assert info.value.pos == pos
    assert "position" in str(info.value)


def test_zero_exponent_literal_rejected():
    with pytest.raises(WordSyntaxError):
        parse_word("x1^0")


def test_render():
    assert render_word(parse_word("x1^3 x2^-1")) == "x1^3 x2^-1"
    assert render_word(Word.identity()) == "e"


@given(words)
def test_render_parse_roundtrip(w):
    assert parse_word(render_word(w), w.arity) == w


# free reduction

def test_free_reduce_examples():
    assert free_reduce([(1, 2), (1, -2)]) == ()
    assert free_reduce([(1, 1), (2, 3), (2, -3), (1, 1)]) == ((1, 2),)


@given(syllables)
def test_free_reduce_idempotent_and_canonical(raw):
    once = free_reduce(raw)
    assert free_reduce(once) == once
    assert all(e != 0 for _, e in once)
    assert all(a[0] != b[0] for a, b in zip(once, once[1:]))


@given(words)
def test_inverse_cancels(w):
    assert (w * ~w).is_identity
    assert (~w * w).is_identity
    assert word_multiply(w, Word.identity()) == w


@given(words, words, words)
def test_associativity(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(words, st.integers(-5, 5), st.integers(-5, 5))
def test_power_laws(w, j, k):
    assert word_power(w, j) * word_power(w, k) == word_power(w, j + k)
    naive = Word.identity(w.arity)
    for _ in range(abs(k)):
        naive = naive * (w if k > 0 else ~w)
    assert word_power(w, k) == naive


@given(words, st.integers(1, 3))
def test_exponent_sum_invariant(w, i):
    raw = Word(w.syllables + ((i, 2), (i, -2)), 3)
    assert exponent_sum(raw, i) == exponent_sum(w, i)


def test_exponent_sum_examples():
    assert exponent_sum(parse_word("[x1,x2]"), 1) == 0
    assert exponent_sum(parse_word("x1^3 x2 x1^-1"), 1) == 2
    with pytest.raises(IndexError):
        exponent_sum(parse_word("x1"), 2)


def test_conventions():
    assert word_conjugate(x(1), x(2)) == parse_word("x2^-1 x1 x2", 3)
    assert word_commutator([x(2), x(1), x(1), x(3)]) == word_commutator(
        [word_commutator([word_commutator([x(2), x(1)]), x(1)]), x(3)])
    with pytest.raises(ValueError):
        word_commutator([x(1)])
    assert word_invert(parse_word("x1 x2^2")) == parse_word("x2^-2 x1^-1")


# iteration

def test_engel_iterate_examples():
    assert render_word(engel_iterate(parse_word("x1^2"), 3)) == "x1^8"
    assert engel_iterate(parse_word("x1^2 x2"), 2) == parse_word("x1^2 x2 x1^2 x2^2")
    with pytest.raises(ValueError):
        engel_iterate(parse_word("x1"), 0)


@settings(max_examples=60, deadline=None)
@given(nontrivial, st.integers(1, 3), st.integers(1, 3))
def test_engel_composition_law(w, a, b):
    wa = engel_iterate(w, a)
    images = {i: x(i, w.arity) for i in range(1, w.arity + 1)}
    images[1] = wa
    assert engel_iterate(w, a + b) == substitute(engel_iterate(w, b), images)


def test_s_iterate():
    w0 = named_word("w0")
    assert s_iterate(w0, 1) == w0
    w2 = s_iterate(w0, 2)
    assert w2.arity == 4
    assert w2 == word_commutator([word_commutator([x(1, 4), x(2, 4)]),
                                  word_commutator([x(3, 4), x(4, 4)])])
    with pytest.raises(OverflowError):
        s_iterate(w0, 13)


# decompositions

@given(words)
def test_uv_roundtrip(w):
    d = decompose_uv(w)
    assert d.recompose() == w
    assert all(1 not in a.variables() for a, _ in d.conjugate_powers)
    assert 1 not in d.tail.variables()


@given(words)
def test_nilpotent_roundtrip(w):
    d = decompose_nilpotent(w)
    assert d.recompose() == w
    assert d.r == exponent_sum(w, 1)
    assert all(1 not in u.variables() for _, u, _ in d.commutator_terms)


def test_decomposition_example():
    w = parse_word("x2 x1^2 x2^-1 x1 x3")
    uv = decompose_uv(w)
    assert uv.conjugate_powers == ((parse_word("x2"), 2), (Word.identity(), 1))
    assert uv.tail == parse_word("x3")
    nil = decompose_nilpotent(w)
    assert nil.r == 3
    assert nil.commutator_terms == ((2, parse_word("x2^-1"), 2),)


# named words

@pytest.mark.parametrize("name, arity, text", [
    ("w_BWW", 2, "x2^-1 x1 x2 x1^-1 x2^-1 x1^-1 x2 x1"),
    ("w_BGGKPP", 3, "x2 x1 x2^-1 x3 x1 x3^-1 x2 x1^-1 x2^-1 x3 x1^-1 x3^-1"),
    ("wbar", 3, "x1^-1 x3^-1 x2^-1 x3 x2 x1 x2^-1 x3^-1 x2 x3"),
    ("w0", 2, "x1^-1 x2^-1 x1 x2"),
])
def test_named_words(name, arity, text):
    w = named_word(name)
    assert w.arity == arity
    assert render_word(w) == text


def test_brandl_wilson_shape():
    w = named_word("w_BW")
    assert w.arity == 4
    assert w.syllables[0] == (4, -1) and w.syllables[-1] == (4, 1)


def test_named_word_errors():
    with pytest.raises(KeyError):
        named_word("nope")
    with pytest.raises(ValueError):
        named_word("engel", k=0)
    assert named_word("engel", k=1) == named_word("w0")
