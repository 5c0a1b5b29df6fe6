"""Seeded word corpora for experiments and tests."""

from __future__ import annotations

import random

from ..words import Word, exponent_sum


def random_word(rng: random.Random, arity: int, max_length: int) -> Word:
    """A random freely reduced word of length at most ``max_length``."""
    letters = []
    for _ in range(rng.randint(1, max_length)):
        a = rng.randint(1, arity) * rng.choice((1, -1))
        if letters and letters[-1] == -a:
            continue
        letters.append(a)
    return Word.from_letters(letters, arity)


def nontrivial_words(seed: int, count: int, arity: int = 3, max_length: int = 8) -> list[Word]:
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        w = random_word(rng, arity, max_length)
        if not w.is_identity:
            out.append(w)
    return out


def zero_sum_word(rng: random.Random, arity: int, max_length: int) -> Word:
    """Random word with every exponent sum zero (nontrivial when possible)."""
    while True:
        w = random_word(rng, arity, max_length)
        for i in range(1, arity + 1):
            s = exponent_sum(w, i)
            if s:
                w = w * Word(((i, -s),), arity)
        if not w.is_identity:
            return w
