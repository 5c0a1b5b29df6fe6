"""The first Grigorchuk group.

Elements are words over ``a, b, c, d`` reduced by ``a^2 = b^2 = c^2 = d^2 = e``
and ``bc = cb = d``, ``bd = db = c``, ``cd = dc = b``, so a reduced word
alternates ``a`` with one of ``b, c, d``. Reduced words are not a normal
form: equality goes through the contracting word problem below.
"""

from __future__ import annotations

from functools import lru_cache

from .base import Group, GroupError
from .descriptor import GroupDescriptor

_PRODUCT = {("b", "c"): "d", ("c", "b"): "d", ("b", "d"): "c", ("d", "b"): "c",
            ("c", "d"): "b", ("d", "c"): "b"}

# sections of b, c, d at the two first-level vertices
_SECTIONS = {"b": ("a", "c"), "c": ("a", "d"), "d": ("", "b")}


def reduce_word(word: str, stack: list[str] | None = None) -> str:
    out = list(stack) if stack else []
    for ch in word:
        if ch not in "abcd":
            raise GroupError(f"bad Grigorchuk letter {ch!r}")
        if out and out[-1] == ch:
            out.pop()
        elif out and ch != "a" and out[-1] != "a":
            out[-1] = _PRODUCT[out[-1], ch]
        else:
            out.append(ch)
    return "".join(out)


@lru_cache(maxsize=1 << 16)
def grigorchuk_is_trivial(word: str) -> bool:
    """True iff the word represents the identity."""
    word = reduce_word(word)
    if not word:
        return True
    if len(word) == 1 or word.count("a") % 2:
        return False
    left, right, p = [], [], 0
    for ch in word:
        if ch == "a":
            p ^= 1
        else:
            s = _SECTIONS[ch]
            left.append(s[p])
            right.append(s[1 - p])
    return grigorchuk_is_trivial(reduce_word("".join(left))) and \
        grigorchuk_is_trivial(reduce_word("".join(right)))


class Grigorchuk(Group):
    is_torsion = True

    def __init__(self):
        self.descriptor = GroupDescriptor("grigorchuk")

    def identity(self):
        return ""

    def op(self, g, h):
        return reduce_word(h, list(g))

    def inv(self, g):
        return g[::-1]

    def eq(self, g, h):
        return g == h or grigorchuk_is_trivial(self.op(g, self.inv(h)))

    def is_identity(self, g):
        return grigorchuk_is_trivial(g)

    def contains(self, g):
        return isinstance(g, str) and set(g) <= set("abcd") and reduce_word(g) == g

    def generators(self):
        return ["a", "b", "c", "d"]

    def infinite_order(self, g):
        return False

    def element_order(self, g, limit=None):
        # every element has 2-power order
        x, order = g, 1
        while not grigorchuk_is_trivial(x):
            x, order = self.op(x, x), order * 2
            if limit is not None and order > limit:
                return None
        return order

    def random(self, rng, size_bound):
        length = rng.randint(0, size_bound)
        start_a = rng.random() < 0.5
        out = []
        for i in range(length):
            out.append("a" if (i % 2 == 0) == start_a else rng.choice("bcd"))
        return "".join(out)

    def parse_element(self, text):
        text = "".join(text.split())
        if text in ("e", ""):
            return ""
        return reduce_word(text)

    def render(self, g):
        return g or "e"
