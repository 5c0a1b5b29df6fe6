"""Cyclic, infinite cyclic and free abelian groups (written additively)."""

from __future__ import annotations

from .base import Group, GroupError, parse_int, split_top_level
from .descriptor import GroupDescriptor


class Cyclic(Group):
    """``Z/mZ``; elements are residues ``0..m-1``."""

    is_finite = True
    is_abelian = True
    is_torsion = True

    def __init__(self, m: int):
        self.m = m
        self.descriptor = GroupDescriptor("cyclic", (m,))

    def identity(self):
        return 0

    def op(self, g, h):
        return (g + h) % self.m

    def inv(self, g):
        return -g % self.m

    def power(self, g, k):
        return g * k % self.m

    def contains(self, g):
        return isinstance(g, int) and 0 <= g < self.m

    def order(self):
        return self.m

    def elements(self):
        return iter(range(self.m))

    def generators(self):
        return [1] if self.m > 1 else []

    def element_order(self, g, limit=None):
        from math import gcd

        return self.m // gcd(g, self.m)

    def random(self, rng, size_bound):
        return rng.randrange(self.m)

    def parse_element(self, text):
        text = text.strip()
        if text == "e":
            return 0
        return parse_int(text) % self.m

    def render(self, g):
        return str(g)


class Integers(Group):
    """The infinite cyclic group ``Z`` with plain int elements."""

    is_abelian = True

    def __init__(self):
        self.descriptor = GroupDescriptor("integers")

    def identity(self):
        return 0

    def op(self, g, h):
        return g + h

    def inv(self, g):
        return -g

    def power(self, g, k):
        return g * k

    def contains(self, g):
        return isinstance(g, int)

    def generators(self):
        return [1]

    def infinite_order(self, g):
        return g != 0

    def infinite_order_element(self):
        return 1

    def random(self, rng, size_bound):
        return rng.randint(-size_bound, size_bound)

    def parse_element(self, text):
        text = text.strip()
        return 0 if text == "e" else parse_int(text)

    def render(self, g):
        return str(g)


class FreeAbelian(Group):
    """``Z^d``; elements are integer tuples of length ``d``."""

    is_abelian = True

    def __init__(self, d: int):
        self.d = d
        self.descriptor = GroupDescriptor("free_abelian", (d,))

    def identity(self):
        return (0,) * self.d

    def op(self, g, h):
        return tuple(a + b for a, b in zip(g, h))

    def inv(self, g):
        return tuple(-a for a in g)

    def power(self, g, k):
        return tuple(a * k for a in g)

    def contains(self, g):
        return (isinstance(g, tuple) and len(g) == self.d
                and all(isinstance(a, int) for a in g))

    def generators(self):
        return [tuple(int(i == j) for j in range(self.d)) for i in range(self.d)]

    def infinite_order(self, g):
        return any(g)

    def infinite_order_element(self):
        return self.generators()[0]

    def random(self, rng, size_bound):
        return tuple(rng.randint(-size_bound, size_bound) for _ in range(self.d))

    def parse_element(self, text):
        text = text.strip()
        if text == "e":
            return self.identity()
        if text.startswith("[") and text.endswith("]"):
            vals = tuple(parse_int(p) for p in split_top_level(text[1:-1]))
        elif self.d == 1:
            vals = (parse_int(text),)
        else:
            raise GroupError(f"expected [a,b,...] for zd({self.d}), got {text!r}")
        if len(vals) != self.d:
            raise GroupError(f"expected {self.d} coordinates, got {len(vals)}")
        return vals

    def render(self, g):
        return "[" + ",".join(str(a) for a in g) + "]"
