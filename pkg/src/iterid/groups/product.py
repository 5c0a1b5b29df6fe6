"""Direct products; elements are tuples of component elements."""

from __future__ import annotations

import itertools
import math

from .base import Group, GroupError, split_top_level
from .descriptor import GroupDescriptor


class Product(Group):
    def __init__(self, factors: tuple[Group, ...]):
        self.factors = tuple(factors)
        self.descriptor = GroupDescriptor("product", tuple(f.descriptor for f in factors))
        self.is_finite = all(f.is_finite for f in factors)
        self.is_abelian = all(f.is_abelian for f in factors)
        self.is_torsion = all(f.is_torsion or f.is_finite for f in factors)

    def identity(self):
        return tuple(f.identity() for f in self.factors)

    def op(self, g, h):
        return tuple(f.op(a, b) for f, a, b in zip(self.factors, g, h))

    def inv(self, g):
        return tuple(f.inv(a) for f, a in zip(self.factors, g))

    def eq(self, g, h):
        return all(f.eq(a, b) for f, a, b in zip(self.factors, g, h))

    def is_identity(self, g):
        return all(f.is_identity(a) for f, a in zip(self.factors, g))

    def key(self, g):
        return tuple(f.key(a) for f, a in zip(self.factors, g))

    def contains(self, g):
        return (isinstance(g, tuple) and len(g) == len(self.factors)
                and all(f.contains(a) for f, a in zip(self.factors, g)))

    def order(self):
        if not self.is_finite:
            return super().order()
        return math.prod(f.order() for f in self.factors)

    def elements(self):
        if not self.is_finite:
            return super().elements()
        return itertools.product(*(list(f.elements()) for f in self.factors))

    def generators(self):
        gens = []
        for i, f in enumerate(self.factors):
            for a in f.generators():
                g = list(self.identity())
                g[i] = a
                gens.append(tuple(g))
        return gens

    def infinite_order(self, g):
        verdicts = [f.infinite_order(a) for f, a in zip(self.factors, g)]
        if any(v is True for v in verdicts):
            return True
        return False if all(v is False for v in verdicts) else None

    def infinite_order_element(self):
        for i, f in enumerate(self.factors):
            a = f.infinite_order_element()
            if a is not None:
                g = list(self.identity())
                g[i] = a
                return tuple(g)
        return None

    def random(self, rng, size_bound):
        return tuple(f.random(rng, size_bound) for f in self.factors)

    def parse_element(self, text):
        text = text.strip()
        if text == "e":
            return self.identity()
        if not (text.startswith("<") and text.endswith(">")):
            raise GroupError(f"expected <g1 | g2 | ...>, got {text!r}")
        parts = split_top_level(text[1:-1], "|")
        if len(parts) != len(self.factors):
            raise GroupError(f"expected {len(self.factors)} components, got {len(parts)}")
        return tuple(f.parse_element(p) for f, p in zip(self.factors, parts))

    def render(self, g):
        return "<" + " | ".join(f.render(a) for f, a in zip(self.factors, g)) + ">"
