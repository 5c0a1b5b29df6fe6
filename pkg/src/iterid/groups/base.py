"""Common interface for concrete group backends.

Elements are plain immutable Python values (ints, tuples, strings) in a
backend-specific canonical form, so they hash and compare cheaply. The
group object carries all the arithmetic.
"""

from __future__ import annotations

import random
from typing import Any, Hashable, Iterator

Element = Any


class GroupError(ValueError):
    """Invalid descriptor, element literal or backend mismatch."""


class InfiniteGroupError(GroupError):
    """An operation that needs a finite group was called on an infinite one."""


class Group:
    descriptor: "GroupDescriptor"  # noqa: F821
    is_finite: bool = False
    is_abelian: bool = False
    #: every element has finite order (torsion group)
    is_torsion: bool = False

    # arithmetic

    def identity(self) -> Element:
        raise NotImplementedError

    def op(self, g: Element, h: Element) -> Element:
        raise NotImplementedError

    def inv(self, g: Element) -> Element:
        raise NotImplementedError

    def eq(self, g: Element, h: Element) -> bool:
        return g == h

    def is_identity(self, g: Element) -> bool:
        return g == self.identity()

    def key(self, g: Element) -> Hashable:
        """Hashable encoding; equal keys imply equal elements."""
        return g

    def power(self, g: Element, k: int) -> Element:
        if k < 0:
            g, k = self.inv(g), -k
        result = self.identity()
        while k:
            if k & 1:
                result = self.op(result, g)
            k >>= 1
            if k:
                g = self.op(g, g)
        return result

    def conjugate(self, g: Element, y: Element) -> Element:
        """``g^y = y^-1 g y``."""
        return self.op(self.op(self.inv(y), g), y)

    def commutator(self, g: Element, h: Element) -> Element:
        """``[g, h] = g^-1 h^-1 g h``."""
        return self.op(self.op(self.inv(g), self.inv(h)), self.op(g, h))

    def product(self, elements) -> Element:
        acc = self.identity()
        for g in elements:
            acc = self.op(acc, g)
        return acc

    # structure

    def contains(self, g: Element) -> bool:
        """Is ``g`` a well-formed canonical payload for this backend?"""
        raise NotImplementedError

    def check(self, g: Element) -> Element:
        if not self.contains(g):
            raise GroupError(f"{g!r} is not an element of {self.descriptor}")
        return g

    def order(self) -> int:
        raise InfiniteGroupError(f"{self.descriptor} is infinite")

    def elements(self) -> Iterator[Element]:
        raise InfiniteGroupError(f"cannot enumerate infinite group {self.descriptor}")

    def generators(self) -> list[Element]:
        raise NotImplementedError

    def element_order(self, g: Element, limit: int | None = None) -> int | None:
        """Order of ``g``, or ``None`` if it is infinite or exceeds ``limit``."""
        if self.infinite_order(g):
            return None
        if limit is None:
            limit = self.order() if self.is_finite else 10 ** 6
        x = g
        for k in range(1, limit + 1):
            if self.is_identity(x):
                return k
            x = self.op(x, g)
        return None

    def infinite_order(self, g: Element) -> bool | None:
        """True/False when decidable cheaply, ``None`` when unknown."""
        if self.is_finite or self.is_torsion:
            return False
        return None

    def infinite_order_element(self) -> Element | None:
        """Some element of infinite order, if the backend has one."""
        return None

    def random(self, rng: random.Random, size_bound: int) -> Element:
        raise NotImplementedError

    # literals

    def parse_element(self, text: str) -> Element:
        raise NotImplementedError

    def render(self, g: Element) -> str:
        raise NotImplementedError

    def __repr__(self):
        return f"<group {self.descriptor}>"

    def __reduce__(self):
        from .descriptor import make_group

        return make_group, (self.descriptor,)


def split_top_level(text: str, sep: str = ",") -> list[str]:
    """Split on ``sep`` outside any (), [], {} or <> nesting."""
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch in "([{<":
            depth += 1
        elif ch in ")]}>":
            depth -= 1
        elif ch == sep and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    parts.append(text[start:])
    return [p.strip() for p in parts]


def parse_int(text: str, what: str = "integer") -> int:
    try:
        return int(text.strip())
    except ValueError:
        raise GroupError(f"expected {what}, got {text!r}") from None
