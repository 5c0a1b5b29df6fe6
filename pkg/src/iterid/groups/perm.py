"""Symmetric and alternating groups.

A permutation of ``{1..n}`` is stored as the 0-based image tuple ``p`` with
``p[i]`` the image of ``i + 1``. Products act left to right: ``g * h`` first
applies ``g`` and then ``h``, matching the usual cycle-multiplication
convention ``(1 2)(2 3) = (1 3 2)``.
"""

from __future__ import annotations

import itertools
import re

from .base import Group, GroupError
from .descriptor import GroupDescriptor

_CYCLE = re.compile(r"\(([^()]*)\)")


def parity(p: tuple[int, ...]) -> int:
    """0 for even permutations, 1 for odd."""
    seen = [False] * len(p)
    transpositions = 0
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        transpositions += length - 1
    return transpositions % 2


def cycle_perm(n: int, *cycles) -> tuple[int, ...]:
    """Permutation from 1-based cycles, composed left to right."""
    result = list(range(n))
    for cyc in cycles:
        step = list(range(n))
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            step[a - 1] = b - 1
        result = [step[result[i]] for i in range(n)]
    return tuple(result)


class Symmetric(Group):
    is_finite = True
    is_torsion = True

    def __init__(self, n: int):
        self.n = n
        self.is_abelian = n <= 2
        self.descriptor = GroupDescriptor("symmetric", (n,))
        self._id = tuple(range(n))

    def identity(self):
        return self._id

    def op(self, g, h):
        return tuple([h[i] for i in g])

    def inv(self, g):
        out = [0] * self.n
        for i, j in enumerate(g):
            out[j] = i
        return tuple(out)

    def contains(self, g):
        return isinstance(g, tuple) and sorted(g) == list(self._id)

    def order(self):
        from math import factorial

        return factorial(self.n)

    def elements(self):
        return itertools.permutations(range(self.n))

    def generators(self):
        if self.n < 2:
            return []
        gens = [cycle_perm(self.n, (1, 2))]
        if self.n > 2:
            gens.append(cycle_perm(self.n, tuple(range(1, self.n + 1))))
        return gens

    def random(self, rng, size_bound):
        p = list(range(self.n))
        rng.shuffle(p)
        return tuple(p)

    def cycles(self, g) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for i in range(self.n):
            if i in seen or g[i] == i:
                continue
            cyc, j = [], i
            while j not in seen:
                seen.add(j)
                cyc.append(j + 1)
                j = g[j]
            out.append(tuple(cyc))
        return out

    def parse_element(self, text):
        text = text.strip()
        if text in ("e", "()", ""):
            return self._id
        if _CYCLE.sub("", text).strip():
            raise GroupError(f"expected disjoint cycle notation, got {text!r}")
        cycles = []
        for body in _CYCLE.findall(text):
            try:
                pts = tuple(int(t) for t in body.replace(",", " ").split())
            except ValueError:
                raise GroupError(f"bad cycle ({body})") from None
            if any(not 1 <= a <= self.n for a in pts):
                raise GroupError(f"point out of range 1..{self.n} in ({body})")
            if len(set(pts)) != len(pts):
                raise GroupError(f"repeated point in cycle ({body})")
            if pts:
                cycles.append(pts)
        return cycle_perm(self.n, *cycles)

    def render(self, g):
        cyc = self.cycles(g)
        if not cyc:
            return "e"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)


class Alternating(Symmetric):
    def __init__(self, n: int):
        super().__init__(n)
        self.is_abelian = n <= 3
        self.descriptor = GroupDescriptor("alternating", (n,))

    def contains(self, g):
        return super().contains(g) and parity(g) == 0

    def order(self):
        return max(super().order() // 2, 1)

    def elements(self):
        return (p for p in itertools.permutations(range(self.n)) if parity(p) == 0)

    def generators(self):
        n = self.n
        if n < 3:
            return []
        gens = [cycle_perm(n, (1, 2, 3))]
        if n > 3:
            long = tuple(range(1, n + 1)) if n % 2 else tuple(range(2, n + 1))
            gens.append(cycle_perm(n, long))
        return gens

    def random(self, rng, size_bound):
        p = list(super().random(rng, size_bound))
        if parity(tuple(p)):
            p[0], p[1] = p[1], p[0]
        return tuple(p)

    def parse_element(self, text):
        g = Symmetric.parse_element(self, text)
        if parity(g):
            raise GroupError(f"{text!r} is an odd permutation, not in alt({self.n})")
        return g
