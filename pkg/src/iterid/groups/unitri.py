"""Unitriangular matrix groups.

``Unitriangular(n, m)`` is ``UT(n, Z/m)`` (``m = 0`` for the integers); an
element is the tuple of strictly-upper entries in row-major order.

``InfUnitriShift`` is the extension of the group of finitary upper
unitriangular ``Z x Z`` integer matrices by the shift ``phi`` with
``phi m phi^-1 = shift(m)``, where ``shift`` moves entry ``(i, j)`` to
``(i + 1, j + 1)``. An element ``(t, M)`` stands for ``phi^t M``; ``M`` is a
sorted tuple of ``((i, j), value)`` with ``i < j`` and nonzero values.
"""

from __future__ import annotations

import itertools
import re

from .base import Group, GroupError, parse_int, split_top_level
from .descriptor import GroupDescriptor

_ENTRY = re.compile(r"^\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*:\s*(-?\d+)$")


def _parse_entries(body: str) -> list[tuple[int, int, int]]:
    out = []
    if not body.strip():
        return out
    for part in split_top_level(body):
        if not part:
            continue
        m = _ENTRY.match(part)
        if not m:
            raise GroupError(f"expected (i,j):v, got {part!r}")
        out.append((int(m.group(1)), int(m.group(2)), int(m.group(3))))
    return out


class Unitriangular(Group):
    def __init__(self, n: int, modulus: int = 0):
        self.n = n
        self.modulus = modulus
        self.is_finite = modulus != 0
        self.is_torsion = modulus != 0
        self.is_abelian = n <= 2
        self.descriptor = GroupDescriptor("unitriangular", (n, modulus))
        self.pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        self.index = {p: k for k, p in enumerate(self.pairs)}
        self._id = (0,) * len(self.pairs)
        # for each (i, j): list of (index(i,k), index(k,j))
        self._chains = [[(self.index[i, k], self.index[k, j]) for k in range(i + 1, j)]
                        for i, j in self.pairs]

    def _red(self, v):
        return v % self.modulus if self.modulus else v

    def identity(self):
        return self._id

    def op(self, a, b):
        red = self._red
        return tuple(red(a[k] + b[k] + sum(a[p] * b[q] for p, q in self._chains[k]))
                     for k in range(len(self.pairs)))

    def inv(self, a):
        x = [0] * len(self.pairs)
        # x_ij = -a_ij - sum_k a_ik x_kj; fill by increasing j - i
        order = sorted(range(len(self.pairs)), key=lambda k: self.pairs[k][1] - self.pairs[k][0])
        for k in order:
            x[k] = self._red(-a[k] - sum(a[p] * x[q] for p, q in self._chains[k]))
        return tuple(x)

    def contains(self, g):
        if not isinstance(g, tuple) or len(g) != len(self.pairs):
            return False
        if self.modulus:
            return all(isinstance(v, int) and 0 <= v < self.modulus for v in g)
        return all(isinstance(v, int) for v in g)

    def order(self):
        if not self.modulus:
            return super().order()
        return self.modulus ** len(self.pairs)

    def elements(self):
        if not self.modulus:
            return super().elements()
        return itertools.product(range(self.modulus), repeat=len(self.pairs))

    def elementary(self, i: int, j: int, value: int = 1):
        """``e_{i,j}(value)`` with 1-based indices."""
        g = [0] * len(self.pairs)
        g[self.index[i - 1, j - 1]] = self._red(value)
        return tuple(g)

    def generators(self):
        return [self.elementary(i, i + 1) for i in range(1, self.n)]

    def infinite_order(self, g):
        if self.modulus:
            return False
        return any(g)

    def infinite_order_element(self):
        if self.modulus or self.n < 2:
            return None
        return self.elementary(1, 2)

    def random(self, rng, size_bound):
        if self.modulus:
            return tuple(rng.randrange(self.modulus) for _ in self.pairs)
        return tuple(rng.randint(-size_bound, size_bound) for _ in self.pairs)

    def parse_element(self, text):
        text = text.strip()
        if text == "e":
            return self._id
        if not (text.startswith("{") and text.endswith("}")):
            raise GroupError(f"expected {{(i,j):v, ...}}, got {text!r}")
        g = list(self._id)
        for i, j, v in _parse_entries(text[1:-1]):
            if not 1 <= i < j <= self.n:
                raise GroupError(f"entry ({i},{j}) is not strictly upper in {self.n}x{self.n}")
            g[self.index[i - 1, j - 1]] = self._red(v)
        return tuple(g)

    def render(self, g):
        items = [f"({i + 1},{j + 1}):{g[k]}" for k, (i, j) in enumerate(self.pairs) if g[k]]
        return "{" + ", ".join(items) + "}" if items else "e"


# sparse strictly-upper matrices as {row: {col: value}}

def _to_rows(entries):
    rows: dict[int, dict[int, int]] = {}
    for (i, j), v in entries:
        rows.setdefault(i, {})[j] = v
    return rows


def _from_rows(rows):
    return tuple(sorted(((i, j), v) for i, r in rows.items() for j, v in r.items() if v))


def _add_into(acc, rows, sign=1):
    for i, r in rows.items():
        ar = acc.setdefault(i, {})
        for j, v in r.items():
            ar[j] = ar.get(j, 0) + sign * v


def _matmul(a, b):
    out: dict[int, dict[int, int]] = {}
    for i, r in a.items():
        for k, v in r.items():
            bk = b.get(k)
            if not bk:
                continue
            oi = out.setdefault(i, {})
            for j, w in bk.items():
                oi[j] = oi.get(j, 0) + v * w
    return out


def _prune(rows):
    return {i: {j: v for j, v in r.items() if v} for i, r in rows.items()
            if any(r.values())}


def unitri_mul(e1, e2):
    """Product of ``I + a`` and ``I + b`` given as entry tuples."""
    a, b = _to_rows(e1), _to_rows(e2)
    out = _matmul(a, b)
    _add_into(out, a)
    _add_into(out, b)
    return _from_rows(out)


def unitri_inv(e):
    a = _to_rows(e)
    acc: dict[int, dict[int, int]] = {}
    term = {i: {j: -v for j, v in r.items()} for i, r in a.items()}
    neg_a = term
    while term:
        _add_into(acc, term)
        term = _prune(_matmul(term, neg_a))
    return _from_rows(acc)


def shift_entries(e, s: int):
    if s == 0:
        return e
    return tuple(((i + s, j + s), v) for (i, j), v in e)


class InfUnitriShift(Group):
    def __init__(self):
        self.descriptor = GroupDescriptor("inf_unitri_shift")

    def identity(self):
        return (0, ())

    def op(self, g, h):
        t1, m1 = g
        t2, m2 = h
        return (t1 + t2, unitri_mul(shift_entries(m1, -t2), m2))

    def inv(self, g):
        t, m = g
        return (-t, shift_entries(unitri_inv(m), t))

    def contains(self, g):
        if not (isinstance(g, tuple) and len(g) == 2 and isinstance(g[0], int)):
            return False
        m = g[1]
        return (isinstance(m, tuple) and list(m) == sorted(m)
                and all(i < j and v != 0 for (i, j), v in m)
                and len({p for p, _ in m}) == len(m))

    @staticmethod
    def elementary(i: int, j: int, value: int = 1):
        if i >= j:
            raise GroupError("elementary matrices need i < j")
        return (0, (((i, j), value),)) if value else (0, ())

    def phi(self, k: int = 1):
        return (k, ())

    def generators(self):
        return [self.phi(), self.elementary(0, 1)]

    def infinite_order(self, g):
        return g != (0, ())

    def infinite_order_element(self):
        return self.phi()

    def random(self, rng, size_bound):
        b = size_bound
        t = rng.randint(-b, b)
        entries = {}
        for _ in range(rng.randint(0, b)):
            i = rng.randint(-b, b - 1)
            j = rng.randint(i + 1, b)
            v = rng.choice([x for x in range(-b, b + 1) if x])
            entries[(i, j)] = v
        return (t, tuple(sorted(entries.items())))

    def parse_element(self, text):
        text = text.strip()
        if text == "e":
            return self.identity()
        if not (text.startswith("(") and text.endswith(")")):
            raise GroupError(f"expected (t:<shift>; (i,j):v, ...), got {text!r}")
        body = text[1:-1]
        head, sep, rest = body.partition(";")
        key, _, val = head.partition(":")
        if key.strip() != "t" or not sep:
            raise GroupError(f"expected (t:<shift>; ...), got {text!r}")
        t = parse_int(val, "shift")
        entries = {}
        for i, j, v in _parse_entries(rest):
            if i >= j:
                raise GroupError(f"entry ({i},{j}) is not strictly upper")
            if v:
                entries[(i, j)] = v
        return (t, tuple(sorted(entries.items())))

    def render(self, g):
        t, m = g
        items = ", ".join(f"({i},{j}):{v}" for (i, j), v in m)
        return f"(t:{t}; {items})" if items else f"(t:{t};)"
