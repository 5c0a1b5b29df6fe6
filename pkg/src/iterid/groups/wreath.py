"""Restricted wreath products ``L wr B`` with ``B`` either ``Z`` or ``Z/k``.

An element is ``(t, f)``: ``t`` a base element (int, reduced mod ``k`` for a
cyclic base) and ``f`` a sorted tuple of ``(position, lamp)`` pairs holding
only non-identity lamps. Multiplication

    (t1, f1)(t2, f2) = (t1 + t2, p -> f1(p) * f2(p - t1))

so conjugating by the base generator ``x = (1, ())`` moves supports by one.
With this rule ``x * a = (1, {1: a})`` and ``(1, {0: a}) = a * x``.
"""

from __future__ import annotations

import itertools

from .abelian import Cyclic, Integers
from .base import Group, GroupError, parse_int, split_top_level
from .descriptor import GroupDescriptor


class Wreath(Group):
    def __init__(self, lamp: Group, base: Group):
        if not isinstance(base, (Cyclic, Integers)):
            raise GroupError(f"wreath base must be int or cyclic, got {base.descriptor}")
        self.lamp = lamp
        self.base = base
        self.k = base.m if isinstance(base, Cyclic) else 0
        self.descriptor = GroupDescriptor("wreath", (lamp.descriptor, base.descriptor))
        self.is_finite = lamp.is_finite and self.k > 0
        self.is_torsion = lamp.is_torsion and self.k > 0
        self.is_abelian = lamp.is_abelian and self.k == 1
        self._lamp_id = lamp.identity()

    def _pos(self, p):
        return p % self.k if self.k else p

    def _norm(self, t, lamps: dict):
        lid = self._lamp_id
        return (self._pos(t), tuple(sorted(((p, v) for p, v in lamps.items() if v != lid),
                                           key=lambda pv: pv[0])))

    def identity(self):
        return (0, ())

    def op(self, g, h):
        t1, f1 = g
        t2, f2 = h
        if not f2:
            return (self._pos(t1 + t2), f1)
        lamps = dict(f1)
        L = self.lamp
        for p, v in f2:
            q = self._pos(p + t1)
            cur = lamps.get(q)
            lamps[q] = v if cur is None else L.op(cur, v)
        return self._norm(t1 + t2, lamps)

    def inv(self, g):
        t, f = g
        L = self.lamp
        return self._norm(-t, {self._pos(p - t): L.inv(v) for p, v in f})

    def contains(self, g):
        if not (isinstance(g, tuple) and len(g) == 2 and isinstance(g[0], int)):
            return False
        t, f = g
        if self.k and not 0 <= t < self.k:
            return False
        if not isinstance(f, tuple):
            return False
        positions = [p for p, _ in f]
        if positions != sorted(set(positions)):
            return False
        if self.k and any(not 0 <= p < self.k for p in positions):
            return False
        return all(self.lamp.contains(v) and v != self._lamp_id for _, v in f)

    def order(self):
        if not self.is_finite:
            return super().order()
        return self.lamp.order() ** self.k * self.k

    def elements(self):
        if not self.is_finite:
            return super().elements()
        lamp_elems = list(self.lamp.elements())
        return (self._norm(t, dict(enumerate(cfg)))
                for t in range(self.k)
                for cfg in itertools.product(lamp_elems, repeat=self.k))

    def x(self, t: int = 1):
        """The base generator raised to ``t``."""
        return (self._pos(t), ())

    def lamp_at(self, value, position: int = 0):
        """Pure lamp element with ``value`` at ``position``."""
        return self._norm(0, {self._pos(position): value})

    def generators(self):
        gens = [self.x()] if self.k != 1 else []
        return gens + [self.lamp_at(a) for a in self.lamp.generators()]

    def lamp_value(self, g, position: int):
        return dict(g[1]).get(self._pos(position), self._lamp_id)

    def infinite_order(self, g):
        t, f = g
        if self.k == 0:
            if t != 0:
                return True
        elif t != 0:
            g = self.power(g, self.k)
            f = g[1]
        if self.lamp.is_torsion or self.lamp.is_finite:
            return False
        verdicts = [self.lamp.infinite_order(v) for _, v in f]
        if any(v is True for v in verdicts):
            return True
        if all(v is False for v in verdicts):
            return False
        return None

    def infinite_order_element(self):
        if self.k == 0:
            return self.x()
        a = self.lamp.infinite_order_element()
        return None if a is None else self.lamp_at(a)

    def random(self, rng, size_bound):
        """Base shift and up to ``size_bound`` lit positions, all within
        ``[-size_bound, size_bound]`` (everything mod ``k`` for a cyclic base)."""
        b = size_bound
        if self.k:
            t = rng.randrange(self.k)
            positions = list(range(self.k))
        else:
            t = rng.randint(-b, b)
            positions = list(range(-b, b + 1))
        count = rng.randint(0, min(b, len(positions)))
        lamps = {p: self.lamp.random(rng, size_bound) for p in rng.sample(positions, count)}
        return self._norm(t, lamps)

    def parse_element(self, text):
        text = text.strip()
        if text == "e":
            return self.identity()
        if not (text.startswith("(") and text.endswith(")")):
            raise GroupError(f"expected (s:<base>; <pos>:<lamp>, ...), got {text!r}")
        head, sep, rest = text[1:-1].partition(";")
        key, _, val = head.partition(":")
        if key.strip() != "s" or not sep:
            raise GroupError(f"expected (s:<base>; ...), got {text!r}")
        t = parse_int(val, "base component")
        lamps = {}
        if rest.strip():
            for part in split_top_level(rest):
                if not part:
                    continue
                pos, colon, lamp_text = part.partition(":")
                if not colon:
                    raise GroupError(f"expected <pos>:<lamp>, got {part!r}")
                p = self._pos(parse_int(pos, "lamp position"))
                v = self.lamp.parse_element(lamp_text)
                lamps[p] = v if p not in lamps else self.lamp.op(lamps[p], v)
        return self._norm(t, lamps)

    def render(self, g):
        t, f = g
        items = ", ".join(f"{p}:{self.lamp.render(v)}" for p, v in f)
        return f"(s:{t}; {items})" if items else f"(s:{t};)"


def base_projection(group: Group, g) -> int:
    """Base component of a wreath or shift-extension element."""
    from .unitri import InfUnitriShift

    if isinstance(group, (Wreath, InfUnitriShift)):
        return g[0]
    raise GroupError(f"base_projection needs a wreath or infunitri group, got {group.descriptor}")


def lamp_projection(group: Group, g, m: int):
    """Reduce integer lamps mod ``m``; returns ``(target_group, element)``."""
    from .descriptor import make_group

    if not isinstance(group, Wreath) or not isinstance(group.lamp, (Integers, Cyclic)):
        raise GroupError(f"lamp_projection needs integer lamps, got {group.descriptor}")
    target = make_group(GroupDescriptor(
        "wreath", (GroupDescriptor("cyclic", (m,)), group.base.descriptor)))
    t, f = g
    return target, target._norm(t, {p: v % m for p, v in f})


def lamp_subgroup_member(group: Group, g) -> bool:
    """Membership in the normal subgroup with trivial base component."""
    return base_projection(group, g) == 0
