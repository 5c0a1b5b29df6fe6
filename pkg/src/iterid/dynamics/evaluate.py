"""Substituting group elements into words."""

from __future__ import annotations

import warnings
from typing import Sequence

from ..groups import Group, GroupError, make_group
from ..words import Word


class ArityError(GroupError):
    """Tuple shorter than the word's arity."""


def _prepare(w: Word, group: Group, values: Sequence) -> list:
    values = list(values)
    if len(values) < w.arity:
        raise ArityError(f"word has arity {w.arity} but the tuple has {len(values)} entries")
    if len(values) > w.arity:
        warnings.warn(f"tuple has {len(values)} entries, truncating to arity {w.arity}",
                      stacklevel=3)
        values = values[:w.arity]
    return values


def evaluate(w: Word, group, values: Sequence):
    """Image of ``w`` under ``x_i -> values[i-1]``."""
    group = make_group(group)
    return evaluate_raw(w, group, _prepare(w, group, values))


def evaluate_raw(w: Word, group: Group, values: Sequence):
    """:func:`evaluate` without arity checks (``values`` indexed from 0)."""
    cache = {}
    acc = group.identity()
    for v, e in w.syllables:
        p = cache.get((v, e))
        if p is None:
            base = values[v - 1]
            p = base if e == 1 else group.power(base, e)
            cache[v, e] = p
        acc = group.op(acc, p)
    return acc


class VerbalMap:
    """``x -> w(x, tail)`` for a fixed tail, with the tail powers cached."""

    def __init__(self, w: Word, group: Group, tail: Sequence):
        if len(tail) != w.arity - 1:
            if len(tail) < w.arity - 1:
                raise ArityError(f"word has arity {w.arity}; tail needs {w.arity - 1} "
                                 f"entries, got {len(tail)}")
            warnings.warn(f"tail has {len(tail)} entries, truncating to {w.arity - 1}",
                          stacklevel=2)
            tail = list(tail)[:w.arity - 1]
        self.word = w
        self.group = group
        self.tail = tuple(tail)
        # runs of x1-free syllables collapse to constants
        plan: list = []
        const = None
        for v, e in w.syllables:
            if v == 1:
                if const is not None:
                    plan.append(("c", const))
                    const = None
                plan.append(("x", e))
            else:
                base = self.tail[v - 2]
                p = base if e == 1 else group.power(base, e)
                const = p if const is None else group.op(const, p)
        if const is not None:
            plan.append(("c", const))
        self.plan = plan

    def __call__(self, x):
        g = self.group
        acc = g.identity()
        powers = {}
        for kind, val in self.plan:
            if kind == "c":
                acc = g.op(acc, val)
            else:
                p = powers.get(val)
                if p is None:
                    p = x if val == 1 else g.power(x, val)
                    powers[val] = p
                acc = g.op(acc, p)
        return acc
