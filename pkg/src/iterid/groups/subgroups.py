"""Subgroup closures and the derived / lower central series of finite groups."""

from __future__ import annotations

from .base import Group, InfiniteGroupError
from .descriptor import make_group


def _require_finite(group: Group):
    if not group.is_finite:
        raise InfiniteGroupError(f"{group.descriptor} is infinite")


def _extend(group: Group, elems: set, gens: list) -> set:
    """Close ``elems`` (already a subgroup or {e}) under right multiplication by ``gens``."""
    elems = set(elems)
    frontier = list(elems)
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = group.op(x, g)
                if y not in elems:
                    elems.add(y)
                    new.append(y)
        frontier = new
    return elems


def generated_subgroup(group, gens) -> frozenset:
    """Subgroup generated by ``gens`` as a set of elements."""
    group = make_group(group)
    _require_finite(group)
    return frozenset(_extend(group, {group.identity()}, list(gens)))


def _small_generators(group: Group, elems) -> list:
    gens, sub = [], {group.identity()}
    for g in sorted(elems, key=repr):
        if g not in sub:
            gens.append(g)
            sub = _extend(group, sub, gens)
            if len(sub) == len(elems):
                break
    return gens


def normal_closure(group: Group, seeds, ambient_gens) -> frozenset:
    """Smallest subgroup containing ``seeds`` normalised by ``ambient_gens``."""
    gens = [s for s in seeds if not group.is_identity(s)]
    elems = _extend(group, {group.identity()}, gens)
    changed = True
    while changed:
        changed = False
        for s in list(gens):
            for t in ambient_gens:
                c = group.conjugate(s, t)
                if c not in elems:
                    gens.append(c)
                    elems = _extend(group, elems, gens)
                    changed = True
    return frozenset(elems)


def derived_series(group) -> list[frozenset]:
    """``G, G', G'', ...`` until it stabilises."""
    group = make_group(group)
    _require_finite(group)
    current = frozenset(group.elements())
    series = [current]
    while True:
        gens = _small_generators(group, current)
        comms = [group.commutator(a, b) for i, a in enumerate(gens) for b in gens[i + 1:]]
        nxt = normal_closure(group, comms, gens)
        if len(nxt) == len(current):
            return series
        series.append(nxt)
        current = nxt


def lower_central_series(group) -> list[frozenset]:
    """``G = g1 >= g2 = [g1, G] >= ...`` until it stabilises."""
    group = make_group(group)
    _require_finite(group)
    whole = frozenset(group.elements())
    ggens = _small_generators(group, whole)
    current = whole
    series = [current]
    while True:
        gens = _small_generators(group, current)
        comms = [group.commutator(a, t) for a in gens for t in ggens]
        nxt = normal_closure(group, comms, ggens)
        if len(nxt) == len(current):
            return series
        series.append(nxt)
        current = nxt


def derived_length(group) -> int | None:
    """Derived length, or ``None`` when the group is not solvable."""
    series = derived_series(group)
    return len(series) - 1 if len(series[-1]) == 1 else None


def nilpotency_class(group) -> int | None:
    series = lower_central_series(group)
    return len(series) - 1 if len(series[-1]) == 1 else None
