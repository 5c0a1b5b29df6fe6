"""Orbits of verbal maps ``x -> w(x, x2, ..., xn)``."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..groups import make_group
from ..words import Word
from .evaluate import VerbalMap

REACHES_IDENTITY = "ReachesIdentity"
ENTERS_CYCLE = "EntersCycle"
BUDGET_EXHAUSTED = "BudgetExhausted"

DEFAULT_BUDGET = 10_000


@dataclass(frozen=True)
class OrbitReport:
    """Outcome of iterating a verbal map from a starting point.

    Exactly one of ``depth`` (ReachesIdentity), ``preperiod``/``period``
    (EntersCycle) or ``budget`` (BudgetExhausted) is meaningful.
    """

    outcome: str
    depth: int | None = None
    preperiod: int | None = None
    period: int | None = None
    budget: int | None = None
    trace: tuple[str, ...] | None = None

    @property
    def reaches_identity(self) -> bool:
        return self.outcome == REACHES_IDENTITY

    def to_dict(self) -> dict:
        out: dict = {"outcome": self.outcome}
        if self.outcome == REACHES_IDENTITY:
            out["depth"] = self.depth
        elif self.outcome == ENTERS_CYCLE:
            out["preperiod"] = self.preperiod
            out["period"] = self.period
        else:
            out["budget"] = self.budget
        if self.trace is not None:
            out["trace"] = list(self.trace)
        return out

    def __str__(self):
        if self.outcome == REACHES_IDENTITY:
            return f"ReachesIdentity(depth={self.depth})"
        if self.outcome == ENTERS_CYCLE:
            return f"EntersCycle(preperiod={self.preperiod}, period={self.period})"
        return f"BudgetExhausted(budget={self.budget})"


def default_budget(group) -> int:
    group = make_group(group)
    return group.order() if group.is_finite else DEFAULT_BUDGET


def verbal_orbit(w: Word, group, x1, tail: Sequence, budget: int | None = None,
                 trace: bool = False) -> OrbitReport:
    """Iterate ``x -> w(x, tail)`` from ``x1``.

    Stops at the first of: identity reached (depth = step count), an exact
    revisit of an earlier point (cycle), or ``budget`` steps. With
    ``budget >= |G|`` a finite group never exhausts the budget.
    """
    group = make_group(group)
    if budget is None:
        budget = default_budget(group)
    phi = VerbalMap(w, group, tail)
    return _orbit(phi, group, x1, budget, trace)


def _orbit(phi: VerbalMap, group, x1, budget: int, trace: bool = False) -> OrbitReport:
    key = group.key
    visited = {key(x1): 0}
    points = [group.render(x1)] if trace else None
    x = x1
    for step in range(1, budget + 1):
        x = phi(x)
        if trace:
            points.append(group.render(x))
        if group.is_identity(x):
            return OrbitReport(REACHES_IDENTITY, depth=step,
                               trace=tuple(points) if trace else None)
        k = key(x)
        first = visited.get(k)
        if first is not None:
            return OrbitReport(ENTERS_CYCLE, preperiod=first, period=step - first,
                               trace=tuple(points) if trace else None)
        visited[k] = step
    return OrbitReport(BUDGET_EXHAUSTED, budget=budget,
                       trace=tuple(points) if trace else None)
