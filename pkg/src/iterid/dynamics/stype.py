"""S-type (solvability-type) identities via the value-set recursion.

``V_0`` is the starting set (an explicit tuple or the whole finite group) and
``V_{k+1} = { w(v_1, ..., v_n) : v_i in V_k }``. Then ``V_N`` is exactly the
set of values of the N-th S-type iterate on assignments from ``V_0``, so the
identity holds at level N iff ``V_N = {e}``. The sequence of sets is
deterministic, so a repeated set without reaching ``{e}`` decides Fails.
"""

from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass, field

from ..groups import make_group
from ..words import Word, exponent_sum
from .evaluate import evaluate_raw
from .verdict import FAILS, HOLDS, INCONCLUSIVE, IdentityVerdict

REACHED_IDENTITY_SET = "ReachedIdentitySet"
SET_CYCLE = "SetCycle"
BUDGET_EXHAUSTED = "BudgetExhausted"

DEFAULT_LEVELS = 12
DEFAULT_SETSIZE = 100_000
# cap on |V_k|^n evaluations for a single level
DEFAULT_EVALUATIONS = 2_000_000


@dataclass
class ValueSetTrace:
    sizes: list[int]
    digests: list[str]
    terminal: str
    level: int | None = None
    cycle_start: int | None = None
    samples: list[list[str]] = field(default_factory=list)

    def to_dict(self) -> dict:
        out = {"sizes": self.sizes, "digests": self.digests, "terminal": self.terminal,
               "level": self.level, "samples": self.samples}
        if self.cycle_start is not None:
            out["cycle_start"] = self.cycle_start
        return out


def _digest(group, values) -> str:
    text = "\n".join(sorted(group.render(v) for v in values))
    return hashlib.sha256(text.encode()).hexdigest()[:16]


def _certificate(w: Word, group, base) -> str | None:
    # inside <g> for g of infinite order, the iterate evaluated at all-g is
    # g^(sigma^N) and, with e also available, x_i = g gives g^(m_i^N)
    if group.is_finite or group.is_torsion:
        return None
    inf = [v for v in base if group.infinite_order(v) is True]
    if not inf:
        return None
    sums = [exponent_sum(w, i) for i in range(1, w.arity + 1)]
    if sum(sums) != 0:
        return (f"total exponent sum {sum(sums)} != 0 and {group.render(inf[0])} "
                "has infinite order: the all-equal assignment never vanishes")
    has_e = any(group.is_identity(v) for v in base)
    nonzero = [i + 1 for i, m in enumerate(sums) if m != 0]
    if has_e and nonzero:
        i = nonzero[0]
        return (f"exponent sum of x{i} is {sums[i - 1]} and V0 holds e and the "
                f"infinite-order {group.render(inf[0])}: x{i}-only assignments never vanish")
    return None


def check_s_identity(w: Word, group, base=None, budget_levels: int = DEFAULT_LEVELS,
                     budget_setsize: int = DEFAULT_SETSIZE,
                     budget_evaluations: int = DEFAULT_EVALUATIONS,
                     sample_render: int = 8):
    """Run the value-set recursion; returns ``(IdentityVerdict, ValueSetTrace)``.

    ``base=None`` starts from the whole (finite) group, which decides the
    identity for every tuple at once since the recursion is monotone in
    ``V_0``. Otherwise ``base`` is the explicit tuple ``{x1, ..., xn}``.
    """
    group = make_group(group)
    if base is None:
        current = list(group.elements())
        mode = "exhaustive"
    else:
        current = list(dict.fromkeys(base))
        mode = "tuple"
    key = group.key
    n = w.arity
    sizes, digests, samples = [], [], []
    seen: dict = {}
    desc = str(group.descriptor)

    def record(vals):
        sizes.append(len(vals))
        digests.append(_digest(group, vals))
        samples.append(sorted(group.render(v) for v in vals)[:sample_render])

    record(current)
    seen[frozenset(key(v) for v in current)] = 0
    terminal, level, cycle_start = BUDGET_EXHAUSTED, None, None
    for k in range(1, budget_levels + 1):
        if len(current) ** n > budget_evaluations:
            break
        nxt: dict = {}
        for tup in itertools.product(current, repeat=n):
            v = evaluate_raw(w, group, tup)
            nxt.setdefault(key(v), v)
            if len(nxt) > budget_setsize:
                break
        if len(nxt) > budget_setsize:
            break
        current = list(nxt.values())
        record(current)
        if len(current) == 1 and group.is_identity(current[0]):
            terminal, level = REACHED_IDENTITY_SET, k
            break
        fs = frozenset(nxt)
        if fs in seen:
            terminal, cycle_start = SET_CYCLE, seen[fs]
            break
        seen[fs] = k

    trace = ValueSetTrace(sizes, digests, terminal, level, cycle_start, samples)
    levels = len(sizes) - 1
    if terminal == REACHED_IDENTITY_SET:
        verdict = IdentityVerdict(HOLDS, mode, level, levels, desc)
    elif terminal == SET_CYCLE:
        verdict = IdentityVerdict(FAILS, mode, levels, levels, desc,
                                  certificate=f"value set at level {levels} repeats level "
                                              f"{cycle_start}")
    else:
        cert = _certificate(w, group, list(group.elements()) if base is None else list(base))
        if cert is not None:
            verdict = IdentityVerdict(FAILS, mode, levels, levels, desc, certificate=cert)
        else:
            verdict = IdentityVerdict(INCONCLUSIVE, mode, levels, levels, desc)
    return verdict, trace
