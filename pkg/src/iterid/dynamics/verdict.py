"""Whole-group verdicts for Engel-type iterated identities.

Exhaustive mode walks every tuple of a finite group. For each tail
``(x2, ..., xn)`` the verbal map is tabulated once and minimal depths for all
``x1`` come out of a reverse breadth-first search from the identity over the
functional graph. Tuples are ordered by tail (``x2`` most significant) and
then by ``x1``, in the backend's enumeration order; witnesses are always the
first offending tuple in that order, whatever the worker count.
"""

from __future__ import annotations

import random
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import lru_cache

from ..groups import GroupDescriptor, InfiniteGroupError, make_group
from ..words import Word, exponent_sum
from .evaluate import ArityError, VerbalMap
from .orbit import BUDGET_EXHAUSTED, ENTERS_CYCLE, OrbitReport, _orbit, default_budget
from .parallel import run_chunks, split_range

HOLDS = "Holds"
FAILS = "Fails"
INCONCLUSIVE = "Inconclusive"

EXHAUSTIVE = "exhaustive"
SAMPLED = "sampled"

NOT_ITERATED_IDENTITY = "NotIteratedIdentity"


@dataclass
class IdentityVerdict:
    status: str
    mode: str
    max_depth_seen: int
    tuples_checked: int
    group: str
    witness: tuple | None = None
    witness_orbit: OrbitReport | None = None
    certificate: str | None = None
    unresolved: int = 0
    depth_histogram: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        g = make_group(self.group)
        out = {
            "status": self.status,
            "mode": self.mode,
            "max_depth_seen": self.max_depth_seen,
            "tuples_checked": self.tuples_checked,
            "unresolved": self.unresolved,
            "depth_histogram": {str(k): v for k, v in sorted(self.depth_histogram.items())},
            "witness": None,
        }
        if self.witness is not None:
            out["witness"] = {
                "tuple": [g.render(x) for x in self.witness],
                "orbit": self.witness_orbit.to_dict() if self.witness_orbit else None,
            }
        if self.certificate:
            out["certificate"] = self.certificate
        return out


@dataclass
class DepthReport:
    """Exact ``s(w, G)``; ``s_value`` is ``None`` when ``w`` is not an identity."""

    word: Word
    group: str
    s_value: int | None
    argmax_tuple: tuple
    witness_orbit: OrbitReport | None = None
    depth_histogram: dict = field(default_factory=dict)

    @property
    def is_iterated_identity(self) -> bool:
        return self.s_value is not None

    def to_dict(self) -> dict:
        g = make_group(self.group)
        return {
            "word": str(self.word),
            "group": self.group,
            "s_value": self.s_value if self.s_value is not None else NOT_ITERATED_IDENTITY,
            "argmax_tuple": [g.render(x) for x in self.argmax_tuple],
            "witness_orbit": self.witness_orbit.to_dict() if self.witness_orbit else None,
            "depth_histogram": {str(k): v for k, v in sorted(self.depth_histogram.items())},
        }


# exhaustive search

@lru_cache(maxsize=32)
def _element_table(desc: GroupDescriptor):
    group = make_group(desc)
    elems = list(group.elements())
    return elems, {group.key(x): i for i, x in enumerate(elems)}


def _decode_tail(idx: int, size: int, length: int) -> list[int]:
    digits = []
    for _ in range(length):
        idx, d = divmod(idx, size)
        digits.append(d)
    return digits[::-1]


def tail_depths(w: Word, group, tail) -> list[int]:
    """Minimal depth for every ``x1`` (enumeration order); ``-1`` = never."""
    group = make_group(group)
    elems, index = _element_table(group.descriptor)
    phi = VerbalMap(w, group, tail)
    img = [index[group.key(phi(x))] for x in elems]
    preds: list[list[int]] = [[] for _ in elems]
    for i, j in enumerate(img):
        preds[j].append(i)
    e = index[group.key(group.identity())]
    dist = [-1] * len(elems)
    dist[e] = 0
    queue = deque([e])
    while queue:
        y = queue.popleft()
        for p in preds[y]:
            if dist[p] < 0:
                dist[p] = dist[y] + 1
                queue.append(p)
    return [dist[j] + 1 if dist[j] >= 0 else -1 for j in img]


def _exhaustive_chunk(w: Word, desc: GroupDescriptor, tails: range):
    group = make_group(desc)
    elems, _ = _element_table(desc)
    size, tlen = len(elems), w.arity - 1
    best, best_at, fail_at = 0, None, None
    hist: Counter = Counter()
    for t in tails:
        digits = _decode_tail(t, size, tlen)
        depths = tail_depths(w, group, [elems[d] for d in digits])
        for x, d in enumerate(depths):
            if d < 0:
                if fail_at is None:
                    fail_at = (t, x)
                continue
            hist[d] += 1
            if d > best:
                best, best_at = d, (t, x)
    return best, best_at, fail_at, hist


def _exhaustive(w: Word, group, workers: int):
    if not group.is_finite:
        raise InfiniteGroupError(f"exhaustive search needs a finite group, got {group.descriptor}")
    if w.arity < 1:
        raise ArityError("word has no variables")
    elems, _ = _element_table(group.descriptor)
    n_tails = len(elems) ** (w.arity - 1)
    chunks = split_range(n_tails, workers)
    results = run_chunks(_exhaustive_chunk, [(w, group.descriptor, c) for c in chunks], workers)
    best, best_at, fail_at = 0, None, None
    hist: Counter = Counter()
    for b, b_at, f_at, h in results:
        hist.update(h)
        if b > best:
            best, best_at = b, b_at
        if fail_at is None and f_at is not None:
            fail_at = f_at
    total = n_tails * len(elems)

    def tuple_at(pos):
        t, x = pos
        return (elems[x],) + tuple(elems[d] for d in _decode_tail(t, len(elems), w.arity - 1))

    return best, (tuple_at(best_at) if best_at else None), \
        (tuple_at(fail_at) if fail_at else None), hist, total


def check_e_identity(w: Word, group, mode: str = EXHAUSTIVE, seed: int = 0,
                     count: int = 200, size_bound: int = 8, budget: int | None = None,
                     workers: int = 1) -> IdentityVerdict:
    """Decide (exhaustive) or probe (sampled) whether ``w`` is an E-type
    iterated identity of ``group``.

    Sampled mode never reports Holds: without a failure it is Inconclusive
    with the observed depth statistics. A sampled Fails is always decisive,
    either an exact cycle or an exponent-sum certificate on a group with an
    element of infinite order.
    """
    group = make_group(group)
    desc = str(group.descriptor)
    if mode == EXHAUSTIVE:
        best, _, fail, hist, total = _exhaustive(w, group, workers)
        if fail is not None:
            orbit = _orbit(VerbalMap(w, group, fail[1:]), group, fail[0], group.order())
            return IdentityVerdict(FAILS, EXHAUSTIVE, best, total, desc, fail, orbit,
                                   depth_histogram=dict(hist))
        return IdentityVerdict(HOLDS, EXHAUSTIVE, best, total, desc,
                               depth_histogram=dict(hist))
    if mode != SAMPLED:
        raise ValueError(f"mode must be {EXHAUSTIVE!r} or {SAMPLED!r}, got {mode!r}")
    if budget is None:
        budget = default_budget(group)

    cert = exponent_sum_certificate(w, group)
    chunks = split_range(count, workers)
    results = run_chunks(_sampled_chunk,
                         [(w, group.descriptor, c, seed, size_bound, budget) for c in chunks],
                         workers)
    hist: Counter = Counter()
    best, unresolved, fail = 0, 0, None
    for b, u, f, h in results:
        hist.update(h)
        best = max(best, b)
        unresolved += u
        if fail is None and f is not None:
            fail = f
    checked = count
    if cert is not None:
        tup, reason = cert
        orbit = _orbit(VerbalMap(w, group, tup[1:]), group, tup[0], min(budget, 64))
        return IdentityVerdict(FAILS, SAMPLED, best, checked + 1, desc, tup, orbit,
                               certificate=reason, unresolved=unresolved,
                               depth_histogram=dict(hist))
    if fail is not None:
        tup, orbit = fail
        return IdentityVerdict(FAILS, SAMPLED, best, checked, desc, tup, orbit,
                               unresolved=unresolved, depth_histogram=dict(hist))
    return IdentityVerdict(INCONCLUSIVE, SAMPLED, best, checked, desc,
                           unresolved=unresolved, depth_histogram=dict(hist))


# sampling

def sample_tuple(group, arity: int, seed: int, index: int, size_bound: int) -> tuple:
    """The ``index``-th sampled tuple for ``seed``.

    Cycles through three strategies: generators (with inverses and the
    identity), short products of generators, and the backend's own random
    elements.
    """
    group = make_group(group)
    rng = random.Random(f"{seed}/{index}")
    gens = list(group.generators())
    letters = gens + [group.inv(g) for g in gens]
    strategy = index % 3 if letters else 2
    out = []
    for _ in range(arity):
        if strategy == 0:
            out.append(rng.choice(letters + [group.identity()]))
        elif strategy == 1:
            out.append(group.product(rng.choice(letters)
                                     for _ in range(rng.randint(1, size_bound))))
        else:
            out.append(group.random(rng, size_bound))
    return tuple(out)


def _sampled_chunk(w: Word, desc, indices: range, seed: int, size_bound: int, budget: int):
    group = make_group(desc)
    best, unresolved, fail = 0, 0, None
    hist: Counter = Counter()
    for i in indices:
        tup = sample_tuple(group, w.arity, seed, i, size_bound)
        rep = _orbit(VerbalMap(w, group, tup[1:]), group, tup[0], budget)
        if rep.reaches_identity:
            hist[rep.depth] += 1
            best = max(best, rep.depth)
        elif rep.outcome == ENTERS_CYCLE:
            if fail is None:
                fail = (tup, rep)
        else:
            unresolved += 1
    return best, unresolved, fail, hist


def exponent_sum_certificate(w: Word, group):
    """A tuple whose orbit provably avoids the identity, or ``None``.

    With ``g`` of infinite order everything happens inside the cyclic group
    ``<g>``. If ``x1`` has exponent sum ``r != 0``, the tuple ``(g, e, ...)``
    has orbit ``g^(r^d)``. Otherwise if some ``x_i`` has exponent sum
    ``m != 0``, the tuple with ``x_i = g`` and all else ``e`` is stuck at
    the fixed point ``g^m``.
    """
    group = make_group(group)
    if group.is_finite or group.is_torsion:
        return None
    g = group.infinite_order_element()
    if g is None:
        return None
    e = group.identity()
    r = exponent_sum(w, 1)
    if r != 0:
        return (g,) + (e,) * (w.arity - 1), \
            f"exponent sum of x1 is {r}; orbit of an infinite-order x1 is x1^({r}^d)"
    for i in range(2, w.arity + 1):
        m = exponent_sum(w, i)
        if m != 0:
            tup = [e] * w.arity
            tup[i - 1] = g
            return tuple(tup), \
                f"exponent sum of x{i} is {m}; fixed point g^{m} with g of infinite order"
    return None


# exact depth

def depth_e(w: Word, group, workers: int = 1) -> DepthReport:
    """Exact iterational depth ``s(w, G)`` on a finite group."""
    group = make_group(group)
    best, best_tuple, fail, hist, _ = _exhaustive(w, group, workers)
    desc = str(group.descriptor)
    if fail is not None:
        orbit = _orbit(VerbalMap(w, group, fail[1:]), group, fail[0], group.order())
        return DepthReport(w, desc, None, fail, orbit, dict(hist))
    orbit = _orbit(VerbalMap(w, group, best_tuple[1:]), group, best_tuple[0], group.order())
    return DepthReport(w, desc, best, best_tuple, orbit, dict(hist))


__all__ = ["IdentityVerdict", "DepthReport", "check_e_identity", "depth_e", "sample_tuple",
           "exponent_sum_certificate", "tail_depths", "HOLDS", "FAILS", "INCONCLUSIVE",
           "EXHAUSTIVE", "SAMPLED", "NOT_ITERATED_IDENTITY", "BUDGET_EXHAUSTED"]
