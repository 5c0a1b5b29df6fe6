"""Structural checks: return times, the u-part of a verbal map, the
nilpotent classification and the word-based solvability test."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Sequence

from ..groups import (GroupError, derived_length, make_group)
from ..groups.abelian import Cyclic, FreeAbelian, Integers
from ..groups.perm import Symmetric, parity
from ..groups.product import Product
from ..groups.unitri import InfUnitriShift, Unitriangular
from ..groups.wreath import Wreath
from ..words import Word, decompose_nilpotent, decompose_uv, exponent_sum, named_word
from .evaluate import VerbalMap, evaluate_raw
from .verdict import EXHAUSTIVE, FAILS, HOLDS, SAMPLED, IdentityVerdict, check_e_identity


# return times

MEMBERSHIPS = ("lamp-subgroup", "shift-zero", "even-permutation")


def membership_predicate(group, name: str):
    """Predicate for one of the supported normal subgroups."""
    group = make_group(group)
    if name == "lamp-subgroup" and isinstance(group, Wreath):
        return lambda g: g[0] == 0
    if name == "shift-zero" and isinstance(group, InfUnitriShift):
        return lambda g: g[0] == 0
    if name == "even-permutation" and isinstance(group, Symmetric):
        return lambda g: parity(g) == 0
    raise GroupError(f"membership {name!r} is not supported on {group.descriptor}")


@dataclass
class ReturnTimes:
    levels: list[int]
    period: int | None
    is_progression: bool
    budget: int

    def to_dict(self) -> dict:
        return {"levels": self.levels, "period": self.period,
                "is_progression": self.is_progression, "budget": self.budget}


def return_times(w: Word, group, tail: Sequence, membership: str, budget: int = 100) -> ReturnTimes:
    """Levels ``l <= budget`` at which ``w_{o l}(e, tail)`` lies in the subgroup."""
    group = make_group(group)
    member = membership_predicate(group, membership)
    phi = VerbalMap(w, group, tail)
    x = group.identity()
    levels = []
    for l in range(1, budget + 1):
        x = phi(x)
        if member(x):
            levels.append(l)
    if not levels:
        return ReturnTimes([], None, True, budget)
    d = levels[0]
    return ReturnTimes(levels, d, levels == list(range(d, budget + 1, d)), budget)


# the u-part of a verbal map on the lamp subgroup

def _abelian_lamp_wreath(group) -> Wreath:
    group = make_group(group)
    if not isinstance(group, Wreath):
        raise GroupError(f"need a wreath product, got {group.descriptor}")
    if not group.lamp.is_abelian:
        raise GroupError(f"lamp group {group.lamp.descriptor} is not abelian")
    return group


def _random_lamp(group: Wreath, rng, size_bound):
    g = group.random(rng, size_bound)
    return (0, g[1])


def check_u_homomorphism(w: Word, group, tail: Sequence, trials: int = 500, seed: int = 0,
                         size_bound: int = 6, use_full_word: bool = False) -> bool:
    """Is ``y -> u(y, tail)`` multiplicative on the lamp subgroup?

    ``u`` is the product of conjugated ``x1``-powers from the u*v split of
    ``w``. With ``use_full_word`` the whole ``w`` is tested instead, which
    is affine rather than multiplicative when the tail value is nontrivial.
    """
    group = _abelian_lamp_wreath(group)
    word = w if use_full_word else decompose_uv(w).u()
    phi = VerbalMap(word.with_arity(max(word.arity, w.arity)), group, tail)
    rng = random.Random(seed)
    for _ in range(trials):
        y, z = _random_lamp(group, rng, size_bound), _random_lamp(group, rng, size_bound)
        if phi(group.op(y, z)) != group.op(phi(y), phi(z)):
            return False
    return True


def check_u_equivariance(w: Word, group, tail: Sequence, trials: int = 500, seed: int = 0,
                         size_bound: int = 6) -> bool:
    """Does ``u(g y g^-1, tail) = g u(y, tail) g^-1`` for ``g`` in G, ``y`` in the lamps?"""
    group = _abelian_lamp_wreath(group)
    u = decompose_uv(w).u()
    phi = VerbalMap(u.with_arity(max(u.arity, w.arity)), group, tail)
    rng = random.Random(seed)
    for _ in range(trials):
        g = group.random(rng, size_bound)
        y = _random_lamp(group, rng, size_bound)
        gi = group.inv(g)
        if phi(group.op(group.op(g, y), gi)) != group.op(group.op(g, phi(y)), gi):
            return False
    return True


# nilpotent classification

@dataclass
class NilpotentClassification:
    status: str
    reason: str
    r: int
    m: int | None
    tail_is_identity: bool

    def to_dict(self) -> dict:
        return {"status": self.status, "reason": self.reason, "r": self.r, "m": self.m,
                "tail_is_identity": self.tail_is_identity}


def _nilpotent_family(group) -> bool:
    if isinstance(group, (Cyclic, Integers, FreeAbelian, Unitriangular)):
        return True
    if isinstance(group, Product):
        return all(_nilpotent_family(f) for f in group.factors)
    return False


def _radical(n: int) -> int:
    out, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            out *= p
            while n % p == 0:
                n //= p
        p += 1
    return out * n if n > 1 else out


def _tail_is_identity(v: Word, group, arity: int, seed: int, samples: int) -> bool:
    """Is the ``x1``-free word ``v`` a law of the group?"""
    if v.is_identity:
        return True
    if group.is_finite:
        elems = list(group.elements())
        e = group.identity()
        for tail in itertools.product(elems, repeat=arity - 1):
            if evaluate_raw(v, group, (e,) + tail) != e:
                return False
        return True
    if group.is_abelian:
        return all(exponent_sum(v, i) == 0 for i in range(2, arity + 1))
    # polynomial entries: random large evaluations catch a nonzero polynomial
    rng = random.Random(seed)
    e = group.identity()
    gens = group.generators()
    for tail in itertools.product(gens + [e], repeat=min(arity - 1, 3)):
        full = (e,) + tuple(tail) + (e,) * (arity - 1 - len(tail))
        if evaluate_raw(v, group, full) != e:
            return False
    for _ in range(samples):
        tail = tuple(group.random(rng, 10 ** 6) for _ in range(arity - 1))
        if evaluate_raw(v, group, (e,) + tail) != e:
            return False
    return True


def classify_nilpotent(w: Word, group, seed: int = 0, samples: int = 64) -> NilpotentClassification:
    """Decide whether ``w`` is an E-type identity of a nilpotent backend.

    Write ``w`` as (commutators with powers of ``x1``) ``* x1^r * v``. With an
    element of infinite order, ``w`` holds iff ``r = 0`` and ``v`` is a law.
    For a finite group it holds iff ``m | r`` and ``v`` is a law, where ``m``
    is the product of the primes dividing the group order.
    """
    group = make_group(group)
    if not _nilpotent_family(group):
        raise GroupError(f"{group.descriptor} is not in the supported nilpotent family")
    dec = decompose_nilpotent(w)
    r = dec.r
    v_ok = _tail_is_identity(dec.tail, group, max(w.arity, 1), seed, samples)
    if not group.is_finite:
        if r != 0:
            return NilpotentClassification(FAILS, f"r = {r} != 0 with elements of infinite order",
                                           r, None, v_ok)
        if not v_ok:
            return NilpotentClassification(FAILS, "tail v is not a law", r, None, v_ok)
        return NilpotentClassification(HOLDS, "r = 0 and tail v is a law", r, None, v_ok)
    m = _radical(group.order())
    if r % m != 0:
        return NilpotentClassification(FAILS, f"m = {m} does not divide r = {r}", r, m, v_ok)
    if not v_ok:
        return NilpotentClassification(FAILS, "tail v is not a law", r, m, v_ok)
    return NilpotentClassification(HOLDS, f"m = {m} divides r = {r} and tail v is a law",
                                   r, m, v_ok)


# solvability through named words

SOLVABILITY_WORDS = ("w_BW", "w_BWW", "w_BGGKPP")


class SolvabilityMismatch(RuntimeError):
    """Word test and derived-series oracle disagree."""


@dataclass
class SolvabilityResult:
    group: str
    word_name: str
    solvable: bool
    derived_length: int | None
    verdict: IdentityVerdict

    def to_dict(self) -> dict:
        return {"group": self.group, "word_name": self.word_name, "solvable": self.solvable,
                "derived_length": self.derived_length, "verdict": self.verdict.to_dict()}


def solvability_by_word(group, word_name: str = "w_BWW", budget: int | None = None,
                        seed: int = 0, sample_count: int = 200, size_bound: int = 8,
                        workers: int = 1) -> SolvabilityResult:
    """Solvability of a finite group read off an E-type identity check.

    Exhaustive for words in at most two variables on groups of order at most
    60, seeded sampling otherwise. The answer is cross-checked against the
    derived series and a disagreement raises :class:`SolvabilityMismatch`.
    """
    group = make_group(group)
    if word_name not in SOLVABILITY_WORDS:
        raise ValueError(f"word_name must be one of {SOLVABILITY_WORDS}, got {word_name!r}")
    if not group.is_finite:
        raise GroupError(f"solvability_by_word needs a finite group, got {group.descriptor}")
    w = named_word(word_name)
    mode = EXHAUSTIVE if w.arity <= 2 and group.order() <= 60 else SAMPLED
    verdict = check_e_identity(w, group, mode=mode, seed=seed, count=sample_count,
                               size_bound=size_bound, budget=budget, workers=workers)
    solvable = verdict.status != FAILS
    dl = derived_length(group)
    if solvable != (dl is not None):
        raise SolvabilityMismatch(
            f"{word_name} on {group.descriptor}: word test says solvable={solvable}, "
            f"derived series says {dl is not None}")
    return SolvabilityResult(str(group.descriptor), word_name, solvable, dl, verdict)


def radical(n: int) -> int:
    """Product of the distinct primes dividing ``n``."""
    return _radical(n)


__all__ = ["ReturnTimes", "return_times", "check_u_homomorphism", "check_u_equivariance",
           "NilpotentClassification", "classify_nilpotent", "SolvabilityResult",
           "SolvabilityMismatch", "solvability_by_word", "membership_predicate", "radical",
           "MEMBERSHIPS", "SOLVABILITY_WORDS"]
