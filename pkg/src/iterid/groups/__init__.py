"""Concrete group backends behind a uniform interface."""

from __future__ import annotations

import random as _random

from .base import Group, GroupError, InfiniteGroupError
from .descriptor import GroupDescriptor, as_descriptor, make_group, parse_descriptor
from .grigorchuk import grigorchuk_is_trivial
from .subgroups import (derived_length, derived_series, generated_subgroup,
                        lower_central_series, nilpotency_class, normal_closure)
from .wreath import base_projection, lamp_projection, lamp_subgroup_member

__all__ = [
    "Group", "GroupDescriptor", "GroupError", "InfiniteGroupError",
    "as_descriptor", "base_projection", "derived_length", "derived_series",
    "enumerate_group", "generated_subgroup", "grigorchuk_is_trivial",
    "lamp_projection", "lamp_subgroup_member", "lower_central_series",
    "make_group", "nilpotency_class", "normal_closure", "order",
    "parse_descriptor", "parse_element", "random_element",
]


def enumerate_group(desc):
    """Iterate over every element of a finite group."""
    return make_group(desc).elements()


def order(desc) -> int:
    return make_group(desc).order()


def random_element(desc, seed: int, size_bound: int = 8):
    """Deterministic random element for a fixed ``(seed, size_bound)``."""
    return make_group(desc).random(_random.Random(seed), size_bound)


def parse_element(text: str, desc):
    return make_group(desc).parse_element(text)
