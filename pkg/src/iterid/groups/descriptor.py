"""Group descriptors and the descriptor mini-language.

Examples: ``sym(6)``, ``alt(5)``, ``cyclic(12)``, ``zd(2)``, ``int``,
``unitri(3)``, ``unitri(3,2)``, ``wreath(cyclic(4),int)``,
``wreath(unitri(3,2),cyclic(2))``, ``infunitri``, ``grigorchuk``,
``product(sym(3),cyclic(2))``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .base import Group, GroupError, split_top_level

KINDS = ("cyclic", "integers", "free_abelian", "symmetric", "alternating",
         "unitriangular", "wreath", "inf_unitri_shift", "grigorchuk", "product")

_SPELLING = {"cyclic": "cyclic", "int": "integers", "zd": "free_abelian",
             "sym": "symmetric", "alt": "alternating", "unitri": "unitriangular",
             "wreath": "wreath", "infunitri": "inf_unitri_shift",
             "grigorchuk": "grigorchuk", "product": "product"}


@dataclass(frozen=True)
class GroupDescriptor:
    kind: str
    params: tuple = ()

    def __post_init__(self):
        if self.kind not in KINDS:
            raise GroupError(f"unknown group kind {self.kind!r}")
        _validate(self)

    @property
    def is_finite(self) -> bool:
        k, p = self.kind, self.params
        if k in ("cyclic", "symmetric", "alternating"):
            return True
        if k == "unitriangular":
            return p[1] != 0
        if k == "wreath":
            return p[0].is_finite and p[1].kind == "cyclic"
        if k == "product":
            return all(c.is_finite for c in p)
        return False

    def __str__(self):
        k, p = self.kind, self.params
        if k == "cyclic":
            return f"cyclic({p[0]})"
        if k == "integers":
            return "int"
        if k == "free_abelian":
            return f"zd({p[0]})"
        if k == "symmetric":
            return f"sym({p[0]})"
        if k == "alternating":
            return f"alt({p[0]})"
        if k == "unitriangular":
            return f"unitri({p[0]})" if p[1] == 0 else f"unitri({p[0]},{p[1]})"
        if k == "wreath":
            return f"wreath({p[0]},{p[1]})"
        if k == "inf_unitri_shift":
            return "infunitri"
        if k == "grigorchuk":
            return "grigorchuk"
        return "product(" + ",".join(str(c) for c in p) + ")"


def _validate(d: GroupDescriptor):
    k, p = d.kind, d.params

    def ints(count):
        if len(p) != count or not all(isinstance(x, int) for x in p):
            raise GroupError(f"{k} takes {count} integer parameter(s), got {p}")

    if k in ("cyclic", "free_abelian", "symmetric", "alternating"):
        ints(1)
        if p[0] < 1:
            raise GroupError(f"{k} parameter must be >= 1, got {p[0]}")
    elif k == "unitriangular":
        ints(2)
        if p[0] < 1 or p[1] < 0 or p[1] == 1:
            raise GroupError(f"unitriangular needs n >= 1 and modulus 0 or >= 2, got {p}")
    elif k == "wreath":
        if len(p) != 2 or not all(isinstance(x, GroupDescriptor) for x in p):
            raise GroupError("wreath takes a lamp and a base descriptor")
        if p[1].kind not in ("integers", "cyclic"):
            raise GroupError(f"wreath base must be int or cyclic(k), got {p[1]}")
    elif k == "product":
        if not p or not all(isinstance(x, GroupDescriptor) for x in p):
            raise GroupError("product takes one or more descriptors")
    elif p:
        raise GroupError(f"{k} takes no parameters")


_HEAD = re.compile(r"\s*([a-z]+)\s*(?:\((.*)\))?\s*$", re.S)


def parse_descriptor(text: str) -> GroupDescriptor:
    """Parse the descriptor mini-language."""
    m = _HEAD.match(text)
    if not m:
        raise GroupError(f"cannot parse group descriptor {text!r}")
    name, inner = m.group(1), m.group(2)
    if name not in _SPELLING:
        raise GroupError(f"unknown group {name!r} in {text!r}")
    kind = _SPELLING[name]
    args = [] if inner is None or not inner.strip() else split_top_level(inner)
    if kind in ("wreath", "product"):
        return GroupDescriptor(kind, tuple(parse_descriptor(a) for a in args))
    try:
        nums = tuple(int(a) for a in args)
    except ValueError:
        raise GroupError(f"non-integer parameter in {text!r}") from None
    if kind == "unitriangular" and len(nums) == 1:
        nums = nums + (0,)
    return GroupDescriptor(kind, nums)


def as_descriptor(desc) -> GroupDescriptor:
    if isinstance(desc, GroupDescriptor):
        return desc
    if isinstance(desc, Group):
        return desc.descriptor
    return parse_descriptor(desc)


@lru_cache(maxsize=None)
def _make(desc: GroupDescriptor) -> Group:
    from . import abelian, grigorchuk, perm, product, unitri, wreath

    k, p = desc.kind, desc.params
    if k == "cyclic":
        return abelian.Cyclic(p[0])
    if k == "integers":
        return abelian.Integers()
    if k == "free_abelian":
        return abelian.FreeAbelian(p[0])
    if k == "symmetric":
        return perm.Symmetric(p[0])
    if k == "alternating":
        return perm.Alternating(p[0])
    if k == "unitriangular":
        return unitri.Unitriangular(p[0], p[1])
    if k == "inf_unitri_shift":
        return unitri.InfUnitriShift()
    if k == "wreath":
        return wreath.Wreath(_make(p[0]), _make(p[1]))
    if k == "grigorchuk":
        return grigorchuk.Grigorchuk()
    return product.Product(tuple(_make(c) for c in p))


def make_group(desc) -> Group:
    """Build (or fetch the cached) backend for a descriptor or its string form."""
    if isinstance(desc, Group):
        return desc
    return _make(as_descriptor(desc))
