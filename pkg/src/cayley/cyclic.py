"""Powers, element order and cyclic subgroups."""

from __future__ import annotations

from typing import List, Optional

from .core import Elem, Group, format_elem, make_subgroup
from .errors import NotAGroupError


def power(a: Elem, n: int, g: Group) -> Elem:
    """``a`` multiplied onto the identity ``n`` times, always from the left."""
    if n < 0:
        raise ValueError("power: negative exponent")
    row = g.index_rows()[g.index(a)]
    r = 0
    for _ in range(n):
        r = row[r]
    return g.elements[r]


def ord(a: Elem, g: Group) -> int:
    """Least n >= 1 with ``power(a, n, g)`` equal to the identity."""
    row = g.index_rows()[g.index(a)]
    r = row[0]
    n = 1
    while r != 0:
        if n >= g.order:
            raise NotAGroupError(f"{format_elem(a)} has no finite order within the group order")
        r = row[r]
        n += 1
    return n


def powers(a: Elem, g: Group) -> List[Elem]:
    """``[a**0, a**1, ..., a**(ord-1)]``."""
    row = g.index_rows()[g.index(a)]
    out = [0]
    r = row[0]
    while r != 0:
        out.append(r)
        r = row[r]
    return [g.elements[i] for i in out]


def cyclic(a: Elem, g: Group) -> Group:
    return make_subgroup(powers(a, g), g)


def elt_of_ord(n: int, g: Group) -> Optional[Elem]:
    """First element of ``g`` (in element order) whose order is ``n``."""
    for x in g.elements:
        if ord(x, g) == n:
            return x
    return None
