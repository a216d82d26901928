"""Conjugation, normality and quotient groups.

Quotient elements are cosets, i.e. tuples of elements of the parent group,
so quotients of quotients work without special handling.
"""

from __future__ import annotations

from typing import List, Optional, Tuple

from .core import Elem, Group
from .cosets import Coset, lcoset, lcosets, require_subgroup
from .errors import NotNormalError
from .families import FamilySpec, build_family


def conj(x: Elem, y: Elem, g: Group) -> Elem:
    """The conjugate ``inv(y) * x * y``."""
    return g.op(g.op(g.inv(y), x), y)


def check_normal(h: Group, g: Group) -> Optional[Tuple[Elem, Elem]]:
    """First (x in h, y in g) whose conjugate ``conj(x, y)`` leaves h."""
    require_subgroup(h, g)
    for x in h.elements:
        for y in g.elements:
            if conj(x, y, g) not in h:
                return x, y
    return None


def is_normal(h: Group, g: Group) -> bool:
    return check_normal(h, g) is None


def qe(h: Group, g: Group) -> Coset:
    return lcoset(g.identity, h, g)


def qlist(h: Group, g: Group) -> List[Coset]:
    """The cosets of h with the identity coset moved to the front."""
    e = qe(h, g)
    rest = lcosets(h, g)
    rest.remove(e)
    return [e] + rest


def qop(x: Coset, y: Coset, h: Group, g: Group) -> Coset:
    return lcoset(g.op(x[0], y[0]), h, g)


def qinv(x: Coset, h: Group, g: Group) -> Coset:
    return lcoset(g.inv(x[0]), h, g)


QUOTIENT = FamilySpec(
    "quotient",
    lambda g, h: qlist(h, g),
    lambda x, y, g, h: qop(x, y, h, g),
    lambda x, g, h: qinv(x, h, g),
    lambda g, h: is_normal(h, g),
)


def quotient_group(g: Group, h: Group) -> Group:
    """The quotient of ``g`` by its normal subgroup ``h``."""
    cex = check_normal(h, g)
    if cex is not None:
        raise NotNormalError(cex)
    return build_family(QUOTIENT, g, h)
