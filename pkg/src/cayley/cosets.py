"""Left cosets, subgroup index and the Lagrange identity."""

from __future__ import annotations

import functools
from itertools import chain
from typing import List, Sequence, Tuple

from .core import Elem, Group, check_subgroup
from .errors import MembershipError, NotSubgroupError

Coset = Tuple[Elem, ...]


@functools.lru_cache(maxsize=512)
def _subgroup_verified(h: Group, g: Group) -> bool:
    cex = check_subgroup(h, g)
    if cex is not None:
        raise NotSubgroupError(cex)
    return True


def require_subgroup(h: Group, g: Group) -> None:
    """Raise unless ``h`` is a subgroup of ``g`` (memoized per pair)."""
    _subgroup_verified(h, g)


def lcoset(x: Elem, h: Group, g: Group) -> Coset:
    """The products ``x*y`` for y in h, ordered by their index in g."""
    require_subgroup(h, g)
    if x not in g:
        raise MembershipError(x)
    return tuple(sorted((g.op(x, y) for y in h.elements), key=g.index))


def lcosets(h: Group, g: Group) -> List[Coset]:
    """One coset per class.

    The list is built the way a right fold over ``g``'s elements would build
    it, consing a new coset whenever an element is not yet covered.  The
    effect is that cosets come out ordered by the index of their last member.
    """
    require_subgroup(h, g)
    out: List[Coset] = []
    covered = set()
    for x in reversed(g.elements):
        if x not in covered:
            c = lcoset(x, h, g)
            covered.update(c)
            out.append(c)
    out.reverse()
    return out


def subgroup_index(h: Group, g: Group) -> int:
    return len(lcosets(h, g))


def append_cosets(cs: Sequence[Sequence[Elem]]) -> List[Elem]:
    return list(chain.from_iterable(cs))


def check_lagrange(h: Group, g: Group) -> bool:
    return h.order * subgroup_index(h, g) == g.order
