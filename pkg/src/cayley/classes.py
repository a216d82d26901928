"""Centralizers, conjugacy classes, the class equation and Cauchy witnesses."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np

from .core import Elem, Group, format_elem, is_abelian, make_subgroup
from .cosets import Coset, append_cosets, lcoset
from .cyclic import cyclic, elt_of_ord, ord, power
from .errors import MembershipError, NotConjugateError, PreconditionError
from .numtheory import divides, is_prime
from .quotient import conj, is_normal, quotient_group

ConjClass = Tuple[Elem, ...]


def _commuting_mask(a: Elem, g: Group) -> np.ndarray:
    m = np.asarray(g.index_rows())
    i = g.index(a)
    return m[:, i] == m[i, :]


def centralizer(a: Elem, g: Group) -> Group:
    mask = _commuting_mask(a, g)
    return make_subgroup([x for x, keep in zip(g.elements, mask) if keep], g)


def center(g: Group) -> Group:
    m = np.asarray(g.index_rows())
    mask = (m == m.T).all(axis=1)
    return make_subgroup([x for x, keep in zip(g.elements, mask) if keep], g)


def conjs(x: Elem, g: Group) -> ConjClass:
    """All conjugates of ``x``, without repeats, in element order of ``g``."""
    if x not in g:
        raise MembershipError(x)
    found = {conj(x, y, g) for y in g.elements}
    return tuple(sorted(found, key=g.index))


def conjer(y: Elem, x: Elem, g: Group) -> Elem:
    """First element c of ``g`` with ``conj(x, c) == y``."""
    if y not in g:
        raise MembershipError(y)
    for c in g.elements:
        if conj(x, c, g) == y:
            return c
    raise NotConjugateError(f"{format_elem(y)} is not a conjugate of {format_elem(x)}")


def conj2coset(y: Elem, x: Elem, g: Group) -> Coset:
    return lcoset(g.inv(conjer(y, x, g)), centralizer(x, g), g)


def coset2conj(c: Coset, x: Elem, g: Group) -> Elem:
    return conj(x, g.inv(c[0]), g)


def conjs_list(g: Group) -> List[ConjClass]:
    """The conjugacy classes with more than one member.

    Built as a right fold over the elements, so classes come out ordered by
    the index of their last member.
    """
    central = set(center(g).elements)
    out: List[ConjClass] = []
    covered = set()
    for x in reversed(g.elements):
        if x in central or x in covered:
            continue
        c = conjs(x, g)
        covered.update(c)
        out.append(c)
    out.reverse()
    return out


def check_class_equation(g: Group) -> bool:
    """order(center) + sum of nontrivial class sizes == order(g), as a partition."""
    parts = list(center(g).elements) + append_cosets(conjs_list(g))
    return (
        len(parts) == g.order
        and len(set(parts)) == len(parts)
        and set(parts) == set(g.elements)
    )


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise PreconditionError(f"{p} is not prime")


def find_elt(g: Group, p: int) -> Optional[Elem]:
    """First non-central element whose centralizer has order divisible by ``p``."""
    _require_prime(p)
    m = np.asarray(g.index_rows())
    commute = m == m.T
    central = commute.all(axis=1)
    sizes = commute.sum(axis=1)
    for i, x in enumerate(g.elements):
        if not central[i] and sizes[i] % p == 0:
            return x
    return None


def cauchy_witness(g: Group, p: int) -> Elem:
    """An element of order ``p``: the first one in element order."""
    _require_prime(p)
    if not divides(p, g.order):
        raise PreconditionError(f"{p} does not divide the order {g.order}")
    w = elt_of_ord(p, g)
    if w is None:
        raise AssertionError(f"no element of order {p} in a group of order {g.order}")
    return w


@dataclass
class CauchyTrace:
    """The path taken by the inductive construction of an order-p element.

    Each step is ``(kind, element, order)``: ``kind`` is ``"centralizer"``,
    ``"center"`` or ``"quotient"``, ``element`` the element the step was
    taken at (``None`` for the center), ``order`` the order of the group
    reached.
    """

    witness: Elem
    steps: List[Tuple[str, Optional[Elem], int]] = field(default_factory=list)


def _abelian_witness(g: Group, p: int, steps) -> Elem:
    a = g.elements[1]
    k = ord(a, g)
    if k % p == 0:
        return power(a, k // p, g)
    q = quotient_group(g, cyclic(a, g))
    steps.append(("quotient", a, q.order))
    y = _abelian_witness(q, p, steps)
    # the order of a coset divides the order of any representative
    x = y[0]
    return power(x, ord(x, g) // p, g)


def cauchy_trace(g: Group, p: int) -> CauchyTrace:
    """Construct an element of order ``p`` by descending through subgroups.

    Pass to the centralizer of a non-central element while one has order
    divisible by ``p``; then the class equation forces ``p`` to divide the
    order of the center, which is abelian.  In the abelian case, either the
    second element has order divisible by ``p`` or the quotient by its cyclic
    subgroup does, and a witness there lifts back.
    """
    _require_prime(p)
    if not divides(p, g.order):
        raise PreconditionError(f"{p} does not divide the order {g.order}")
    steps: List[Tuple[str, Optional[Elem], int]] = []
    while (x := find_elt(g, p)) is not None:
        g = centralizer(x, g)
        steps.append(("centralizer", x, g.order))
    z = g if is_abelian(g) else center(g)
    steps.append(("center", None, z.order))
    return CauchyTrace(_abelian_witness(z, p, steps), steps)


def check_divides_order_quotient(g: Group, p: int) -> bool:
    """If p divides the order of g but g has no element of order p, every
    quotient by a normal cyclic subgroup still has order divisible by p."""
    if not divides(p, g.order) or elt_of_ord(p, g) is not None:
        return True
    for a in g.elements:
        h = cyclic(a, g)
        if is_normal(h, g) and not divides(p, quotient_group(g, h).order):
            return False
    return True


def check_lcoset_power(x: Elem, n: int, h: Group, g: Group, q: Optional[Group] = None) -> bool:
    """The n-th power of the coset of x is the coset of the n-th power of x."""
    if q is None:
        q = quotient_group(g, h)
    return power(lcoset(x, h, g), n, q) == lcoset(power(x, n, g), h, g)


def check_lift_elt_of_ord(g: Group, h: Group, m: int, q: Optional[Group] = None) -> bool:
    """An element of order m in g/h implies one of order m in g."""
    if q is None:
        q = quotient_group(g, h)
    return elt_of_ord(m, q) is None or elt_of_ord(m, g) is not None
