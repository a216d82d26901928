"""Parametrized group families.

A :class:`FamilySpec` bundles an element lister, an operation and an
optional inverse, all taking the family parameters as trailing arguments.
:func:`build_family` materializes the table row by row and refuses to
return a group unless the seven build obligations hold:

    nonempty, distinct, valid_elements, identity, closed, associative, inverse

:func:`build_light` materializes the table with no checks at all.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple

from . import core
from .core import Elem, Group, RawTable
from .errors import GuardError, ObligationError, ResourceLimitError
from .numtheory import mod_inverse, rel_primes

Permutation = Tuple[int, ...]

MAX_PERM_DEGREE = 6

OBLIGATIONS = (
    "nonempty",
    "distinct",
    "valid_elements",
    "identity",
    "closed",
    "associative",
    "inverse",
)

_OBLIGATION_OF = {
    core.DISTINCT: "distinct",
    core.VALID_ELEMENTS: "valid_elements",
    core.IDENTITY_ROW: "identity",
    core.CLOSED: "closed",
    core.ASSOCIATIVE: "associative",
    core.INVERSES: "inverse",
}


@dataclass(frozen=True)
class FamilySpec:
    name: str
    elements: Callable[..., Sequence[Elem]]
    op: Callable[..., Elem]
    inv: Optional[Callable[..., Elem]] = None
    guard: Optional[Callable[..., bool]] = None


def _materialize(spec: FamilySpec, params: tuple) -> RawTable:
    l = tuple(core.as_elem(x) for x in spec.elements(*params))
    gop = spec.op
    rows = [tuple(gop(x, y, *params) for y in l) for x in l]
    return RawTable(l, rows)


def build_light(spec: FamilySpec, *params) -> RawTable:
    """The operation table of ``spec`` at ``params``, unchecked."""
    return _materialize(spec, params)


def build_family(spec: FamilySpec, *params, assoc: bool = True) -> Group:
    """Build the member of ``spec`` at ``params`` and verify it is a group.

    Raises :class:`GuardError` if the parameters fail the guard and
    :class:`ObligationError` naming the first failed obligation otherwise.
    ``assoc=False`` skips the associativity obligation.
    """
    if spec.guard is not None and not spec.guard(*params):
        args = ", ".join(map(repr, params))
        raise GuardError(f"{spec.name}({args}): parameters fail the guard")
    raw = _materialize(spec, params)
    if raw.order == 0:
        raise ObligationError("nonempty", ())

    report = core.check_group(raw, assoc=assoc)
    if not report.passed:
        name, cex = min(
            ((_OBLIGATION_OF[f], c) for f, c in report.failures),
            key=lambda fc: OBLIGATIONS.index(fc[0]),
        )
        raise ObligationError(name, cex)

    if spec.inv is not None:
        e = raw.elements[0]
        members = set(raw.elements)
        for x in raw.elements:
            y = core.as_elem(spec.inv(x, *params))
            if y not in members or spec.op(y, x, *params) != e:
                raise ObligationError("inverse", (x,))

    return Group(raw, assoc=assoc, _report=report)


def _posp(n) -> bool:
    return isinstance(n, int) and not isinstance(n, bool) and n >= 1


def ninit(n: int) -> List[int]:
    return list(range(n))


# additive group mod n

def zadd_op(x: int, y: int, n: int) -> int:
    return (x + y) % n


def zadd_inv(x: int, n: int) -> int:
    return (-x) % n


ZADD = FamilySpec("zadd", ninit, zadd_op, zadd_inv, _posp)


def zadd(n: int) -> Group:
    return build_family(ZADD, n)


# multiplicative group mod n

def zmul_op(x: int, y: int, n: int) -> int:
    return (x * y) % n


ZMUL = FamilySpec(
    "zmul",
    rel_primes,
    zmul_op,
    mod_inverse,
    lambda n: _posp(n) and n >= 2,
)


def zmul(n: int) -> Group:
    return build_family(ZMUL, n)


# permutations

def perms(l: Sequence[Elem]) -> List[tuple]:
    """All rearrangements of ``l``, lexicographic in the positions of ``l``."""
    return list(itertools.permutations(l))


def slist(n: int) -> List[Permutation]:
    return perms(range(n))


def comp_perm(p: Permutation, r: Permutation, n: int) -> Permutation:
    """Composition applying ``r`` first: ``result[i] == p[r[i]]``."""
    if len(p) != n or len(r) != n:
        raise ValueError(f"comp_perm: expected permutations of length {n}")
    return tuple([p[i] for i in r])


def inv_perm(p: Permutation, n: int) -> Permutation:
    out = [0] * n
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def cyc(p: Permutation) -> List[Tuple[int, ...]]:
    """Disjoint cycles of ``p``, each led by its least point, fixed points omitted."""
    seen = [False] * len(p)
    cycles = []
    for start in range(len(p)):
        if seen[start] or p[start] == start:
            seen[start] = True
            continue
        c = []
        i = start
        while not seen[i]:
            seen[i] = True
            c.append(i)
            i = p[i]
        cycles.append(tuple(c))
    return cycles


def is_even_perm(p: Permutation) -> bool:
    return sum(len(c) - 1 for c in cyc(p)) % 2 == 0


def even_perms(l: Sequence[Permutation]) -> List[Permutation]:
    return [p for p in l if is_even_perm(p)]


def _perm_op(x, y, n):
    return comp_perm(x, y, n)


SYM = FamilySpec("sym", slist, _perm_op, inv_perm, _posp)
ALT = FamilySpec("alt", lambda n: even_perms(slist(n)), _perm_op, inv_perm, _posp)


def _gate(name: str, n, max_n: Optional[int]):
    if max_n is not None and _posp(n) and n > max_n:
        raise ResourceLimitError(
            f"{name}({n}) has order {math.factorial(n)}; the limit is degree {max_n}"
        )


def sym(n: int, *, max_n: Optional[int] = MAX_PERM_DEGREE, assoc: Optional[bool] = None) -> Group:
    """The symmetric group on ``range(n)``.

    The associativity scan runs by default only up to degree 5; pass
    ``assoc=True`` to force it for degree 6.
    """
    _gate("sym", n, max_n)
    if assoc is None:
        assoc = not _posp(n) or n <= 5
    return build_family(SYM, n, assoc=assoc)


def alt(n: int, *, max_n: Optional[int] = MAX_PERM_DEGREE, assoc: Optional[bool] = None) -> Group:
    _gate("alt", n, max_n)
    if assoc is None:
        assoc = not _posp(n) or n <= 5
    return build_family(ALT, n, assoc=assoc)
