"""Groups as explicit operation tables.

An element is a non-negative integer or a non-empty tuple of elements.  A
:class:`RawTable` is a candidate group: an element sequence plus a square
matrix whose entry ``[i][j]`` is the product of the i-th and j-th elements.
Row 0 is expected to coincide with the element sequence, so the first
element acts as a left identity by construction.

The ``check_*`` functions search exhaustively for a counterexample and
return the first one in row-major element-index order, or ``None``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple, Union

import numpy as np

from .errors import (
    IdentityNotFirstError,
    MembershipError,
    NotAGroupError,
    NotClosedError,
    NotSublistError,
)

Elem = Union[int, Tuple["Elem", ...]]

# predicate names, in evaluation order
POSITIVE_ORDER = "positive_order"
SQUARE = "square"
IDENTITY_ROW = "identity_row"
DISTINCT = "distinct"
VALID_ELEMENTS = "valid_elements"
CLOSED = "closed"
ASSOCIATIVE = "associative"
INVERSES = "inverses"

PREDICATES = (
    POSITIVE_ORDER,
    SQUARE,
    IDENTITY_ROW,
    DISTINCT,
    VALID_ELEMENTS,
    CLOSED,
    ASSOCIATIVE,
    INVERSES,
)


def is_elem(x) -> bool:
    """True iff ``x`` is a non-negative int or a non-empty tuple of elements."""
    if isinstance(x, bool):
        return False
    if isinstance(x, int):
        return x >= 0
    if isinstance(x, tuple):
        return len(x) > 0 and all(is_elem(y) for y in x)
    return False


def as_elem(x) -> Elem:
    """Coerce nested lists to nested tuples; ints pass through."""
    if isinstance(x, (list, tuple)):
        return tuple(as_elem(y) for y in x)
    return x


def index(x: Elem, l: Sequence[Elem]) -> Optional[int]:
    for i, y in enumerate(l):
        if y == x:
            return i
    return None


@dataclass(frozen=True)
class RawTable:
    """An unvalidated operation table.

    Entries may lie outside ``elements``; that is exactly what the closure
    check looks for.
    """

    elements: Tuple[Elem, ...]
    table: Tuple[Tuple[Elem, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(as_elem(x) for x in self.elements))
        object.__setattr__(
            self, "table", tuple(tuple(as_elem(x) for x in row) for row in self.table)
        )

    @property
    def order(self) -> int:
        return len(self.elements)

    def is_square(self) -> bool:
        n = self.order
        return len(self.table) == n and all(len(row) == n for row in self.table)


@dataclass(frozen=True)
class CheckReport:
    failures: Tuple[Tuple[str, tuple], ...] = ()

    @property
    def passed(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.passed

    def failed(self, name: str) -> bool:
        return any(f == name for f, _ in self.failures)

    def counterexample(self, name: str) -> Optional[tuple]:
        for f, cex in self.failures:
            if f == name:
                return cex
        return None

    def __str__(self) -> str:
        if self.passed:
            return "groupp: PASS"
        lines = ["groupp: FAIL"]
        for name, cex in self.failures:
            lines.append(f"  {name}: counterexample {' '.join(format_elem(x) for x in cex)}")
        return "\n".join(lines)


def format_elem(x: Elem) -> str:
    if isinstance(x, tuple):
        return "(" + " ".join(format_elem(y) for y in x) + ")"
    return str(x)


def _index_map(elements: Iterable[Elem]) -> dict:
    m: dict = {}
    for i, x in enumerate(elements):
        m.setdefault(x, i)
    return m


def _index_matrix(t: RawTable) -> np.ndarray:
    """Table of element indices; -1 marks a product outside the element list."""
    pos = _index_map(t.elements)
    n = t.order
    out = np.empty((n, n), dtype=np.int32)
    for i, row in enumerate(t.table):
        out[i] = [pos.get(x, -1) for x in row]
    return out


def _first_true(mask: np.ndarray) -> Optional[tuple]:
    hits = np.flatnonzero(mask)
    if hits.size == 0:
        return None
    return np.unravel_index(int(hits[0]), mask.shape)


def _find_closure(m: np.ndarray) -> Optional[Tuple[int, int]]:
    hit = _first_true(m < 0)
    return None if hit is None else (int(hit[0]), int(hit[1]))


def _find_assoc(m: np.ndarray) -> Optional[Tuple[int, int, int]]:
    # one x at a time: x(yz) is row x gathered through m, (xy)z is rows m[x] of m
    for x in range(m.shape[0]):
        left = m[x][m]
        right = m[m[x]]
        hit = _first_true(left != right)
        if hit is not None:
            return x, int(hit[0]), int(hit[1])
    return None


def _find_inverse(m: np.ndarray) -> Optional[int]:
    has = (m == 0).any(axis=0)
    missing = np.flatnonzero(~has)
    return None if missing.size == 0 else int(missing[0])


def _find_commute(m: np.ndarray) -> Optional[Tuple[int, int]]:
    hit = _first_true(m != m.T)
    return None if hit is None else (int(hit[0]), int(hit[1]))


def check_closed(t: RawTable) -> Optional[Tuple[Elem, Elem]]:
    """First pair whose product is not among the elements."""
    hit = _find_closure(_index_matrix(t))
    if hit is None:
        return None
    return t.elements[hit[0]], t.elements[hit[1]]


def check_assoc(t: RawTable) -> Optional[Tuple[Elem, Elem, Elem]]:
    """First triple (x, y, z) with x(yz) != (xy)z.  Requires closure."""
    hit = _find_assoc(_index_matrix(t))
    if hit is None:
        return None
    return tuple(t.elements[i] for i in hit)


def check_inverses(t: RawTable) -> Optional[Elem]:
    """First element with no left inverse onto elements[0].  Requires closure."""
    hit = _find_inverse(_index_matrix(t))
    return None if hit is None else t.elements[hit]


def check_group(t: RawTable, *, assoc: bool = True) -> CheckReport:
    """Run every group predicate on ``t`` and collect the failures.

    Predicates whose preconditions fail (a ragged table, duplicate elements,
    a product outside the element list) are skipped rather than evaluated on
    garbage.  ``assoc=False`` skips the cubic associativity scan.
    """
    failures = []
    n = t.order
    if n < 1:
        return CheckReport(((POSITIVE_ORDER, ()),))
    if not t.is_square():
        return CheckReport(((SQUARE, ()),))

    e = t.elements[0]
    for x, y in zip(t.elements, t.table[0]):
        if x != y:
            failures.append((IDENTITY_ROW, (e, x)))
            break

    seen = set()
    for x in t.elements:
        if x in seen:
            failures.append((DISTINCT, (x,)))
            return CheckReport(tuple(failures))
        seen.add(x)

    for x in t.elements:
        if not is_elem(x):
            failures.append((VALID_ELEMENTS, (x,)))
            break

    m = _index_matrix(t)
    hit = _find_closure(m)
    if hit is not None:
        failures.append((CLOSED, (t.elements[hit[0]], t.elements[hit[1]])))
        return CheckReport(tuple(failures))
    if assoc:
        hit = _find_assoc(m)
        if hit is not None:
            failures.append((ASSOCIATIVE, tuple(t.elements[i] for i in hit)))
    hit = _find_inverse(m)
    if hit is not None:
        failures.append((INVERSES, (t.elements[hit],)))
    return CheckReport(tuple(failures))


class Group:
    """A validated operation table.

    Construction runs :func:`check_group` and raises :class:`NotAGroupError`
    on failure.  ``assoc=False`` skips the associativity scan, for tables too
    large to scan cheaply whose associativity is known by other means.
    """

    __slots__ = ("_raw", "_pos", "_rows", "_inv", "_hash", "assoc_checked")

    def __init__(self, raw: RawTable, *, assoc: bool = True, _report: Optional[CheckReport] = None):
        report = _report if _report is not None else check_group(raw, assoc=assoc)
        if not report.passed:
            raise NotAGroupError(report)
        self._raw = raw
        self.assoc_checked = assoc
        self._pos = _index_map(raw.elements)
        m = _index_matrix(raw)
        self._rows = m.tolist()
        # least-index left inverse: first row holding the identity in each column
        self._inv = np.argmax(m == 0, axis=0).tolist()
        self._hash = None

    @classmethod
    def from_table(cls, table: Sequence[Sequence[Elem]], **kw) -> "Group":
        """Build from a full matrix whose first row lists the elements."""
        return cls(RawTable(table[0], table), **kw)

    @property
    def raw(self) -> RawTable:
        return self._raw

    @property
    def elements(self) -> Tuple[Elem, ...]:
        return self._raw.elements

    @property
    def table(self) -> Tuple[Tuple[Elem, ...], ...]:
        return self._raw.table

    @property
    def order(self) -> int:
        return len(self._raw.elements)

    def __len__(self) -> int:
        return self.order

    def __iter__(self):
        return iter(self._raw.elements)

    def __contains__(self, x) -> bool:
        try:
            return x in self._pos
        except TypeError:
            return False

    @property
    def identity(self) -> Elem:
        return self._raw.elements[0]

    def index(self, x: Elem) -> int:
        try:
            return self._pos[x]
        except (KeyError, TypeError):
            raise MembershipError(x) from None

    def op(self, x: Elem, y: Elem) -> Elem:
        return self._raw.table[self.index(x)][self.index(y)]

    def inv(self, x: Elem) -> Elem:
        return self._raw.elements[self._inv[self.index(x)]]

    def index_rows(self):
        """The table as nested lists of element indices."""
        return self._rows

    def __eq__(self, other) -> bool:
        if not isinstance(other, Group):
            return NotImplemented
        return self is other or self._raw == other._raw

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._raw)
        return self._hash

    def __repr__(self) -> str:
        return f"<Group of order {self.order}>"


def identity(g: Group) -> Elem:
    return g.identity


def op(x: Elem, y: Elem, g: Group) -> Elem:
    return g.op(x, y)


def inv(x: Elem, g: Group) -> Elem:
    return g.inv(x)


def check_subgroup(h: Group, g: Group) -> Optional[Tuple[Elem, Elem]]:
    """First pair of ``h`` on which the two operations disagree.

    Raises :class:`NotSublistError` when an element of ``h`` is missing from
    ``g``; that is a different failure from an operation mismatch.
    """
    for x in h.elements:
        if x not in g:
            raise NotSublistError(x)
    gi = [g.index(x) for x in h.elements]
    grows = g.index_rows()
    hrows = h.index_rows()
    for i, row in enumerate(hrows):
        grow = grows[gi[i]]
        for j, k in enumerate(row):
            if gi[k] != grow[gi[j]]:
                return h.elements[i], h.elements[j]
    return None


def is_subgroup(h: Group, g: Group) -> bool:
    try:
        return check_subgroup(h, g) is None
    except NotSublistError:
        return False


def check_abelian(g: Group) -> Optional[Tuple[Elem, Elem]]:
    hit = _find_commute(np.asarray(g.index_rows()))
    if hit is None:
        return None
    return g.elements[hit[0]], g.elements[hit[1]]


def is_abelian(g: Group) -> bool:
    return check_abelian(g) is None


def make_subgroup(l: Sequence[Elem], g: Group) -> Group:
    """The subgroup of ``g`` with element list ``l``, in that order.

    ``l`` must start with the identity of ``g`` and be closed under its
    operation.
    """
    l = tuple(as_elem(x) for x in l)
    if not l:
        raise IdentityNotFirstError("empty element list")
    for x in l:
        if x not in g:
            raise MembershipError(x)
    if l[0] != g.identity:
        raise IdentityNotFirstError(
            f"first element {format_elem(l[0])} is not the identity {format_elem(g.identity)}"
        )
    if len(set(l)) != len(l):
        seen = set()
        dup = next(x for x in l if x in seen or seen.add(x))
        raise NotAGroupError(CheckReport(((DISTINCT, (dup,)),)))
    members = set(l)
    table = []
    for x in l:
        row = tuple(g.op(x, y) for y in l)
        for y, xy in zip(l, row):
            if xy not in members:
                raise NotClosedError((x, y))
        table.append(row)
    h = Group(RawTable(l, table))
    # products come from g, so the operations agree by construction
    assert check_subgroup(h, g) is None
    return h
