"""Brute-force reference computations.

Nothing here imports the package: every function works on plain element
lists and nested-list tables, so it can check the library independently.
"""

from itertools import product


def products(elements, table):
    return {(x, y): table[i][j] for i, x in enumerate(elements) for j, y in enumerate(elements)}


def group_axioms_hold(elements, table):
    """Plain-definition group test: first element is a left identity,
    products stay inside, associativity, and a left inverse for everything."""
    n = len(elements)
    if n == 0 or len(table) != n or any(len(r) != n for r in table):
        return False
    if len(set(elements)) != n:
        return False
    if not all(_valid(x) for x in elements):
        return False
    mul = products(elements, table)
    members = set(elements)
    if any(v not in members for v in mul.values()):
        return False
    e = elements[0]
    if any(mul[e, x] != x for x in elements):
        return False
    for x, y, z in product(elements, repeat=3):
        if mul[x, mul[y, z]] != mul[mul[x, y], z]:
            return False
    return all(any(mul[y, x] == e for y in elements) for x in elements)


def replays(elements, table, name, cex):
    """Does ``cex`` genuinely violate the predicate called ``name``?"""
    mul = products(elements, table)
    members = set(elements)
    e = elements[0]
    if name == "identity_row":
        a, x = cex
        return a == e and mul[e, x] != x
    if name == "distinct":
        (x,) = cex
        return elements.count(x) > 1
    if name == "valid_elements":
        (x,) = cex
        return x in elements and not _valid(x)
    if name == "closed":
        x, y = cex
        return x in members and y in members and mul[x, y] not in members
    if name == "associative":
        x, y, z = cex
        return mul[x, mul[y, z]] != mul[mul[x, y], z]
    if name == "inverses":
        (x,) = cex
        return x in members and all(mul[y, x] != e for y in elements)
    raise ValueError(name)


def _valid(x):
    if isinstance(x, bool):
        return False
    if isinstance(x, int):
        return x >= 0
    return isinstance(x, tuple) and len(x) > 0 and all(_valid(y) for y in x)


def element_order(x, elements, table):
    """Order by repeated right multiplication with a plain dict."""
    mul = products(elements, table)
    e = elements[0]
    y, n = x, 1
    while y != e:
        y = mul[y, x]
        n += 1
        if n > len(elements):
            raise AssertionError("element of infinite order")
    return n


def euler_phi(n):
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def prime_factors(n):
    out, p = set(), 2
    while p * p <= n:
        while n % p == 0:
            out.add(p)
            n //= p
        p += 1
    if n > 1:
        out.add(n)
    return out


def conjugacy_partition(elements, table):
    """Classes as frozensets via y x y^-1 over all y."""
    mul = products(elements, table)
    e = elements[0]
    inverse = {x: next(y for y in elements if mul[y, x] == e) for x in elements}
    seen, classes = set(), []
    for x in elements:
        if x in seen:
            continue
        c = frozenset(mul[mul[y, x], inverse[y]] for y in elements)
        seen |= c
        classes.append(c)
    return classes
