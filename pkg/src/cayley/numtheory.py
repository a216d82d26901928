"""Divisibility, primality and the extended Euclidean algorithm."""

from __future__ import annotations

from math import gcd
from typing import List, NamedTuple


class BezoutTriple(NamedTuple):
    g: int
    r: int
    s: int


def divides(a: int, b: int) -> bool:
    if a == 0:
        raise ZeroDivisionError("divides: divisor is zero")
    return b % a == 0


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def ext_gcd(x: int, y: int) -> BezoutTriple:
    """gcd(x, y) with coefficients r, s such that r*x + s*y == gcd."""
    if x < 1 or y < 1:
        raise ValueError("ext_gcd expects positive integers")
    r0, s0, a = 1, 0, x
    r1, s1, b = 0, 1, y
    while b:
        q = a // b
        a, b = b, a - q * b
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    return BezoutTriple(a, r0, s0)


def mod_inverse(x: int, n: int) -> int:
    """Inverse of x modulo n, from the Bezout coefficient of x."""
    g, r, _ = ext_gcd(x, n)
    if g != 1:
        raise ValueError(f"{x} is not invertible modulo {n}")
    return r % n


def rel_primes(n: int) -> List[int]:
    if n < 2:
        raise ValueError("rel_primes expects n >= 2")
    return [k for k in range(1, n) if gcd(k, n) == 1]
