"""Exact integer arithmetic primitives.

Every count produced by this package is an exact integer.  Python's
built-in ``int`` is already an arbitrary-precision type that round-trips
through decimal strings, so ``ExactInt`` is an alias rather than a custom
class.  The helpers here wrap the stdlib with the conventions the rest of
the package relies on (zero binomials outside the Pascal triangle, cached
factorials, rising factorials with any integer base).
"""

from __future__ import annotations

import math
from functools import lru_cache

ExactInt = int


@lru_cache(maxsize=None)
def factorial(n: int) -> ExactInt:
    """n! for n >= 0."""
    if n < 0:
        raise ValueError(f"factorial requires n >= 0, got {n}")
    return math.factorial(n)


@lru_cache(maxsize=None)
def superfactorial(n: int) -> ExactInt:
    """Product of k! for k = 0..n (inclusive), so superfactorial(0) == 1."""
    if n < 0:
        raise ValueError(f"superfactorial requires n >= 0, got {n}")
    if n == 0:
        return 1
    return superfactorial(n - 1) * factorial(n)


def pochhammer(base: int, length: int) -> ExactInt:
    """Rising factorial base * (base+1) * ... * (base+length-1).

    The empty product (length == 0) is 1.  The base may be any integer;
    a nonpositive base can legitimately make the product vanish.
    """
    if length < 0:
        raise ValueError(f"pochhammer requires length >= 0, got {length}")
    result = 1
    for i in range(length):
        result *= base + i
    return result


def binomial(n: int, k: int) -> ExactInt:
    """C(n, k), with the convention C(n, k) = 0 for k < 0 or k > n.

    A negative upper index is rejected: every caller in this package has
    n >= 0 by construction, so a negative n indicates a caller bug rather
    than an out-of-range lattice path.
    """
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)
