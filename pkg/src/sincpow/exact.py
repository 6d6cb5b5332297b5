"""Exact arithmetic primitives shared by the rest of the package.

Python integers are arbitrary precision and ``fractions.Fraction``
already provides normalized exact rationals (lowest terms, positive
denominator, ``0/1`` for zero), so this module mostly pins down
aliases and adds the small combinatorial helpers the closed forms
need.  Nothing here ever touches floating point.
"""

from __future__ import annotations

import math
from fractions import Fraction

__all__ = [
    "ExactRational",
    "PrimeFactorization",
    "binomial",
    "factorial",
    "factorize",
]

# Arbitrary-precision rational number.  Fraction normalizes on
# construction, which is exactly the canonical form we need.
ExactRational = Fraction

# Ordered (prime, exponent) pairs with primes strictly increasing.
PrimeFactorization = tuple[tuple[int, int], ...]


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k), zero outside 0 <= k <= n."""
    if n < 0:
        raise ValueError("binomial: n must be nonnegative, got %d" % n)
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def factorial(n: int) -> int:
    """n! for n >= 0."""
    if n < 0:
        raise ValueError("factorial: n must be nonnegative, got %d" % n)
    return math.factorial(n)


def factorize(n: int) -> PrimeFactorization:
    """Prime factorization of n >= 1 by trial division.

    Returns ordered ``(prime, exponent)`` pairs; ``factorize(1) == ()``.
    Arguments in this package are logarithm arguments, never more than
    a few thousand, so trial division is ample.
    """
    if n < 1:
        raise ValueError("factorize: n must be >= 1, got %d" % n)
    factors: list[tuple[int, int]] = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            factors.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        factors.append((n, 1))
    return tuple(factors)
