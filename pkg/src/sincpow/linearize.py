"""Exact decomposition of sin^p t into scaled remainder functions.

For p = 2m and any 1 <= q <= m:

    sin^(2m) t = 2^-(2m-1) * sum_{k=1}^{m} C(2m, m-k) (-1)^(k+q) f_{2q}(2kt)

and for p = 2m+1 with 0 <= q <= m:

    sin^(2m+1) t = 2^-2m * sum_{k=0}^{m} C(2m+1, m-k) (-1)^(k+q) f_{2q+1}((2k+1)t)

The freedom in q works because the polynomial parts contributed by the
different frequencies cancel identically; c_sum and q_correction_poly
expose those cancellations as decidable exact-arithmetic statements
(a vanishing alternating binomial power sum, and an identically zero
correction polynomial).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import binomial, factorial

__all__ = [
    "LinTerm",
    "Linearization",
    "RangeError",
    "linearize",
    "c_sum",
    "q_correction_poly",
]


class RangeError(ValueError):
    """q_param outside the range for which the decomposition holds."""


@dataclass(frozen=True)
class LinTerm:
    """One summand coeff * f_{f_index}(frequency * t)."""

    coeff: Fraction
    frequency: int
    f_index: int


@dataclass(frozen=True)
class Linearization:
    """The full term list for sin^p t at a given q parameter."""

    p: int
    q_param: int
    terms: tuple[LinTerm, ...]


def _check_range(p: int, q_param: int) -> int:
    """Validate (p, q_param) and return m; raises RangeError otherwise."""
    if p < 1:
        raise RangeError("p must be >= 1, got %d" % p)
    if p % 2 == 0:
        m = p // 2
        if not 1 <= q_param <= m:
            raise RangeError(
                "sin^%d: q_param must satisfy 1 <= q <= %d, got %d" % (p, m, q_param)
            )
    else:
        m = (p - 1) // 2
        if not 0 <= q_param <= m:
            raise RangeError(
                "sin^%d: q_param must satisfy 0 <= q <= %d, got %d" % (p, m, q_param)
            )
    return m


def linearize(p: int, q_param: int) -> Linearization:
    """Exact term list with sin^p t = sum coeff_i * f_{n_i}(freq_i * t)."""
    m = _check_range(p, q_param)
    if p % 2 == 0:
        scale = Fraction(1, 2 ** (2 * m - 1))
        terms = tuple(
            LinTerm(
                coeff=scale * binomial(2 * m, m - k) * (-1) ** (k + q_param),
                frequency=2 * k,
                f_index=2 * q_param,
            )
            for k in range(1, m + 1)
        )
    else:
        scale = Fraction(1, 2 ** (2 * m))
        terms = tuple(
            LinTerm(
                coeff=scale * binomial(2 * m + 1, m - k) * (-1) ** (k + q_param),
                frequency=2 * k + 1,
                f_index=2 * q_param + 1,
            )
            for k in range(m + 1)
        )
    return Linearization(p=p, q_param=q_param, terms=terms)


def c_sum(p: int, q: int) -> Fraction:
    """The prefactored alternating binomial power sum for sin^p at q.

    Even p = 2m:  2^-(2m-1) * sum_{k=1}^m (-1)^(k+q) C(2m, m-k) (2k)^(2q-2).
    Odd  p = 2m+1: 2^-2m   * sum_{k=0}^m (-1)^(k+q) C(2m+1, m-k) (2k+1)^(2q-1).

    Vanishes exactly for 2 <= q <= m (even case) and 1 <= q <= m (odd
    case); those cancellations are what keep the logarithmic pieces of
    the closed forms finite.
    """
    if p < 2:
        raise ValueError("c_sum: p must be >= 2, got %d" % p)
    if q < 1:
        raise ValueError("c_sum: q must be >= 1, got %d" % q)
    if p % 2 == 0:
        m = p // 2
        total = sum(
            (-1) ** (k + q) * binomial(2 * m, m - k) * (2 * k) ** (2 * q - 2)
            for k in range(1, m + 1)
        )
        return Fraction(total, 2 ** (2 * m - 1))
    m = (p - 1) // 2
    total = sum(
        (-1) ** (k + q) * binomial(2 * m + 1, m - k) * (2 * k + 1) ** (2 * q - 1)
        for k in range(m + 1)
    )
    return Fraction(total, 2 ** (2 * m))


def q_correction_poly(p: int, q_param: int) -> tuple[Fraction, ...]:
    """The correction polynomial of the decomposition, degree-indexed.

    Built symbolically with exact coefficients: the binomial-weighted
    combination of the Maclaurin polynomial parts that the remainder
    functions replace, plus the constant term.  It is identically zero
    whenever (p, q_param) is in range, which is exactly why linearize's
    identity holds; returning the coefficients makes that a decidable
    check rather than a sampled one.
    """
    m = _check_range(p, q_param)
    if p % 2 == 0:
        q = q_param
        # Constant C(2m, m)/2^(2m) plus 2^-(2m-1) sum_k C(2m, m-k) (-1)^k P_{2q-2}(2kt)
        coeffs = [Fraction(0)] * (2 * q - 1)
        coeffs[0] = Fraction(binomial(2 * m, m), 2 ** (2 * m))
        for j in range(q):
            s = sum(
                (-1) ** k * binomial(2 * m, m - k) * (2 * k) ** (2 * j)
                for k in range(1, m + 1)
            )
            coeffs[2 * j] += Fraction((-1) ** j * s, 2 ** (2 * m - 1) * factorial(2 * j))
        return tuple(coeffs)
    q = q_param
    if q == 0:
        # P_{-1} is the zero polynomial; nothing to cancel.
        return ()
    # 2^-2m sum_k C(2m+1, m-k) (-1)^k P_{2q-1}((2k+1)t)
    coeffs = [Fraction(0)] * (2 * q)
    for j in range(q):
        s = sum(
            (-1) ** k * binomial(2 * m + 1, m - k) * (2 * k + 1) ** (2 * j + 1)
            for k in range(m + 1)
        )
        coeffs[2 * j + 1] += Fraction(
            (-1) ** j * s, 2 ** (2 * m) * factorial(2 * j + 1)
        )
    return tuple(coeffs)
