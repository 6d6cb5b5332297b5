"""Exact symbolic values of the form r*pi + sum_i r_i*ln(p_i).

Every convergent integral handled by this package lands in the
Q-vector space spanned by pi and logarithms of primes, so a value is
represented exactly as a rational pi coefficient plus a canonical list
of (rational coefficient, prime) log terms.  Canonical means: primes
strictly increasing, no zero coefficients.  Equality of values is then
structural equality, which is what the tests rely on.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import factorize

__all__ = ["SymValue", "sym_pi", "sym_log"]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1 if d == 2 else 2
    return True


@dataclass(frozen=True)
class SymValue:
    """An exact rational combination of pi and logs of primes."""

    pi_coeff: Fraction = Fraction(0)
    log_terms: tuple[tuple[Fraction, int], ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.pi_coeff, Fraction):
            object.__setattr__(self, "pi_coeff", Fraction(self.pi_coeff))
        last = 1
        for coeff, arg in self.log_terms:
            if coeff == 0:
                raise ValueError("SymValue: zero log coefficient for ln(%d)" % arg)
            if arg <= last:
                raise ValueError("SymValue: log args must be strictly increasing primes")
            if not _is_prime(arg):
                raise ValueError("SymValue: log arg %d is not prime" % arg)
            last = arg

    @property
    def is_zero(self) -> bool:
        return self.pi_coeff == 0 and not self.log_terms

    def __add__(self, other: "SymValue") -> "SymValue":
        if not isinstance(other, SymValue):
            return NotImplemented
        merged: dict[int, Fraction] = {}
        for coeff, arg in self.log_terms + other.log_terms:
            merged[arg] = merged.get(arg, Fraction(0)) + coeff
        terms = tuple(
            (coeff, arg) for arg, coeff in sorted(merged.items()) if coeff != 0
        )
        return SymValue(self.pi_coeff + other.pi_coeff, terms)

    def __neg__(self) -> "SymValue":
        return self * -1

    def __sub__(self, other: "SymValue") -> "SymValue":
        if not isinstance(other, SymValue):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar: Fraction | int) -> "SymValue":
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        if scalar == 0:
            return SymValue()
        return SymValue(
            self.pi_coeff * scalar,
            tuple((coeff * scalar, arg) for coeff, arg in self.log_terms),
        )

    __rmul__ = __mul__


def sym_pi(coeff: Fraction | int) -> SymValue:
    """The value coeff * pi."""
    coeff = Fraction(coeff)
    return SymValue(pi_coeff=coeff)


def sym_log(coeff: Fraction | int, n: int) -> SymValue:
    """The value coeff * ln(n) for integer n >= 1, expanded over primes."""
    if n < 1:
        raise ValueError("sym_log: n must be >= 1, got %d" % n)
    coeff = Fraction(coeff)
    if coeff == 0 or n == 1:
        return SymValue()
    return SymValue(
        log_terms=tuple((coeff * e, prime) for prime, e in factorize(n))
    )
