"""Convergence classification and exact closed forms for I(p,q).

I(p,q) denotes the half-line integral of sin^p t / t^q for positive
integers p, q.  It converges exactly when q <= p and additionally
q >= 2 or p is odd: near zero the integrand behaves like t^(p-q), so
q > p diverges there; at infinity the envelope decays like t^-q, which
fails to be summable only for q = 1, where the sign cancellation of
odd powers of sin rescues convergence but the nonnegative even powers
diverge.

Every convergent value is a rational multiple of pi (matching parities
of p and q) or a rational combination of logarithms of integers
(mixed parities), which canonicalize to the prime-log basis of
SymValue.  The four formula cases, with p = 2m or 2m+1 and the
auxiliary parameter q' = q/2 or (q -+ 1)/2 as appropriate:

  even p, even q:  pi 2^-2m    sum_{k=1}^m (-1)^(k+q') C(2m, m-k)   (2k)^(2q'-1) / (2q'-1)!
  odd p,  odd q:   pi 2^-(2m+1) sum_{k=0}^m (-1)^(k+q') C(2m+1, m-k) (2k+1)^(2q') / (2q')!
  even p, odd q:   2^-(2m-1)   sum_{k=2}^m (-1)^(k+q') C(2m, m-k)   (2k)^(2q'-2) / (2q'-2)! * ln k
  odd p,  even q:  2^-2m       sum_{k=1}^m (-1)^(k+q') C(2m+1, m-k) (2k+1)^(2q'-1) / (2q'-1)! * ln(2k+1)
"""

from __future__ import annotations

import enum
from fractions import Fraction

import mpmath as mp

from .exact import binomial, factorial
from .symvalue import SymValue, sym_log, sym_pi

__all__ = [
    "ConvergenceClass",
    "DivergenceError",
    "classify",
    "evaluate",
    "sym_to_decimal",
    "SymValue",
]


class ConvergenceClass(enum.Enum):
    CONVERGENT = "convergent"
    DIVERGENT_AT_ZERO = "at_zero"
    DIVERGENT_AT_INFINITY = "at_infinity"


class DivergenceError(ValueError):
    """Raised when a value is requested for a divergent (p, q)."""

    def __init__(self, p: int, q: int, convergence: ConvergenceClass):
        self.p = p
        self.q = q
        self.convergence = convergence
        side = "zero" if convergence is ConvergenceClass.DIVERGENT_AT_ZERO else "infinity"
        super().__init__("I(%d,%d) diverges at %s" % (p, q, side))


def _check_indices(p: int, q: int) -> None:
    if p < 1:
        raise ValueError("p must be >= 1, got %d" % p)
    if q < 1:
        raise ValueError("q must be >= 1, got %d" % q)


def classify(p: int, q: int) -> ConvergenceClass:
    """Which side, if any, makes I(p,q) diverge."""
    _check_indices(p, q)
    if q > p:
        return ConvergenceClass.DIVERGENT_AT_ZERO
    if q == 1 and p % 2 == 0:
        return ConvergenceClass.DIVERGENT_AT_INFINITY
    return ConvergenceClass.CONVERGENT


def _case_params(p: int, q: int) -> tuple[str, int, int]:
    """Translate (p, q) into the formula case and its (m, q') indices.

    Centralized because this translation is the off-by-one hot spot;
    the range assertions restate each case's hypothesis and can only
    fire on a classify bug.
    """
    if p % 2 == 0:
        m = p // 2
        if q % 2 == 0:
            qq = q // 2
            assert 1 <= qq <= m
            return "pi_even", m, qq
        qq = (q + 1) // 2
        assert 2 <= qq <= m
        return "log_even", m, qq
    m = (p - 1) // 2
    if q % 2 == 1:
        qq = (q - 1) // 2
        assert 0 <= qq <= m
        return "pi_odd", m, qq
    qq = q // 2
    assert 1 <= qq <= m
    return "log_odd", m, qq


def evaluate(p: int, q: int) -> SymValue:
    """The exact value of I(p,q); raises DivergenceError when divergent."""
    convergence = classify(p, q)
    if convergence is not ConvergenceClass.CONVERGENT:
        raise DivergenceError(p, q, convergence)
    case, m, qq = _case_params(p, q)
    if case == "pi_even":
        total = sum(
            (-1) ** (k + qq) * binomial(2 * m, m - k) * (2 * k) ** (2 * qq - 1)
            for k in range(1, m + 1)
        )
        return sym_pi(Fraction(total, 2 ** (2 * m) * factorial(2 * qq - 1)))
    if case == "pi_odd":
        total = sum(
            (-1) ** (k + qq) * binomial(2 * m + 1, m - k) * (2 * k + 1) ** (2 * qq)
            for k in range(m + 1)
        )
        return sym_pi(Fraction(total, 2 ** (2 * m + 1) * factorial(2 * qq)))
    if case == "log_even":
        value = SymValue()
        denom = 2 ** (2 * m - 1) * factorial(2 * qq - 2)
        for k in range(2, m + 1):
            coeff = Fraction(
                (-1) ** (k + qq) * binomial(2 * m, m - k) * (2 * k) ** (2 * qq - 2),
                denom,
            )
            value = value + sym_log(coeff, k)
        return value
    value = SymValue()
    denom = 2 ** (2 * m) * factorial(2 * qq - 1)
    for k in range(1, m + 1):
        coeff = Fraction(
            (-1) ** (k + qq) * binomial(2 * m + 1, m - k) * (2 * k + 1) ** (2 * qq - 1),
            denom,
        )
        value = value + sym_log(coeff, 2 * k + 1)
    return value


def _extra_digits(value: SymValue) -> int:
    """Headroom for coefficients much larger than 1."""
    bits = 0
    for coeff in [value.pi_coeff] + [c for c, _ in value.log_terms]:
        if coeff:
            bits = max(bits, coeff.numerator.bit_length() - coeff.denominator.bit_length())
    return max(0, bits) // 3 + 2


def sym_to_decimal(value: SymValue, digits: int) -> str:
    """Correctly rounded fixed-point decimal of a SymValue.

    Constants carry at least digits+10 guard digits, so the printed
    string is the rounding of the true value (ties aside).
    """
    if not 1 <= digits <= 50:
        raise ValueError("digits must be in 1..50, got %d" % digits)
    with mp.workdps(digits + 15 + _extra_digits(value)):
        x = mp.mpf(value.pi_coeff.numerator) / value.pi_coeff.denominator * mp.pi
        for coeff, arg in value.log_terms:
            x += mp.mpf(coeff.numerator) / coeff.denominator * mp.log(arg)
        scaled = int(mp.nint(x * mp.mpf(10) ** digits))
    sign = "-" if scaled < 0 else ""
    mag = abs(scaled)
    return "%s%d.%0*d" % (sign, mag // 10**digits, digits, mag % 10**digits)
