"""Maclaurin polynomials of sin/cos and their remainder functions.

``P_n`` is the degree-n Maclaurin polynomial of sin (n odd) or cos
(n even), with ``P_{-1}`` identically zero.  The remainder function
``f_n`` is the signed difference normalized to look like t^n/n! at the
origin:

    f_n(t) = sum_{j>=0} (-1)^j t^(n+2j) / (n+2j)!

equivalently f_{2r+1} = (-1)^r (sin - P_{2r-1}) and
f_{2r+2} = (-1)^(r+1) (cos - P_{2r}).  These satisfy the calculus facts
the rest of the package leans on: f'_{n+1} = f_n, f_n(t)/t^n -> 1/n!
as t -> 0, and the half-line moment integral of f_n(t)/t^n equals
pi / (2 (n-1)!).

Evaluation strategy: the direct form trig(t) - P_{n-2}(t) loses about
n*log10(e|t|/n) digits to cancellation for small |t|, so below the
threshold |t| < n we sum the tail series instead, where it is
alternating with decreasing terms.  Above the threshold the direct
subtraction is benign.  This keeps relative error within 1e-12 for
|t| <= 100 and n <= 40; larger n is out of contract.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .exact import factorial
from .symvalue import SymValue, sym_pi

__all__ = [
    "TaylorPoly",
    "RemainderFn",
    "taylor_poly",
    "poly_eval",
    "f_eval",
    "f_eval_array",
    "f_limit_ratio",
    "j_value",
]


@dataclass(frozen=True)
class TaylorPoly:
    """Degree-indexed exact coefficients of P_n; n = -1 is the zero poly."""

    n: int
    coefficients: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.n < -1:
            raise ValueError("TaylorPoly: n must be >= -1, got %d" % self.n)
        expected = 0 if self.n < 0 else self.n + 1
        if len(self.coefficients) != expected:
            raise ValueError(
                "TaylorPoly: need %d coefficients for n=%d, got %d"
                % (expected, self.n, len(self.coefficients))
            )


@dataclass(frozen=True)
class RemainderFn:
    """The remainder function f_n."""

    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("RemainderFn: n must be >= 1, got %d" % self.n)


def taylor_poly(n: int) -> TaylorPoly:
    """P_n with exact rational coefficients, for n >= -1."""
    if n < -1:
        raise ValueError("taylor_poly: n must be >= -1, got %d" % n)
    if n == -1:
        return TaylorPoly(-1, ())
    coeffs = [Fraction(0)] * (n + 1)
    start = 1 if n % 2 else 0
    for d in range(start, n + 1, 2):
        k = d // 2
        coeffs[d] = Fraction((-1) ** k, factorial(d))
    return TaylorPoly(n, tuple(coeffs))


def poly_eval(p: TaylorPoly, t: float) -> float:
    """Horner evaluation of P_n at t in double precision."""
    acc = 0.0
    for c in reversed(p.coefficients):
        acc = acc * t + (c.numerator / c.denominator)
    return acc


@lru_cache(maxsize=None)
def _pcoeffs_u(m: int) -> tuple[float, ...]:
    """Float coefficients of P_m in powers of u = t^2.

    For odd m the leading factor t is applied by the caller.  Built
    incrementally so no individual factorial overflows a double.
    """
    if m < 0:
        return ()
    r = m // 2
    out = [1.0]
    c = 1.0
    for k in range(1, r + 1):
        if m % 2:
            c /= (2 * k) * (2 * k + 1)
        else:
            c /= (2 * k - 1) * (2 * k)
        out.append(c if k % 2 == 0 else -c)
    return tuple(out)


def _poly_u_eval(m: int, t: float) -> float:
    """P_m(t) via the cached u-basis coefficients."""
    cs = _pcoeffs_u(m)
    if not cs:
        return 0.0
    u = t * t
    acc = 0.0
    for c in reversed(cs):
        acc = acc * u + c
    return acc * t if m % 2 else acc


def _f_sign(n: int) -> float:
    # f_n = sign * (trig - P_{n-2}) with sign (-1)^((n-1)/2) for odd n,
    # (-1)^(n/2) for even n.
    half = (n - 1) // 2 if n % 2 else n // 2
    return -1.0 if half % 2 else 1.0


def _f_series(n: int, t: float) -> float:
    # Alternating tail series; terms strictly decrease for |t| < n, so
    # truncation error is below the first omitted term.
    if t == 0.0:
        return 0.0
    u = t * t
    term = t**n / factorial(n)
    total = term
    j = 0
    while True:
        j += 1
        term = -term * u / ((n + 2 * j - 1) * (n + 2 * j))
        total += term
        if abs(term) <= 1e-18 * abs(total):
            return total


def f_eval(f: RemainderFn | int, t: float) -> float:
    """f_n(t) in double precision, accurate to 1e-12 relative.

    Accepts either a RemainderFn or a bare index n.
    """
    n = f.n if isinstance(f, RemainderFn) else int(f)
    if n < 1:
        raise ValueError("f_eval: index must be >= 1, got %d" % n)
    if abs(t) < n:
        return _f_series(n, t)
    sign = _f_sign(n)
    trig = math.sin(t) if n % 2 else math.cos(t)
    return sign * (trig - _poly_u_eval(n - 2, t))


def f_eval_array(n: int, t: np.ndarray) -> np.ndarray:
    """Vectorized f_n over an array of points, same accuracy as f_eval."""
    if n < 1:
        raise ValueError("f_eval_array: index must be >= 1, got %d" % n)
    t = np.asarray(t, dtype=float)
    out = np.empty_like(t)
    small = np.abs(t) < n
    if small.any():
        out[small] = _f_series_array(n, t[small])
    big = ~small
    if big.any():
        tb = t[big]
        trig = np.sin(tb) if n % 2 else np.cos(tb)
        cs = _pcoeffs_u(n - 2)
        if cs:
            u = tb * tb
            acc = np.zeros_like(tb)
            for c in reversed(cs):
                acc = acc * u + c
            if (n - 2) % 2:
                acc = acc * tb
        else:
            acc = 0.0
        out[big] = _f_sign(n) * (trig - acc)
    return out


def _f_series_array(n: int, t: np.ndarray) -> np.ndarray:
    # Shared Horner over enough terms for the largest |t| in the batch.
    if t.size == 0:
        return t.copy()
    tmax = float(np.max(np.abs(t)))
    if tmax == 0.0:
        return np.zeros_like(t)
    coeffs = [1.0 / factorial(n)]
    scale = coeffs[0] * tmax**n
    term = scale
    j = 0
    while abs(term) > 1e-20 * scale and j < 2000:
        j += 1
        coeffs.append(-coeffs[-1] / ((n + 2 * j - 1) * (n + 2 * j)))
        term = term * (tmax * tmax) / ((n + 2 * j - 1) * (n + 2 * j))
    u = t * t
    acc = np.full_like(t, coeffs[-1])
    for c in reversed(coeffs[:-1]):
        acc = acc * u + c
    return acc * t**n


def f_limit_ratio(n: int) -> Fraction:
    """The exact small-t limit of f_n(t)/t^n, namely 1/n!."""
    if n < 1:
        raise ValueError("f_limit_ratio: n must be >= 1, got %d" % n)
    return Fraction(1, factorial(n))


def j_value(n: int) -> SymValue:
    """Exact value of the moment integral of f_n(t)/t^n: pi/(2 (n-1)!)."""
    if n < 1:
        raise ValueError("j_value: n must be >= 1, got %d" % n)
    return sym_pi(Fraction(1, 2 * factorial(n - 1)))
