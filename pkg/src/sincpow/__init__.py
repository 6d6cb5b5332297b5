"""Exact evaluation of the half-line integrals I(p,q) of sin^p(t)/t^q.

The package computes closed forms as exact rational combinations of pi
and logarithms of primes, classifies divergent (p, q), and ships an
independent quadrature referee with certified error bounds.
"""

from .closedform import (
    ConvergenceClass,
    DivergenceError,
    classify,
    evaluate,
    sym_to_decimal,
)
from .exact import ExactRational, PrimeFactorization, binomial, factorial, factorize
from .linearize import (
    LinTerm,
    Linearization,
    RangeError,
    c_sum,
    linearize,
    q_correction_poly,
)
from .oracle import (
    DEFAULT_PANEL_BUDGET,
    QuadratureResult,
    TailMethod,
    ToleranceError,
    integrate_remainder,
    integrate_sinpow,
)
from .symvalue import SymValue, sym_log, sym_pi
from .taylor import (
    RemainderFn,
    TaylorPoly,
    f_eval,
    f_eval_array,
    f_limit_ratio,
    j_value,
    poly_eval,
    taylor_poly,
)

__version__ = "0.1.0"

__all__ = [
    "ConvergenceClass",
    "DivergenceError",
    "classify",
    "evaluate",
    "sym_to_decimal",
    "ExactRational",
    "PrimeFactorization",
    "binomial",
    "factorial",
    "factorize",
    "LinTerm",
    "Linearization",
    "RangeError",
    "c_sum",
    "linearize",
    "q_correction_poly",
    "DEFAULT_PANEL_BUDGET",
    "QuadratureResult",
    "TailMethod",
    "ToleranceError",
    "integrate_remainder",
    "integrate_sinpow",
    "SymValue",
    "sym_log",
    "sym_pi",
    "RemainderFn",
    "TaylorPoly",
    "f_eval",
    "f_eval_array",
    "f_limit_ratio",
    "j_value",
    "poly_eval",
    "taylor_poly",
    "__version__",
]
