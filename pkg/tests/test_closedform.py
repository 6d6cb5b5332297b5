"""Convergence classification and exact closed forms."""
from fractions import Fraction

import pytest

from sincpow import (
    ConvergenceClass,
    DivergenceError,
    SymValue,
    classify,
    evaluate,
    j_value,
    linearize,
    sym_log,
    sym_pi,
    sym_to_decimal,
)

from _oracles import decimal_string_to_scaled, sym_decimal_scaled

F = Fraction

# the 13 convergent cells of the p,q <= 5 grid
TABLE_VALUES = {
    (1, 1): sym_pi(F(1, 2)),
    (3, 1): sym_pi(F(1, 4)),
    (5, 1): sym_pi(F(3, 16)),
    (2, 2): sym_pi(F(1, 2)),
    (3, 2): sym_log(F(3, 4), 3),
    (4, 2): sym_pi(F(1, 4)),
    (5, 2): sym_log(F(15, 16), 3) + sym_log(F(-5, 16), 5),
    (3, 3): sym_pi(F(3, 8)),
    (4, 3): sym_log(F(1), 2),
    (5, 3): sym_pi(F(5, 32)),
    (4, 4): sym_pi(F(1, 3)),
    (5, 4): sym_log(F(-45, 32), 3) + sym_log(F(125, 96), 5),
    (5, 5): sym_pi(F(115, 384)),
}


def test_classify_examples():
    assert classify(1, 1) is ConvergenceClass.CONVERGENT
    assert classify(5, 3) is ConvergenceClass.CONVERGENT
    assert classify(2, 1) is ConvergenceClass.DIVERGENT_AT_INFINITY
    assert classify(6, 1) is ConvergenceClass.DIVERGENT_AT_INFINITY
    assert classify(1, 2) is ConvergenceClass.DIVERGENT_AT_ZERO
    assert classify(4, 5) is ConvergenceClass.DIVERGENT_AT_ZERO


def test_classify_validation():
    for p, q in ((0, 1), (1, 0), (-3, 2)):
        with pytest.raises(ValueError):
            classify(p, q)


def test_grid_divergence_pattern():
    at_zero = {(p, q) for p in range(1, 6) for q in range(1, 6) if q > p}
    at_inf = {(2, 1), (4, 1)}
    for p in range(1, 6):
        for q in range(1, 6):
            cls = classify(p, q)
            if (p, q) in at_zero:
                assert cls is ConvergenceClass.DIVERGENT_AT_ZERO
            elif (p, q) in at_inf:
                assert cls is ConvergenceClass.DIVERGENT_AT_INFINITY
            else:
                assert cls is ConvergenceClass.CONVERGENT
    assert len(at_zero) + len(at_inf) == 12


def test_table_values_frozen():
    for (p, q), expected in TABLE_VALUES.items():
        assert evaluate(p, q) == expected, (p, q)


def test_beyond_table_pi_over_8():
    assert evaluate(6, 4) == sym_pi(F(1, 8))


def test_divergence_error_carries_context():
    with pytest.raises(DivergenceError) as info:
        evaluate(2, 1)
    assert info.value.p == 2 and info.value.q == 1
    assert info.value.convergence is ConvergenceClass.DIVERGENT_AT_INFINITY
    assert "diverges at infinity" in str(info.value)
    with pytest.raises(DivergenceError) as info:
        evaluate(3, 4)
    assert info.value.convergence is ConvergenceClass.DIVERGENT_AT_ZERO
    assert "diverges at zero" in str(info.value)


def _convergent_cells(pmax):
    for p in range(1, pmax + 1):
        for q in range(1, p + 1):
            if classify(p, q) is ConvergenceClass.CONVERGENT:
                yield p, q


def test_value_shape():
    # matching parity -> rational multiple of pi; mixed parity -> pure logs
    for p, q in _convergent_cells(30):
        value = evaluate(p, q)
        if (p - q) % 2 == 0:
            assert value.log_terms == (), (p, q)
            assert value.pi_coeff != 0, (p, q)
        else:
            assert value.pi_coeff == 0, (p, q)
            if q >= 2:  # (p odd, q = 1) handled by the pi case above
                assert value.log_terms != (), (p, q)


def test_positivity():
    for p, q in _convergent_cells(30):
        assert float(sym_to_decimal(evaluate(p, q), 15)) > 0, (p, q)


def test_dual_path_spot_checks():
    # recompute from the linearization term list: the substitution
    # u = freq*t turns each term into coeff * freq^(q-1) * (moment of f_q)
    for p, q in ((6, 4), (7, 3), (8, 2), (9, 1)):
        lin = linearize(p, q // 2 if p % 2 == 0 else (q - 1) // 2)
        scalar = sum(
            (term.coeff * term.frequency ** (q - 1) for term in lin.terms),
            start=F(0),
        )
        assert scalar * j_value(q) == evaluate(p, q)


def test_sym_to_decimal_frozen_strings():
    assert sym_to_decimal(sym_pi(F(1, 2)), 10) == "1.5707963268"
    assert sym_to_decimal(sym_pi(F(1, 2)), 1) == "1.6"
    assert sym_to_decimal(SymValue(), 10) == "0.0000000000"
    assert sym_to_decimal(sym_log(F(-1), 2), 3) == "-0.693"
    assert sym_to_decimal(evaluate(4, 3), 12) == "0.693147180560"


def test_sym_to_decimal_digit_range():
    with pytest.raises(ValueError):
        sym_to_decimal(sym_pi(F(1)), 0)
    with pytest.raises(ValueError):
        sym_to_decimal(sym_pi(F(1)), 51)


def _assert_matches_oracle(value, digits):
    text = sym_to_decimal(value, digits)
    got = decimal_string_to_scaled(text, digits)
    want = sym_decimal_scaled(value.pi_coeff, value.log_terms, digits)
    assert abs(got - want) <= 1, (text, want)


def test_sym_to_decimal_against_integer_series():
    # oracle: fixed-point Machin pi and atanh-series logs
    _assert_matches_oracle(sym_log(F(3, 4), 3), 10)
    _assert_matches_oracle(sym_pi(F(115, 384)), 30)
    _assert_matches_oracle(evaluate(5, 4), 50)
    _assert_matches_oracle(evaluate(5, 2), 50)
    _assert_matches_oracle(evaluate(40, 39), 50)
    _assert_matches_oracle(evaluate(39, 38), 50)
    _assert_matches_oracle(evaluate(41, 2), 40)
