"""Smoke tests for the python bindings."""

from fractions import Fraction

import pytest

import dynbv


def test_reference_constants():
    c0 = dynbv.find_c0()
    assert abs(c0 - 2.4931) < 1e-3
    assert abs(dynbv.f1(c0) + 0.4845) < 1e-3
    assert abs(dynbv.f0(1.0) - 0.337538) < 1e-5
    assert abs(dynbv.mu_zero(1.0) - 4.71828) < 1e-4
    assert dynbv.c_star_exponential() == 2.0
    assert dynbv.c_star_geometric(0.5) == 3.0


def test_exact_rationals_cross_check():
    assert dynbv.hat_p(2, 1) == Fraction(1, 2)
    assert dynbv.hat_p(3, 2) == Fraction(1, 5)
    assert dynbv.delta_F_first(2, 3) == Fraction(-1, 2)
    assert dynbv.discard_probs_A(1, 1) == (
        Fraction(3, 8),
        Fraction(3, 8),
        Fraction(1, 4),
    )
    # enumeration returns (x0, x^(1-r), x^(1-k)) order
    x0, lost_r, lost_k = dynbv.exact_discard_A(2, 1)
    a_lost_r, a_lost_k, a_x0 = dynbv.discard_probs_A(2, 1)
    assert (lost_r, lost_k, x0) == (a_lost_r, a_lost_k, a_x0)
    assert dynbv.delta_A(2, 1) == Fraction(-1, 6)
    assert dynbv.delta_B(2, 1) == Fraction(-8, 15)


def test_tiny_chain_exact():
    assert dynbv.exact_tiny_chain_drift(2, 2, 1, 1, 1) == Fraction(5, 16)
    assert dynbv.exact_tiny_chain_drift(4, 2, 1, 1, 0) == 0


def test_symmetry_check():
    assert dynbv.conditional_symmetry_check(3)
    assert not dynbv.conditional_symmetry_check(3, perturbed=True)


def test_monte_carlo_surface():
    est = dynbv.estimate_degenerate_drift(n=100, mu=2, c=1.0, eps=0.0, trials=500, seed=1)
    assert est.mean == 0.0
    assert est.trials == 500
    est2 = dynbv.estimate_degenerate_drift(n=4, mu=2, c=1.0, eps=0.5, trials=50000, seed=2)
    exact = float(dynbv.exact_tiny_chain_drift(4, 2, 1, 1, 2))
    assert abs(est2.mean - exact) < 4 * est2.standard_error

    f = dynbv.conditional_eject_frequency(r=1, n=500, m=1, mu=2, c=1.0, trials=20000, seed=3)
    assert f.accepted > 1000
    assert abs(f.frequency - 0.5) < 4 * f.standard_error + 0.01

    fr3 = dynbv.estimate_state_drift(
        kind="F", r=3, k=0, n=2000, m=2, mu=2, c=1.0, trials=20000, seed=4
    )
    assert abs(fr3.mean + 0.5) < 3 * fr3.standard_error + 0.03


def test_invalid_arguments():
    with pytest.raises(ValueError):
        dynbv.estimate_degenerate_drift(n=10, mu=2, c=0.0, eps=0.1, trials=10)
    with pytest.raises(ValueError):
        dynbv.exact_tiny_chain_drift(7, 2, 1, 1, 1)
