from __future__ import annotations

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wright_radii import (
    ConvergenceError,
    EvalResult,
    ParameterError,
    WrightParams,
    log_gamma,
    wright_derivative,
    wright_eval,
)
from wright_radii.kernel import combo_neg_axis, envelope_exponent, term_exponent_max

# Frozen reference values.  The Bessel literals pin the classical reductions
# of the Wright series, so an error in the series, the Gamma recursion, or
# the term ordering shows up as a mismatch far above the assertion floor.
J0_AT_2 = 0.22389077914123567         # J0(2)
J1_AT_2 = 0.57672480775687339         # J1(2)
I1_AT_2 = 1.5906368546373291          # I1(2)
LN_GAMMA_HALF = 0.57236494292470009   # log Gamma(1/2) = log sqrt(pi)
LN_GAMMA_2P5 = 0.28468287047291916    # log Gamma(5/2)


# ----------------------------------------------------------------------------
# parameters and results
# ----------------------------------------------------------------------------

def test_params_reject_nonpositive_rho():
    with pytest.raises(ParameterError, match="rho must be > 0"):
        WrightParams(-0.5, 1.0)
    with pytest.raises(ParameterError):
        WrightParams(0.0, 1.0)


def test_params_reject_nonpositive_beta():
    with pytest.raises(ParameterError, match="beta must be > 0"):
        WrightParams(1.0, 0.0)


def test_params_reject_nonfinite():
    with pytest.raises(ParameterError):
        WrightParams(float("nan"), 1.0)
    with pytest.raises(ParameterError):
        WrightParams(1.0, float("inf"))


def test_shifted_params():
    p = WrightParams(0.5, 1.5)
    q = p.shifted(2)
    assert q.rho == 0.5
    assert q.beta == 2.5


def test_eval_result_invariants():
    with pytest.raises(ParameterError):
        EvalResult(1.0 + 0j, -1e-30, 3)
    with pytest.raises(ParameterError):
        EvalResult(1.0 + 0j, 0.0, 0)


# ----------------------------------------------------------------------------
# log gamma
# ----------------------------------------------------------------------------

def test_log_gamma_frozen_values():
    assert log_gamma(0.5) == pytest.approx(LN_GAMMA_HALF, abs=1e-15)
    assert log_gamma(2.5) == pytest.approx(LN_GAMMA_2P5, abs=1e-15)
    assert log_gamma(1.0) == 0.0
    assert log_gamma(2.0) == 0.0
    assert log_gamma(4.0) == pytest.approx(math.log(6.0), rel=1e-15)


def test_log_gamma_rejects_nonpositive():
    with pytest.raises(ParameterError):
        log_gamma(0.0)
    with pytest.raises(ParameterError):
        log_gamma(-1.0)


@given(st.floats(min_value=0.1, max_value=50.0))
def test_log_gamma_recursion(x):
    # Gamma(x+1) = x Gamma(x), in log form.
    assert log_gamma(x + 1.0) == pytest.approx(
        log_gamma(x) + math.log(x), rel=1e-13, abs=1e-13)


# ----------------------------------------------------------------------------
# series evaluation against Bessel reductions
# ----------------------------------------------------------------------------

def test_value_at_origin_is_reciprocal_gamma():
    for beta in (0.5, 1.0, 1.5, 2.0, 3.0):
        res = wright_eval(WrightParams(1.0, beta), 0.0)
        assert res.value == pytest.approx(math.exp(-log_gamma(beta)), rel=1e-15)
        assert res.terms_used == 1
        assert res.abs_error_bound == 0.0


def test_bessel_j0_reduction(bessel_params):
    # W(1,1; -r^2) = J0(2r); r = 1 here.
    res = wright_eval(bessel_params, -1.0)
    assert abs(res.value - J0_AT_2) <= res.abs_error_bound + 1e-13


def test_bessel_j1_reduction():
    # W(1,2; -r^2) = J1(2r)/r.
    res = wright_eval(WrightParams(1.0, 2.0), -1.0)
    assert abs(res.value - J1_AT_2) <= res.abs_error_bound + 1e-13


def test_bessel_i1_reduction():
    # W(1,2; r^2) = I1(2r)/r.
    res = wright_eval(WrightParams(1.0, 2.0), 1.0)
    assert abs(res.value - I1_AT_2) <= res.abs_error_bound + 1e-13


def test_error_bound_is_a_bound_not_estimate(bessel_params):
    # Truncating at a loose tolerance must still bracket the true value.
    loose = wright_eval(bessel_params, -1.0, tol=1e-4)
    assert loose.abs_error_bound < 1e-4
    assert abs(loose.value - J0_AT_2) <= loose.abs_error_bound + 1e-13
    tight = wright_eval(bessel_params, -1.0, tol=1e-14)
    assert tight.terms_used > loose.terms_used


def test_derivative_shift_identity_value():
    # d/dz W(1,1; z) = W(1,2; z); at z = -1 the right side is J1(2).
    res = wright_derivative(WrightParams(1.0, 1.0), -1.0, 1)
    assert abs(res.value - J1_AT_2) <= res.abs_error_bound + 1e-13


def test_derivative_orders():
    p = WrightParams(0.5, 1.5)
    z = 0.7 - 0.3j
    d2 = wright_derivative(p, z, 2)
    direct = wright_eval(WrightParams(0.5, 2.5), z)
    assert d2.value == pytest.approx(direct.value, rel=1e-12)
    with pytest.raises(ParameterError):
        wright_derivative(p, z, 0)
    with pytest.raises(ParameterError):
        wright_derivative(p, z, 3)


def test_recurrence_identity():
    # W(rho, beta-1; z) = rho z W(rho, beta+rho; z) + (beta-1) W(rho, beta; z)
    for rho, beta in ((0.5, 2.0), (1.0, 3.0), (2.0, 1.5)):
        for z in (0.8, -2.3, 1.1 + 0.9j, -0.4 - 1.7j):
            lhs = wright_eval(WrightParams(rho, beta - 1.0), z)
            up = wright_eval(WrightParams(rho, beta + rho), z)
            mid = wright_eval(WrightParams(rho, beta), z)
            rhs = rho * z * up.value + (beta - 1.0) * mid.value
            budget = (lhs.abs_error_bound + abs(rho * z) * up.abs_error_bound
                      + abs(beta - 1.0) * mid.abs_error_bound)
            scale = max(1.0, abs(lhs.value))
            assert abs(lhs.value - rhs) <= budget + 1e-13 * scale


@given(st.floats(min_value=-4.0, max_value=4.0),
       st.floats(min_value=-4.0, max_value=4.0))
@settings(max_examples=60, deadline=None)
def test_conjugate_symmetry(x, y):
    # Real coefficients: W(conj z) = conj(W(z)).
    p = WrightParams(0.5, 1.5)
    a = wright_eval(p, complex(x, y))
    b = wright_eval(p, complex(x, -y))
    assert b.value == pytest.approx(a.value.conjugate(), rel=1e-12, abs=1e-15)
    assert b.terms_used == a.terms_used


def test_eval_rejects_bad_tol(bessel_params):
    with pytest.raises(ParameterError):
        wright_eval(bessel_params, 1.0, tol=0.0)
    with pytest.raises(ParameterError):
        wright_eval(bessel_params, 1.0, tol=-1e-9)


def test_eval_smallest_tolerance_still_honest(bessel_params):
    # Even at the smallest positive tolerance the reported bound must stay
    # nonzero: a truncated series never gets to claim a zero-width bound.
    res = wright_eval(bessel_params, 1.0, tol=5e-324)
    assert res.abs_error_bound == 5e-324


def test_eval_overflowing_argument_raises(bessel_params):
    # Peak term near exp(2 sqrt(x)) leaves double range around x ~ 1.26e5.
    with pytest.raises(ConvergenceError, match="exceed double-precision"):
        wright_eval(bessel_params, 1.0e8)


# ----------------------------------------------------------------------------
# negative-axis combo in plain doubles
# ----------------------------------------------------------------------------

def test_combo_neg_axis_matches_eval(bessel_params):
    # a=1, b=0 is the plain series at z=-x.
    for x in (0.3, 1.0, 2.7, 6.4):
        val, noise = combo_neg_axis(bessel_params, x)
        direct = wright_eval(bessel_params, -x)
        assert abs(val - direct.value.real) <= noise + direct.abs_error_bound


def test_combo_neg_axis_derivative_weights():
    # a=1, b=-2 in x = r^2 equals d/dr [r W(-r^2)] at rho=beta=1, i.e.
    # J0(2r) - 2r J1(2r); at r = 1 that is J0(2) - 2 J1(2).
    val, noise = combo_neg_axis(WrightParams(1.0, 1.0), 1.0, a=1.0, b=-2.0)
    assert val == pytest.approx(J0_AT_2 - 2.0 * J1_AT_2, abs=noise + 1e-14)


def test_combo_neg_axis_noise_grows_with_cancellation():
    p = WrightParams(1.0, 1.0)
    _, shallow = combo_neg_axis(p, 1.0)
    val, deep = combo_neg_axis(p, 100.0)   # J0(20): peak term ~ e^20
    assert deep > 1e6 * shallow
    # the noise model must cover the actual error: J0(20) = 0.16702466434058315
    assert abs(val - 0.16702466434058315) <= deep


def test_combo_neg_axis_overflow_returns_none():
    # Peak term exceeds double range: caller escalates to wider arithmetic.
    assert combo_neg_axis(WrightParams(1.0, 1.0), 2.0e5) is None


def test_combo_neg_axis_rejects_negative_x(bessel_params):
    with pytest.raises(ParameterError):
        combo_neg_axis(bessel_params, -1.0)


# ----------------------------------------------------------------------------
# exponent envelopes
# ----------------------------------------------------------------------------

def test_term_exponent_max_tracks_peak_term():
    # The largest series term of W(1,1; -x) at x = m^2 is m^(2n)/(n!)^2 at
    # n ~ m, whose log is 2m - ln(2 pi m) + O(1/m) per Stirling.
    p = WrightParams(1.0, 1.0)
    for m in (5.0, 10.0, 20.0, 40.0):
        e = term_exponent_max(p, m * m)
        assert e == pytest.approx(2.0 * m - math.log(2.0 * math.pi * m), abs=0.2)


def test_envelope_sits_below_term_peak(grid_params):
    # Cancellation depth = peak log term minus envelope log scale >= 0 once
    # the asymptotic regime is reached; for rho = 1 the envelope exponent is
    # exactly zero (Bessel-type decay).
    for p in grid_params:
        for x in (400.0, 1600.0, 6400.0):
            assert envelope_exponent(p, x) <= term_exponent_max(p, x) + 1e-9
    assert envelope_exponent(WrightParams(1.0, 1.0), 50.0) == pytest.approx(0.0, abs=1e-12)


def test_envelope_sign_tracks_rho():
    # rho < 1 decays on the negative axis, rho > 1 grows.
    assert envelope_exponent(WrightParams(0.5, 1.0), 100.0) < 0.0
    assert envelope_exponent(WrightParams(2.0, 1.0), 100.0) > 0.0
