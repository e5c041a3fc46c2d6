from __future__ import annotations

import math

import numpy as np
import pytest
import scipy.special as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from wright_radii import (
    NearZeroDenominatorError,
    NormalizedKind,
    WrightParams,
    base_eval,
    convex_functional,
    convex_real,
    log_gamma,
    starlike_functional,
    starlike_real,
    wright_eval,
)
from wright_radii.family import convex_on_circle, starlike_on_circle

# First positive zero of J0, halved: the first zero of g(r) = r J0(2r).
FIRST_G_ZERO_11 = 1.2024127788478864


def test_kind_from_string():
    assert NormalizedKind.from_string("g") is NormalizedKind.G
    assert NormalizedKind.from_string("F") is NormalizedKind.F
    with pytest.raises(Exception):
        NormalizedKind.from_string("q")


# ----------------------------------------------------------------------------
# base evaluation
# ----------------------------------------------------------------------------

def test_base_normalized_at_origin(grid_params):
    for p in grid_params:
        res = base_eval(p, 0.0)
        assert res.value == pytest.approx(1.0, rel=1e-15)


def test_base_is_gamma_scaled_wright(grid_params):
    # Phi(z) = Gamma(beta) W(rho, beta; -z^2).
    for p in grid_params:
        z = 0.8 + 0.4j
        res = base_eval(p, z)
        raw = wright_eval(p, -(z * z))
        scale = math.exp(log_gamma(p.beta))
        assert res.value == pytest.approx(scale * raw.value, rel=1e-14)
        # the Gamma scaling is folded into the inner tolerance
        assert res.abs_error_bound <= 1e-12


def test_base_bessel_reduction(bessel_params):
    # Gamma(1) W(1,1; -r^2) = J0(2r) along the axis.
    for r in (0.25, 0.75, 1.0, 2.0):
        res = base_eval(bessel_params, r)
        assert abs(res.value - sp.j0(2.0 * r)) <= res.abs_error_bound + 1e-13


# ----------------------------------------------------------------------------
# starlikeness functional w(z) = z f'(z)/f(z)
# ----------------------------------------------------------------------------

def test_starlike_g_matches_bessel_form(bessel_params):
    # g(r) = r J0(2r):  w(r) = 1 - 2r J1(2r)/J0(2r).
    for r in (0.1, 0.3, 0.5, 0.9):
        fv = starlike_functional(NormalizedKind.G, bessel_params, r)
        want = 1.0 - 2.0 * r * sp.j1(2.0 * r) / sp.j0(2.0 * r)
        assert fv.value.imag == pytest.approx(0.0, abs=1e-14)
        assert fv.value.real == pytest.approx(want, abs=fv.abs_error_bound + 1e-12)


def test_starlike_h_matches_bessel_form(bessel_params):
    # h(r) = r J0(2 sqrt r):  w(r) = 1 - sqrt(r) J1(2 sqrt r)/J0(2 sqrt r).
    for r in (0.04, 0.25, 0.64):
        s = math.sqrt(r)
        fv = starlike_functional(NormalizedKind.H, bessel_params, r)
        want = 1.0 - s * sp.j1(2.0 * s) / sp.j0(2.0 * s)
        assert fv.value.real == pytest.approx(want, abs=fv.abs_error_bound + 1e-12)


def test_f_reduces_to_g_at_beta_one():
    # The beta-th root normalization is the identity map at beta = 1.
    p = WrightParams(0.5, 1.0)
    for z in (0.3, 0.45 + 0.3j, -0.2 + 0.5j):
        a = starlike_functional(NormalizedKind.F, p, z)
        b = starlike_functional(NormalizedKind.G, p, z)
        assert a.value == pytest.approx(b.value, rel=1e-13)
        c = convex_functional(NormalizedKind.F, p, z)
        d = convex_functional(NormalizedKind.G, p, z)
        assert c.value == pytest.approx(d.value, rel=1e-12)


def test_starlike_at_origin_is_one(grid_params):
    for p in grid_params:
        for kind in NormalizedKind:
            fv = starlike_functional(kind, p, 1e-8)
            assert fv.value == pytest.approx(1.0, abs=1e-7)


def test_starlike_vanishes_at_first_derivative_zero(bessel_params):
    # w(r) = 0 exactly where g'(r) = J0(2r) - 2r J1(2r) = 0.
    from scipy.optimize import brentq
    eta = brentq(lambda r: sp.j0(2 * r) - 2 * r * sp.j1(2 * r), 0.4, 0.9,
                 xtol=1e-14)
    fv = starlike_functional(NormalizedKind.G, bessel_params, eta)
    assert abs(fv.value) < 1e-12


def test_starlike_raises_at_base_zero(bessel_params):
    # f(lambda_1) = 0: the quotient has no certified digits there.
    with pytest.raises(NearZeroDenominatorError):
        starlike_functional(NormalizedKind.G, bessel_params, FIRST_G_ZERO_11)


# ----------------------------------------------------------------------------
# convexity functional C(z) = 1 + z f''(z)/f'(z)
# ----------------------------------------------------------------------------

def test_convex_g_matches_bessel_form(bessel_params):
    # g'(r) = J0(2r) - 2r J1(2r);  g''(r) = -2 J1(2r) - 4r J0(2r).
    for r in (0.1, 0.25, 0.4):
        fv = convex_functional(NormalizedKind.G, bessel_params, r)
        gp = sp.j0(2 * r) - 2 * r * sp.j1(2 * r)
        gpp = -2 * sp.j1(2 * r) - 4 * r * sp.j0(2 * r)
        want = 1.0 + r * gpp / gp
        assert fv.value.real == pytest.approx(want, abs=fv.abs_error_bound + 1e-11)
        assert fv.value.imag == pytest.approx(0.0, abs=1e-13)


def test_convex_at_origin_is_one(grid_params):
    for p in grid_params:
        for kind in NormalizedKind:
            fv = convex_functional(kind, p, 1e-8)
            assert fv.value == pytest.approx(1.0, abs=1e-7)


def test_convex_f_matches_finite_difference():
    # Independent route: difference f'(r) of the explicit beta-th root
    # f(r) = r * Phi(r^2)^(1/beta) and form 1 + r f''/f' numerically.
    p = WrightParams(1.0, 2.0)
    h = 1e-5

    def f(r: float) -> float:
        return r * base_eval(p, r, tol=1e-15).value.real ** (1.0 / p.beta)

    for r in (0.2, 0.35, 0.5):
        d1 = (f(r + h) - f(r - h)) / (2 * h)
        d2 = (f(r + h) - 2 * f(r) + f(r - h)) / (h * h)
        want = 1.0 + r * d2 / d1
        got = convex_real(NormalizedKind.F, p, r)
        assert got == pytest.approx(want, abs=5e-5)


# ----------------------------------------------------------------------------
# route agreement: scalar, real-axis, circle
# ----------------------------------------------------------------------------

def test_real_routes_match_scalar(grid_params):
    for p in grid_params[::3]:
        for kind in NormalizedKind:
            r = 0.2
            assert starlike_real(kind, p, r) == pytest.approx(
                starlike_functional(kind, p, complex(r)).value.real, rel=1e-13)
            assert convex_real(kind, p, r) == pytest.approx(
                convex_functional(kind, p, complex(r)).value.real, rel=1e-12)


def test_circle_routes_match_scalar(bessel_params):
    thetas = np.linspace(0.0, math.pi, 9)
    phases = np.exp(1j * thetas)
    r = 0.45
    for kind in NormalizedKind:
        ws = starlike_on_circle(kind, bessel_params, r, phases)
        cs = convex_on_circle(kind, bessel_params, r, phases)
        for k, th in enumerate(thetas):
            z = r * phases[k]
            assert ws[k] == pytest.approx(
                starlike_functional(kind, bessel_params, z).value, rel=1e-12)
            assert cs[k] == pytest.approx(
                convex_functional(kind, bessel_params, z).value, rel=1e-11)


@given(st.floats(min_value=0.05, max_value=0.55),
       st.floats(min_value=-math.pi, max_value=math.pi))
@settings(max_examples=40, deadline=None)
def test_starlike_conjugate_symmetry(r, theta):
    p = WrightParams(0.5, 1.5)
    z = r * complex(math.cos(theta), math.sin(theta))
    a = starlike_functional(NormalizedKind.G, p, z).value
    b = starlike_functional(NormalizedKind.G, p, z.conjugate()).value
    assert b == pytest.approx(a.conjugate(), rel=1e-11, abs=1e-13)


@given(st.floats(min_value=0.05, max_value=0.4))
@settings(max_examples=30, deadline=None)
def test_starlike_real_decreasing_from_one(r):
    # On (0, eta_1) the real starlikeness functional of G decreases from 1;
    # it stays below 1 wherever it is defined on the positive axis.
    p = WrightParams(1.0, 1.0)
    assert starlike_real(NormalizedKind.G, p, r) < 1.0
