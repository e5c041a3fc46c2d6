"""Certified evaluation of the Wright function series.

The Wright function treated here is

    W(rho, beta; z) = sum_{n >= 0} z^n / (n! Gamma(rho*n + beta)),

entire in z for rho > 0, beta > 0.  Every public evaluation returns the
partial sum together with a rigorous truncation-tail bound: the term ratios
|t_{n+1}/t_n| = |z| / ((n+1) * Gamma(rho*n+rho+beta)/Gamma(rho*n+beta)) are
strictly decreasing, so once three consecutive ratios fall below q0 = 0.5 the
remaining tail is dominated by a geometric series with the last observed
ratio q, giving tail <= |t_last| * q / (1 - q).

Terms are formed in log space, exp(n*log|z| - log n! - log Gamma(rho*n+beta)),
with log n! accumulated incrementally, so no intermediate overflows occur even
when individual factors would overflow a double.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, ParameterError

# Three consecutive ratio samples below this before the geometric bound applies.
_Q0 = 0.5
_LN_Q0 = math.log(_Q0)
_TERM_CAP = 10_000


# ----------------------------------------------------------------------------
# domain types
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class WrightParams:
    """Parameter pair (rho, beta) of the Wright function, both positive."""

    rho: float
    beta: float

    def __post_init__(self) -> None:
        if not (isinstance(self.rho, (int, float)) and math.isfinite(self.rho)):
            raise ParameterError(f"rho must be a finite real, got {self.rho!r}")
        if not (isinstance(self.beta, (int, float)) and math.isfinite(self.beta)):
            raise ParameterError(f"beta must be a finite real, got {self.beta!r}")
        if self.rho <= 0:
            raise ParameterError(f"rho must be > 0 (entire regime), got {self.rho}")
        if self.beta <= 0:
            raise ParameterError(f"beta must be > 0, got {self.beta}")

    def shifted(self, order: int) -> "WrightParams":
        """Parameters of the order-th derivative via the shift identity."""
        return WrightParams(self.rho, self.beta + order * self.rho)


@dataclass(frozen=True)
class EvalResult:
    """Value plus a rigorous truncation-tail bound.

    abs_error_bound bounds |value - W(rho,beta;z)| from the truncated tail
    alone; it is a bound, not an estimate.
    """

    value: complex
    abs_error_bound: float
    terms_used: int

    def __post_init__(self) -> None:
        if self.abs_error_bound < 0:
            raise ParameterError("abs_error_bound must be >= 0")
        if self.terms_used < 1:
            raise ParameterError("terms_used must be >= 1")


# ----------------------------------------------------------------------------
# log-gamma
# ----------------------------------------------------------------------------

def log_gamma(x: float) -> float:
    """ln Gamma(x) for real x > 0.

    Relative error <= 1e-14 on [1e-3, 1e4].
    """
    if not (isinstance(x, (int, float)) and math.isfinite(x)):
        raise ParameterError(f"log_gamma requires a finite real, got {x!r}")
    if x <= 0:
        raise ParameterError(f"log_gamma domain is x > 0, got {x}")
    return math.lgamma(x)


# ----------------------------------------------------------------------------
# series evaluation
# ----------------------------------------------------------------------------

def wright_eval(p: WrightParams, z: complex, tol: float = 1e-12) -> EvalResult:
    """W(rho, beta; z) with a certified truncation bound <= tol.

    Raises ConvergenceError if the geometric-ratio regime with tail <= tol is
    not reached within the term cap.
    """
    if not (tol > 0):
        raise ParameterError(f"tol must be > 0, got {tol}")
    az = abs(z)
    if az == 0.0:
        return EvalResult(complex(1.0 / math.exp(log_gamma(p.beta))), 0.0, 1)

    log_az = math.log(az)
    phase_unit = z / az                     # unit modulus: powers cannot overflow
    phase = complex(1.0)
    log_fact = 0.0
    total = complex(0.0)
    last_log = None
    decays = 0
    rho, beta = p.rho, p.beta

    # Decay detection runs on log magnitudes: exp'd terms underflow to an
    # exact 0.0 long before the series is mathematically done, and a ratio
    # of zeros would stall the certificate.
    for n in range(_TERM_CAP):
        if n > 0:
            log_fact += math.log(n)
            phase *= phase_unit
        log_mag = n * log_az - log_fact - math.lgamma(rho * n + beta)
        if log_mag > 709.0:
            raise ConvergenceError(
                f"series terms for (rho={rho}, beta={beta}, |z|={az:.3g}) "
                "exceed double-precision range")
        mag = math.exp(log_mag)
        total += mag * phase
        if last_log is not None:
            dlog = log_mag - last_log
            decays = decays + 1 if dlog < _LN_Q0 else 0
            if decays >= 3:
                q = math.exp(dlog)
                # Term magnitudes are log-concave in n, so the ratio only
                # shrinks from here: tail <= mag * q / (1 - q).
                tail = mag * (q / (1.0 - q))
                if tail == 0.0:
                    tail = 5e-324           # sub-subnormal tail, over-covered
                if tail <= tol:
                    return EvalResult(total, tail, n + 1)
        last_log = log_mag
    raise ConvergenceError(
        f"series for (rho={rho}, beta={beta}, |z|={az:.3g}) did not certify "
        f"tail <= {tol:g} within {_TERM_CAP} terms"
    )


def wright_derivative(p: WrightParams, z: complex, order: int,
                      tol: float = 1e-12) -> EvalResult:
    """d^order/dz^order W(rho, beta; z) via the shift identity.

    Differentiating the series termwise gives W'(rho, beta; z) =
    W(rho, beta+rho; z), and likewise order 2 shifts beta by 2*rho.
    """
    if order not in (1, 2):
        raise ParameterError(f"order must be 1 or 2, got {order}")
    return wright_eval(p.shifted(order), z, tol)


# ----------------------------------------------------------------------------
# internal: shared-magnitude evaluation on a circle
# ----------------------------------------------------------------------------
# For |u| fixed, the term magnitudes |u|^n/(n! Gamma(rho n + beta)) are a
# scalar sequence shared by every point of the circle; only the unit phases
# differ.  The radii module leans on this to sweep boundaries cheaply.

def circle_eval(p: WrightParams, modulus: float, phases: np.ndarray,
                shifts: tuple[int, ...] = (0,), tol: float = 1e-14) -> np.ndarray:
    """W(rho, beta + s*rho; u) for u = modulus*phases, for each s in shifts.

    phases must be unit-modulus complex.  Returns an array of shape
    (len(shifts), len(phases)).  The stopping rule is the same certified
    geometric-tail criterion as wright_eval, applied to the worst shift.
    """
    if modulus < 0:
        raise ParameterError("modulus must be >= 0")
    rho, beta = p.rho, p.beta
    n_shift = len(shifts)
    if modulus == 0.0:
        out = np.zeros((n_shift, len(phases)), dtype=complex)
        for k, s in enumerate(shifts):
            out[k, :] = 1.0 / math.exp(log_gamma(beta + s * rho))
        return out

    # Magnitude sequences are independent of the phases: fix the term count
    # from them alone, then apply one matrix product against the phase powers.
    log_u = math.log(modulus)
    log_fact = 0.0
    mag_rows: list[list[float]] = []
    last_log = None
    decays = 0
    for n in range(_TERM_CAP):
        if n > 0:
            log_fact += math.log(n)
        log_row = [n * log_u - log_fact - math.lgamma(rho * n + beta + s * rho)
                   for s in shifts]
        log_mag = max(log_row)
        if log_mag > 709.0:
            raise ConvergenceError(
                f"circle series terms for (rho={rho}, beta={beta}, "
                f"|u|={modulus:.3g}) exceed double-precision range")
        mag_rows.append([math.exp(v) for v in log_row])
        if last_log is not None:
            dlog = log_mag - last_log
            decays = decays + 1 if dlog < _LN_Q0 else 0
            if decays >= 3:
                q = math.exp(dlog)
                tail = max(math.exp(log_mag) * (q / (1.0 - q)), 5e-324)
                if tail <= tol:
                    break
        last_log = log_mag
    else:
        raise ConvergenceError(
            f"circle series for (rho={rho}, beta={beta}, |u|={modulus:.3g}) "
            f"did not certify tail <= {tol:g} within {_TERM_CAP} terms"
        )

    n_terms = len(mag_rows)
    powers = np.empty((n_terms, len(phases)), dtype=complex)
    powers[0, :] = 1.0
    if n_terms > 1:
        np.multiply.accumulate(
            np.broadcast_to(phases, (n_terms - 1, len(phases))),
            axis=0, out=powers[1:, :])
    mags = np.asarray(mag_rows, dtype=float)          # (n_terms, n_shift)
    return mags.T @ powers


# ----------------------------------------------------------------------------
# internal: noise-tracked alternating combination on the negative axis
# ----------------------------------------------------------------------------
# The zeros module locates sign changes of real combinations
#
#     s(x) = a*W(rho,beta; -x) + b*x*W(rho,beta+rho; -x),   x > 0,
#
# which collapse to the single alternating series
#
#     s(x) = sum_n (-1)^n x^n (a - b*n) / (n! Gamma(rho n + beta))
#
# because Gamma(rho(n-1) + rho + beta) = Gamma(rho n + beta).  Deep in the
# oscillatory region the partial sums cancel catastrophically; the returned
# noise figure bounds the accumulated rounding (term scale eps * maxmag,
# amplified by the exponent magnitude since terms are formed as exp(log mag),
# with ~sqrt(N) near-maximal terms adding in rms).

def combo_neg_axis(p: WrightParams, x: float, a: float = 1.0,
                   b: float = 0.0) -> tuple[float, float] | None:
    """(value, noise) of s(x) in double precision, or None on overflow."""
    if x < 0:
        raise ParameterError("combo_neg_axis requires x >= 0")
    rho, beta = p.rho, p.beta
    if x == 0.0:
        return a / math.exp(log_gamma(beta)), 2.3e-16 * abs(a)
    log_x = math.log(x)
    log_fact = 0.0
    total = 0.0
    max_mag = 0.0
    max_log = 1.0
    last_mag = None
    decays = 0
    n = 0
    while n < 100_000:
        if n > 0:
            log_fact += math.log(n)
        coeff = a - b * n
        log_mag = n * log_x - log_fact - math.lgamma(rho * n + beta)
        if log_mag > 690.0:
            return None                      # double overflow: caller escalates
        emag = math.exp(log_mag)
        mag = emag * abs(coeff)
        total += mag if (n % 2 == 0) == (coeff >= 0) else -mag
        if mag > max_mag:
            max_mag = mag
            max_log = max(abs(log_mag), abs(log_fact), 1.0)
        if emag == 0.0 and max_mag > 0.0 and n > 1:
            # The exp factor is log-concave in n: an exact underflow after
            # positive terms can only happen on the falling side, so every
            # remaining term rounds below the subnormal floor.
            break
        if last_mag is not None and last_mag > 0.0:
            q = mag / last_mag
            decays = decays + 1 if q < _Q0 else 0
            if decays >= 3 and mag < 1e-18 * max_mag:
                break
        last_mag = mag
        n += 1
    noise = 2.3e-16 * max_mag * max_log * max(1.0, math.sqrt(n))
    return total, noise


def term_exponent_max(p: WrightParams, x: float) -> float:
    """Largest log term magnitude of the series at -x (ternary search).

    Measures the cancellation depth: double precision retains about
    (690 - value)/ln 10 digits... more precisely the rounding floor sits near
    exp(value) * 1e-16.
    """
    if x <= 1e-300:
        return 0.0
    rho, beta = p.rho, p.beta
    log_x = math.log(x)

    def phi(t: float) -> float:
        return t * log_x - math.lgamma(t + 1.0) - math.lgamma(rho * t + beta)

    lo = 0.0
    hi = 20.0 + 4.0 * x ** (1.0 / (1.0 + rho)) * (1.0 + 1.0 / rho)
    for _ in range(200):
        m1 = lo + (hi - lo) / 3.0
        m2 = hi - (hi - lo) / 3.0
        if phi(m1) < phi(m2):
            lo = m1
        else:
            hi = m2
    return max(phi(0.5 * (lo + hi)), 0.0)


def envelope_exponent(p: WrightParams, x: float) -> float:
    """Log scale of the oscillation envelope of W(rho,beta; -x) for large x.

    From the saddle of the inverse-Laplace representation: the dominant
    oscillatory saddle contributes exp(c*cos(pi/(1+rho))) against the series
    max exp(c/rho * ...); concretely the envelope exponent is

        (rho*x)^(1/(1+rho)) * (cos(pi/(1+rho)) - (1/rho)*cos(pi*rho/(1+rho)))

    which is 0 for rho = 1 (Bessel), negative for rho < 1, positive for
    rho > 1.  Used only to budget working precision, never for values.
    """
    if x <= 1e-300:
        return 0.0
    rho = p.rho
    c = (rho * x) ** (1.0 / (1.0 + rho))
    return c * (math.cos(math.pi / (1.0 + rho))
                - (1.0 / rho) * math.cos(math.pi * rho / (1.0 + rho)))
