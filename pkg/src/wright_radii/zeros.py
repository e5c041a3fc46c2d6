"""Real zeros of the Wright base functions and normalized-function derivatives.

Everything here reduces to sign changes of one scalar family on the negative
axis,

    s(x) = a * W(rho, beta; -x) + b * x * W(rho, beta + rho; -x)
         = sum_n (-1)^n x^n (a - b n) / (n! Gamma(rho n + beta)),

since Gamma(rho(n-1) + rho + beta) = Gamma(rho n + beta) merges the two sums:

    base function           (a, b) = (1,  0)   in x = r^2 (form minus_z_squared)
                                               or x = r   (form minus_z)
    g' of kind G            (a, b) = (1, -2)   in x = r^2
    v = beta*Phi + r*Phi'   (a, b) = (beta, -2) in x = r^2   (f' zeros, kind F)
    h' of kind H            (a, b) = (1, -1)   in x = r

Deep zeros sit under catastrophic cancellation: the largest series term grows
like exp(E_max(x)) while the signal envelope decays (rho < 1) or grows slower
(rho = 1) than that, so double precision dies after the first handful of
zeros.  The evaluator degrades gracefully: double precision while the value
clears 30x its accumulated-rounding noise, otherwise mpmath at a working
precision budgeted from the cancellation depth, with Gamma(rho n + beta)
advanced along q interleaved chains (rho = p/q rational) instead of calling
gamma per term.

Zero tables are cached per parameter set and extended on demand; the cache is
shared read-only after construction (guarded by a lock during extension).
"""
from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from mpmath import mp

from .errors import (NonIntegerWindingError, ParameterError, ScanExhaustedError)
from .family import NormalizedKind
from .kernel import (WrightParams, circle_eval, combo_neg_axis,
                     envelope_exponent, log_gamma, term_exponent_max)

_LN10 = math.log(10.0)
_FORMS = ("minus_z_squared", "minus_z")
_SCAN_CAP_PER_ZERO = 10_000


# ----------------------------------------------------------------------------
# domain type
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class ZeroTable:
    """Ordered positive zeros of one real function, refined to width tol."""

    params: WrightParams
    form: str
    zeros: tuple[float, ...]
    tol: float

    def __post_init__(self) -> None:
        if self.form not in _FORMS:
            raise ParameterError(f"form must be one of {_FORMS}, got {self.form!r}")
        if len(self.zeros) == 0:
            raise ParameterError("zero table may not be empty")
        if self.zeros[0] <= 0:
            raise ParameterError("zeros must be positive")
        for lo, hi in zip(self.zeros, self.zeros[1:]):
            if not hi > lo:
                raise ParameterError("zeros must be strictly increasing")

    def __len__(self) -> int:
        return len(self.zeros)


# ----------------------------------------------------------------------------
# high-precision combo evaluation
# ----------------------------------------------------------------------------

class _ComboSeries:
    """Certified-sign evaluation of s(x) with adaptive precision."""

    def __init__(self, p: WrightParams, a: float, b: float):
        self.p = p
        self.a = float(a)
        self.b = float(b)
        fr = Fraction(p.rho).limit_denominator(64)
        exact = abs(fr.numerator / fr.denominator - p.rho) < 1e-15
        self._chain_q = fr.denominator if exact else None
        self._chain_p = fr.numerator if exact else None

    # -- mpmath path ---------------------------------------------------------

    def _eval_mp(self, x: float, dps: int):
        """s(x) summed at working precision dps (plus guard digits).

        Inner-loop bookkeeping (peak tracking, decay detection, stop rule)
        runs on integer log2 magnitudes from mp.mag, so each term costs a
        handful of real mp operations; the stop threshold is at least as
        strict as max_term * 10^(-dps-5).
        """
        rho, beta, a, b = self.p.rho, self.p.beta, self.a, self.b
        with mp.workdps(dps + 10):
            mpx = mp.mpf(x)
            stop_off = -int((dps + 5) * 3.321928094887362) - 2
            total = mp.mpf(0)
            term_num = mp.mpf(1)               # x^n / n!
            max_mag2 = -(10 ** 9)
            last_mag2 = None
            decays = 0
            q = self._chain_q
            if q is not None:
                pnum = self._chain_p
                gammas = [mp.gamma(rho * j + beta) for j in range(q)]
                args = [mp.mpf(rho * j + beta) for j in range(q)]
            pure = (b == 0.0) and (a == 1.0)
            n = 0
            while n < 500_000:
                if q is not None:
                    g = gammas[n % q]
                else:
                    g = mp.gamma(rho * n + beta)
                if pure:
                    t = term_num / g
                else:
                    t = term_num * (a - b * n) / g
                total = total - t if n % 2 else total + t
                m2 = mp.mag(t)
                if m2 > max_mag2:
                    max_mag2 = m2
                if last_mag2 is not None:
                    decays = decays + 1 if m2 < last_mag2 else 0
                    if decays >= 3 and m2 < max_mag2 + stop_off:
                        break
                last_mag2 = m2
                term_num = term_num * mpx / (n + 1)
                if q is not None:
                    j = n % q
                    gv, av = gammas[j], args[j]
                    for _ in range(pnum):
                        gv = gv * av
                        av = av + 1
                    gammas[j] = gv
                    args[j] = av
                n += 1
            return total

    def _dps_budget(self, x: float) -> int:
        e_max = term_exponent_max(self.p, x)
        e_sig = envelope_exponent(self.p, x)
        return max(25, int(20.0 + (e_max - min(e_sig, 0.0)) / _LN10))

    # -- certified evaluation --------------------------------------------------

    def certified(self, x: float):
        """Value of s(x) whose sign is trustworthy; float or mpf."""
        if x < 0:
            raise ParameterError("negative x in zero scan")
        e_max = term_exponent_max(self.p, x)
        if e_max < 600.0:
            res = combo_neg_axis(self.p, x, self.a, self.b)
            if res is not None:
                v, noise = res
                if abs(v) > 30.0 * noise:
                    return v
        dps = self._dps_budget(x)
        for _ in range(3):
            v = self._eval_mp(x, dps)
            with mp.workdps(30):
                floor = mp.mpf(10) ** (-(dps - 8)) * mp.exp(e_max)
            if abs(v) > floor:
                return v
            dps += 40
        return v


# ----------------------------------------------------------------------------
# scanning and refinement
# ----------------------------------------------------------------------------

def _sign(v) -> bool:
    return v < 0


def _ab_scale(fm, f_replaced) -> float:
    # Anderson-Bjorck weight for the stagnant endpoint; falls back to the
    # Illinois halving when the ratio is degenerate or overflows float range.
    try:
        m = 1.0 - float(fm / f_replaced)
    except (OverflowError, ZeroDivisionError):
        return 0.5
    if not (0.0 < m < 1e308):
        return 0.5
    return m


def _refine_bracket(f, a: float, b: float, fa, fb, xtol: float) -> tuple[float, float]:
    """Shrink a sign-change bracket to width <= xtol.

    Anderson-Bjorck-weighted false position, with a forced midpoint whenever
    a 4-iteration block fails to shrink the bracket to a quarter; keeps the
    bracket at every step, so correctness matches plain bisection while
    spending far fewer of the expensive high-precision evaluations on deep
    zeros.
    """
    side = 0
    checkpoint = b - a
    use_mid = False
    for it in range(300):
        if b - a <= xtol:
            break
        if it % 4 == 0:
            use_mid = it > 0 and (b - a) > 0.25 * checkpoint
            checkpoint = b - a
        if not use_mid and fb != fa:
            t = float(fa / (fa - fb))
            # keep the step at least a fraction of xtol away from both ends:
            # a root sitting at a bracket edge otherwise degenerates the
            # secant into clamped midpoints (bisection-rate endgame)
            t_min = min(0.45, 0.45 * xtol / (b - a))
            t = min(max(t, t_min), 1.0 - t_min)
            xm = a + t * (b - a)
            if not (a < xm < b):
                xm = 0.5 * (a + b)
        else:
            xm = 0.5 * (a + b)
            use_mid = False
        fm = f(xm)
        if _sign(fm) == _sign(fa):
            scale = _ab_scale(fm, fa)
            a, fa = xm, fm
            if side == 1:
                fb = fb * scale
            side = 1
        else:
            scale = _ab_scale(fm, fb)
            b, fb = xm, fm
            if side == -1:
                fa = fa * scale
            side = -1
    return a, b


def _xtol_for(x: float, tol: float, form: str) -> float:
    # x-space width giving form-space width tol: dr = dx/(2 sqrt(x)) for the
    # squared form, dx directly for minus_z.  Floor at the double-
    # representation limit.
    if form == "minus_z_squared":
        want = tol * 2.0 * math.sqrt(max(x, 1e-12))
    else:
        want = tol
    return max(4.0 * math.ulp(max(x, 1.0)), want)


def _scan_zeros(ev: _ComboSeries, count: int, tol: float, form: str) -> list[float]:
    """First `count` positive x with s(x) = 0, by sign-change scan.

    Once three zeros are known, the next one is bracketed around a quadratic
    extrapolation of the last three (2 evaluations in the common case); the
    plain stepping scan covers start-up and recovers any missed prediction.
    """
    zeros: list[float] = []
    x = 1e-12
    fx = ev.certified(x)
    step = 0.05
    steps = 0
    cap = _SCAN_CAP_PER_ZERO * count

    def found(lo: float, hi: float, flo, fhi) -> None:
        a, b = _refine_bracket(ev.certified, lo, hi, flo, fhi,
                               _xtol_for(hi, tol, form))
        zeros.append(0.5 * (a + b))

    while len(zeros) < count:
        if steps >= cap:
            raise ScanExhaustedError(
                f"found only {len(zeros)} of {count} zeros for rho={ev.p.rho}, "
                f"beta={ev.p.beta} within {cap} scan steps; parameters possibly "
                f"outside the real-zero regime")
        if len(zeros) >= 3:
            z1, z2, z3 = zeros[-3:]
            pred = z1 - 3.0 * z2 + 3.0 * z3
            gap = z3 - z2
            lo = pred - 0.06 * gap
            if lo > x:
                flo = ev.certified(lo)
                steps += 1
                if _sign(flo) == _sign(fx):
                    hi = pred + 0.06 * gap
                    fhi = ev.certified(hi)
                    steps += 1
                    if _sign(fhi) != _sign(flo):
                        found(lo, hi, flo, fhi)
                        x, fx = hi, fhi
                        step = 0.12 * gap
                        continue
                    x, fx = hi, fhi        # prediction short: resume stepping
                    step = 0.12 * gap
                else:
                    found(x, lo, fx, flo)  # prediction long: zero before lo
                    x, fx = lo, flo
                    step = 0.12 * gap
                    continue
        x2 = x + step
        fx2 = ev.certified(x2)
        steps += 1
        if _sign(fx) != _sign(fx2):
            found(x, x2, fx, fx2)
            if len(zeros) >= 2:
                step = 0.25 * (zeros[-1] - zeros[-2])
        x, fx = x2, fx2
        step *= 1.05
        if len(zeros) >= 2:
            step = min(step, 0.6 * (zeros[-1] - zeros[-2]))
        else:
            # until gap statistics exist, keep the step within 5% of scale;
            # zero gaps of these series grow at least that fast
            step = min(step, 0.05 * (1.0 + x))
    return zeros


# ----------------------------------------------------------------------------
# cached table construction
# ----------------------------------------------------------------------------

_cache_lock = threading.Lock()
_x_zero_cache: dict[tuple[float, float, float, float, str],
                    tuple[float, list[float]]] = {}


def _axis_zeros(p: WrightParams, a: float, b: float, count: int,
                tol: float, form: str) -> list[float]:
    """Cached x-space zeros of s(x); extends or tightens the cache as needed.

    Keyed per form because the refinement width that realizes a form-space
    tolerance differs between the two forms (2 sqrt(x) tol vs tol).
    """
    key = (p.rho, p.beta, float(a), float(b), form)
    with _cache_lock:
        cached = _x_zero_cache.get(key)
        if cached is not None:
            cached_tol, xs = cached
            if cached_tol <= tol and len(xs) >= count:
                return xs[:count]
        ev = _ComboSeries(p, a, b)
        xs = _scan_zeros(ev, count, tol, form)
        _x_zero_cache[key] = (tol, xs)
        return xs[:count]


def positive_zeros(p: WrightParams, form: str, count: int,
                   tol: float = 1e-12) -> ZeroTable:
    """First `count` positive zeros of the base function.

    form minus_z_squared: zeros of r -> Gamma(beta) W(rho,beta; -r^2);
    form minus_z:         zeros of r -> Gamma(beta) W(rho,beta; -r).
    The two tables describe the same x-axis sign changes, related by r -> r^2.
    """
    if form not in _FORMS:
        raise ParameterError(f"form must be one of {_FORMS}, got {form!r}")
    if not (isinstance(count, int) and count >= 1):
        raise ParameterError(f"count must be a positive integer, got {count!r}")
    if not (tol > 0):
        raise ParameterError(f"tol must be > 0, got {tol}")
    xs = _axis_zeros(p, 1.0, 0.0, count, tol, form)
    rs = [math.sqrt(x) for x in xs] if form == "minus_z_squared" else list(xs)
    return ZeroTable(p, form, tuple(rs), tol)


_DERIV_COMBO = {
    NormalizedKind.G: ("minus_z_squared", lambda beta: (1.0, -2.0)),
    NormalizedKind.F: ("minus_z_squared", lambda beta: (beta, -2.0)),
    NormalizedKind.H: ("minus_z", lambda beta: (1.0, -1.0)),
}


def derivative_positive_zeros(kind: NormalizedKind, p: WrightParams, count: int,
                              tol: float = 1e-12) -> ZeroTable:
    """First `count` positive zeros of d/dr [normalized function](r).

    Kind G: g'(r) = Gamma(beta)[W(-r^2) - 2r^2 W1(-r^2)];
    kind H: h'(r) = Gamma(beta)[W(-r) - r W1(-r)];
    kind F: f'(r) vanishes exactly where v(r) = beta*Phi(r) + r*Phi'(r) does
    (f' = Phi^(1/beta) * v / (beta*Phi), and Phi > 0 before its first zero).
    """
    if kind not in _DERIV_COMBO:
        raise ParameterError(f"unknown kind {kind!r}")
    if not (isinstance(count, int) and count >= 1):
        raise ParameterError(f"count must be a positive integer, got {count!r}")
    form, combo = _DERIV_COMBO[kind]
    a, b = combo(p.beta)
    xs = _axis_zeros(p, a, b, count, tol, form)
    rs = [math.sqrt(x) for x in xs] if form == "minus_z_squared" else list(xs)
    return ZeroTable(p, form, tuple(rs), tol)


# ----------------------------------------------------------------------------
# residuals (CLI support)
# ----------------------------------------------------------------------------

def base_residual(p: WrightParams, form: str, r: float) -> float:
    """|Gamma(beta) W(-r^2)| resp. |Gamma(beta) W(-r)| with certified sign path."""
    x = r * r if form == "minus_z_squared" else r
    ev = _ComboSeries(p, 1.0, 0.0)
    return abs(float(ev.certified(x))) * math.exp(log_gamma(p.beta))


# ----------------------------------------------------------------------------
# argument-principle counting
# ----------------------------------------------------------------------------

def _mp_wright_complex(p: WrightParams, u: complex, dps: int):
    """W(rho, beta; u) for complex u at working precision dps (rescue path)."""
    rho, beta = p.rho, p.beta
    with mp.workdps(dps + 10):
        mpu = mp.mpc(u)
        stop = mp.mpf(10) ** (-dps - 5)
        total = mp.mpc(0)
        term = mp.mpc(1)
        max_mag = mp.mpf(1)
        last = None
        decays = 0
        n = 0
        while n < 200_000:
            t = term / mp.gamma(rho * n + beta)
            total += t
            at = abs(t)
            if at > max_mag:
                max_mag = at
            if last is not None and last > 0:
                decays = decays + 1 if at < 0.5 * last else 0
                if decays >= 3 and at < max_mag * stop:
                    break
            last = at
            term = term * mpu / (n + 1)
            n += 1
        return complex(total)


def count_zeros_in_disk(p: WrightParams, form: str, R: float,
                        quadrature_points: int = 512) -> int:
    """Zeros of the base function inside |z| < R by the argument principle.

    Trapezoidal winding integral (1/2pi) int_0^{2pi} Re[z base'(z)/base(z)] dtheta
    on |z| = R, spectrally accurate for the periodic integrand; node count is
    doubled until the rounded count repeats with residual < 0.1.  Nodes whose
    double-precision series value is drowned by cancellation noise (near the
    negative-real axis of the Wright argument) are re-evaluated with mpmath.
    """
    if form not in _FORMS:
        raise ParameterError(f"form must be one of {_FORMS}, got {form!r}")
    if not (R > 0):
        raise ParameterError(f"R must be > 0, got {R}")
    if quadrature_points < 16:
        raise ParameterError("quadrature_points must be >= 16")

    modulus = R * R if form == "minus_z_squared" else R
    e_max = term_exponent_max(p, modulus)
    if e_max > 600.0:
        raise ParameterError(
            f"contour radius {R} too deep for double-precision quadrature")
    # Shared-magnitude rounding noise on the circle, same model as the axis.
    n_star = max(10.0, 2.0 * modulus ** (1.0 / (1.0 + p.rho)))
    noise0 = 2.3e-16 * math.exp(e_max) * max(1.0, e_max) * math.sqrt(n_star)
    e_max1 = term_exponent_max(p.shifted(1), modulus)
    noise1 = 2.3e-16 * math.exp(e_max1) * max(1.0, e_max1) * math.sqrt(n_star)

    prev_round: int | None = None
    m = quadrature_points
    while m <= quadrature_points * 16:
        theta = 2.0 * math.pi * np.arange(m) / m
        z = R * np.exp(1j * theta)
        if form == "minus_z_squared":
            u_phases = -np.exp(2j * theta)
            vals = circle_eval(p, modulus, u_phases, shifts=(0, 1))
        else:
            u_phases = -np.exp(1j * theta)
            vals = circle_eval(p, modulus, u_phases, shifts=(0, 1))
        w0, w1 = vals[0].copy(), vals[1].copy()
        bad = (np.abs(w0) < 30.0 * noise0) | (np.abs(w1) < 30.0 * noise1)
        if np.any(bad):
            dps = max(25, int(20.0 + (e_max - min(envelope_exponent(p, modulus),
                                                  0.0)) / _LN10))
            for j in np.nonzero(bad)[0]:
                u = modulus * u_phases[j]
                w0[j] = _mp_wright_complex(p, u, dps)
                w1[j] = _mp_wright_complex(p.shifted(1), u, dps)
        if form == "minus_z_squared":
            integrand = -2.0 * (z * z) * w1 / w0
        else:
            integrand = -z * w1 / w0
        mean = float(np.mean(integrand.real))
        nearest = int(round(mean))
        if abs(mean - nearest) < 0.1:
            if prev_round is not None and prev_round == nearest:
                return nearest
            prev_round = nearest
        else:
            prev_round = None
        m *= 2
    raise NonIntegerWindingError(
        f"winding integral did not stabilize near an integer for R={R} "
        f"(rho={p.rho}, beta={p.beta}); a zero may sit near the contour")


# ----------------------------------------------------------------------------
# Hadamard partial products
# ----------------------------------------------------------------------------

def hadamard_partial_product(table: ZeroTable, z: complex, N: int) -> complex:
    """Product over the first N table zeros.

    form minus_z_squared: prod (1 - z^2/lambda_n^2); minus_z: prod (1 - z/lambda_n).
    """
    if not (isinstance(N, int) and 1 <= N <= len(table.zeros)):
        raise ParameterError(
            f"N must be an integer in [1, {len(table.zeros)}], got {N!r}")
    z = complex(z)
    lam = np.asarray(table.zeros[:N], dtype=float)
    if table.form == "minus_z_squared":
        factors = 1.0 - (z * z) / (lam * lam)
    else:
        factors = 1.0 - z / lam
    return complex(np.prod(factors))


def reciprocal_square_sum(table: ZeroTable, N: int | None = None) -> float:
    """sum over the first N zeros of the base's quadratic-coefficient series.

    For form minus_z_squared this is sum 1/lambda_n^2, for minus_z it is
    sum 1/nu_n; both converge to Gamma(beta)/Gamma(rho+beta), the magnitude
    of the first nontrivial series coefficient of the base function.
    """
    if N is None:
        N = len(table.zeros)
    lam = np.asarray(table.zeros[:N], dtype=float)
    if table.form == "minus_z_squared":
        return float(np.sum(1.0 / (lam * lam)))
    return float(np.sum(1.0 / lam))
