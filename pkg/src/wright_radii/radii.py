"""Radii of starlikeness and convexity for the normalized Wright functions.

Four radius kinds per normalized kind, each defined by a boundary condition
on a functional v(z) (v = w = zf'/f for starlike kinds, v = C = 1 + zf''/f'
for convex kinds):

    lem_star, lem_convex:   |v(z)^2 - 1| < 1      (right loop of the
                                                    lemniscate of Bernoulli)
    jan_star, jan_convex:   |(v(z)-1)/(A-B v(z))| < 1   with -1 <= B < A <= 1

Each radius is computed by two mutually checking routes:

* radius_by_certification: bisection in r of the definitional predicate
  sup_{|z|=r} |expression| < 1.  The sup over a circle of the modulus of an
  analytic expression is continuous and nondecreasing in r (maximum
  principle), equals 0 at r = 0, hence the predicate flips exactly once; the
  maximum principle also converts "for all |z| < r" into the circle sup.
* radius_real_axis: smallest positive root of the scalar equation
  functional(r) = c on the real axis, with shipped candidate constants
  c = (1-A)/(1-B) (Janowski) and c = 2 - sqrt(2) (lemniscate).

For Janowski targets with B <= 0 the two routes agree to solver tolerance:
the functionals map the closed disk |z| <= r into a disk centered on the real
axis whose leftmost point v(r) is attained at real z, and the Janowski
modulus is maximized exactly at that leftmost point.  For the lemniscate the
boundary extremum sits off the real axis and the real-axis constant is a
containment lower bound only; the discrepancy is surfaced as a structured
Finding by cross_validate, with the certifier authoritative.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import (MonotonicityError, NotTranscribedError, ParameterError,
                     PoleProximityError)
from .family import (NormalizedKind, convex_functional, convex_on_circle,
                     convex_real, starlike_functional, starlike_on_circle,
                     starlike_real)
from .kernel import WrightParams
from .zeros import derivative_positive_zeros, positive_zeros

RADIUS_KINDS = ("lem_star", "lem_convex", "jan_star", "jan_convex")

LEM_CONSTANT = 2.0 - math.sqrt(2.0)     # root of (1-w)(3-w) = 1 inside (0,1)


# ----------------------------------------------------------------------------
# domain types
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class JanowskiParams:
    """Janowski target parameters, -1 <= B < A <= 1."""

    A: float
    B: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.A) and math.isfinite(self.B)):
            raise ParameterError("A and B must be finite reals")
        if not (-1.0 <= self.B < self.A <= 1.0):
            raise ParameterError(
                f"Janowski parameters require -1 <= B < A <= 1, got "
                f"A={self.A}, B={self.B}")


@dataclass(frozen=True)
class RadiusQuery:
    """One radius request: which kind, which parameters, which target region."""

    kind: NormalizedKind
    params: WrightParams
    radius_kind: str
    janowski: JanowskiParams | None = None

    def __post_init__(self) -> None:
        if self.radius_kind not in RADIUS_KINDS:
            raise ParameterError(
                f"radius_kind must be one of {RADIUS_KINDS}, got {self.radius_kind!r}")
        if self.radius_kind.startswith("jan"):
            if self.janowski is None:
                raise ParameterError(f"{self.radius_kind} requires janowski parameters")
        elif self.janowski is not None:
            raise ParameterError(f"{self.radius_kind} takes no janowski parameters")

    @property
    def is_star(self) -> bool:
        return self.radius_kind.endswith("_star")


@dataclass(frozen=True)
class RadiusResult:
    """A computed radius with its certificate.

    clamped is min(radius, 1): the subordination classes live on the unit
    disk, so the class membership radius caps at 1 while `radius` keeps the
    analytic root.  hit_domain_bound marks searches where the condition never
    failed before the analyticity bound; pole_truncated marks Janowski
    searches truncated by a vanishing denominator.
    """

    radius: float
    bracket: tuple[float, float]
    method: str
    sup_at_radius: float
    argmax_angle: float
    clamped: float
    hit_domain_bound: bool = False
    pole_truncated: bool = False


@dataclass(frozen=True)
class Finding:
    """Structured record of a cross-method disagreement."""

    query: RadiusQuery
    certifier_radius: float
    real_axis_radius: float
    delta: float
    argmax_angle: float
    message: str


@dataclass(frozen=True)
class CrossCheckResult:
    certifier: RadiusResult
    real_axis: RadiusResult
    delta: float
    finding: Finding | None


@dataclass(frozen=True)
class EquationDescriptor:
    """A scalar real-axis equation residual(r) = 0 with its search interval."""

    description: str
    constant: float
    interval: tuple[float, float]
    residual: Callable[[float], float]
    provenance: str


# ----------------------------------------------------------------------------
# functional plumbing
# ----------------------------------------------------------------------------

def _functional_scalar(query: RadiusQuery, z: complex, tol: float):
    if query.is_star:
        return starlike_functional(query.kind, query.params, z, tol)
    return convex_functional(query.kind, query.params, z, tol)


def _functional_circle(query: RadiusQuery, r: float, phases: np.ndarray) -> np.ndarray:
    if query.is_star:
        return starlike_on_circle(query.kind, query.params, r, phases)
    return convex_on_circle(query.kind, query.params, r, phases)


def _functional_real(query: RadiusQuery, r: float) -> float:
    if query.is_star:
        return starlike_real(query.kind, query.params, r)
    return convex_real(query.kind, query.params, r)


def _region_of_values(query: RadiusQuery, v: np.ndarray) -> np.ndarray:
    """Vectorized |left side| of the region condition at functional values v."""
    if query.radius_kind.startswith("lem"):
        return np.abs(v * v - 1.0)
    jp = query.janowski
    den = jp.A - jp.B * v
    if np.min(np.abs(den)) < 1e-13:
        raise PoleProximityError(
            f"Janowski denominator vanishes on the sampled circle "
            f"(A={jp.A}, B={jp.B})")
    return np.abs((v - 1.0) / den)


def region_functional(query: RadiusQuery, z: complex, tol: float = 1e-12) -> float:
    """The modulus on the left of the region condition at one point."""
    fv = _functional_scalar(query, z, tol)
    v = fv.value
    if query.radius_kind.startswith("lem"):
        return float(abs(v * v - 1.0))
    jp = query.janowski
    den = jp.A - jp.B * v
    if abs(den) < 10.0 * abs(jp.B) * fv.abs_error_bound + 1e-300:
        raise PoleProximityError(
            f"Janowski denominator {abs(den):.3e} within 10x the propagated "
            f"error bound at z={z}")
    return float(abs((v - 1.0) / den))


# ----------------------------------------------------------------------------
# boundary sweep
# ----------------------------------------------------------------------------

def _sup_scan(values_at: Callable[[np.ndarray], np.ndarray], tol_theta: float,
              initial_grid: int) -> tuple[float, float]:
    """Max of values_at over [0, pi]: coarse grid plus local 10x refinements.

    Refinement stops when the triangle bound on the missed-peak excess (half
    the largest adjacent difference near the argmax) falls below tol_theta.
    Both boundary-sup routes share this exact schedule so that they sample
    identical angle sequences and differ only by evaluation noise.
    """
    theta = np.linspace(0.0, math.pi, initial_grid + 1)
    best_sup = -math.inf
    best_angle = 0.0
    for _level in range(12):
        vals = values_at(theta)
        i = int(np.argmax(vals))
        if vals[i] > best_sup:
            best_sup = float(vals[i])
            best_angle = float(theta[i])
        lo = theta[max(i - 1, 0)]
        hi = theta[min(i + 1, len(theta) - 1)]
        step = (hi - lo) / 2.0
        neighbor_jump = 0.0
        if i > 0:
            neighbor_jump = max(neighbor_jump, abs(float(vals[i] - vals[i - 1])))
        if i < len(vals) - 1:
            neighbor_jump = max(neighbor_jump, abs(float(vals[i] - vals[i + 1])))
        if neighbor_jump * 0.5 < tol_theta or step <= 1e-15:
            break
        theta = np.linspace(lo, hi, 21)
    return best_sup, best_angle


def boundary_sup(query: RadiusQuery, r: float, tol_theta: float = 1e-10,
                 initial_grid: int = 256) -> tuple[float, float]:
    """sup over theta in [0, pi] of the region modulus at z = r e^{i theta}.

    Conjugate symmetry of the functionals halves the circle.
    """
    if not (r > 0):
        raise ParameterError(f"r must be > 0, got {r}")

    def values_at(theta: np.ndarray) -> np.ndarray:
        return _region_of_values(query,
                                 _functional_circle(query, r, np.exp(1j * theta)))

    return _sup_scan(values_at, tol_theta, initial_grid)


# ----------------------------------------------------------------------------
# domain bounds
# ----------------------------------------------------------------------------

def domain_bound(query: RadiusQuery, tol: float = 1e-9) -> float:
    """Upper end of the admissible search interval.

    Star kinds: first zero of the normalized function itself (the functional
    has a pole there).  Convex kinds: first zero of its derivative, pulled
    back by 10*tol.
    """
    p, kind = query.params, query.kind
    if query.is_star:
        form = "minus_z" if kind is NormalizedKind.H else "minus_z_squared"
        return positive_zeros(p, form, 1).zeros[0]
    return derivative_positive_zeros(kind, p, 1).zeros[0] - 10.0 * tol


# ----------------------------------------------------------------------------
# method 1: boundary certification
# ----------------------------------------------------------------------------

def radius_by_certification(query: RadiusQuery, tol: float = 1e-9) -> RadiusResult:
    """Bisection of the predicate sup_{|z|=r} |expression| < 1.

    Sound because the sup is 0 at r -> 0, continuous, and nondecreasing in r.
    If the condition still holds at the domain bound the bound itself is
    reported with hit_domain_bound set.
    """
    if not (tol > 0):
        raise ParameterError(f"tol must be > 0, got {tol}")
    bound = domain_bound(query, tol)
    hi = bound - 10.0 * tol if query.is_star else bound
    pole_seen = False

    def holds(r: float) -> bool:
        nonlocal pole_seen
        try:
            s, _ = boundary_sup(query, r)
        except PoleProximityError:
            pole_seen = True
            return False
        return s < 1.0

    if holds(hi):
        sup, ang = boundary_sup(query, hi)
        return RadiusResult(radius=bound, bracket=(hi, bound), method="certifier",
                            sup_at_radius=sup, argmax_angle=ang,
                            clamped=min(bound, 1.0), hit_domain_bound=True,
                            pole_truncated=pole_seen)
    lo = 0.0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if holds(mid):
            lo = mid
        else:
            hi = mid
    radius = 0.5 * (lo + hi)
    sup, ang = boundary_sup(query, max(radius, tol))
    return RadiusResult(radius=radius, bracket=(lo, hi), method="certifier",
                        sup_at_radius=sup, argmax_angle=ang,
                        clamped=min(radius, 1.0), pole_truncated=pole_seen)


# ----------------------------------------------------------------------------
# method 2: real-axis scalar equation
# ----------------------------------------------------------------------------

def default_constant(query: RadiusQuery) -> float:
    """Shipped crossing constant for the real-axis equation."""
    if query.radius_kind.startswith("jan"):
        jp = query.janowski
        return (1.0 - jp.A) / (1.0 - jp.B)
    return LEM_CONSTANT


def radius_real_axis(query: RadiusQuery, c: float | None = None,
                     tol: float = 1e-9, method_label: str = "real_axis") -> RadiusResult:
    """Unique r in (0, domain bound) with functional(r) = c.

    Precondition checked on a grid: the real-axis functional is strictly
    decreasing from 1.  Reports the domain bound when the functional stays
    above c on the whole interval.
    """
    if not (tol > 0):
        raise ParameterError(f"tol must be > 0, got {tol}")
    if c is None:
        c = default_constant(query)
    bound = domain_bound(query, tol)
    hi = bound * (1.0 - 1e-9) if query.is_star else bound

    grid = np.linspace(hi / 50.0, hi, 50)
    vals = [_functional_real(query, float(g)) for g in grid]
    for v1, v2 in zip(vals, vals[1:]):
        if v2 >= v1 + 1e-12:
            raise MonotonicityError(
                f"real-axis functional is not strictly decreasing on (0, "
                f"{hi:.6g}) for {query.radius_kind} of kind {query.kind.value}")

    if vals[-1] > c:
        return RadiusResult(radius=bound, bracket=(float(grid[-1]), bound),
                            method=method_label,
                            sup_at_radius=region_functional(query, complex(grid[-1])),
                            argmax_angle=0.0, clamped=min(bound, 1.0),
                            hit_domain_bound=True)

    lo_idx = 0
    for i, v in enumerate(vals):
        if v <= c:
            lo_idx = i
            break
    a = float(grid[lo_idx - 1]) if lo_idx > 0 else min(tol, hi / 1e6)
    b = float(grid[lo_idx])
    fa = _functional_real(query, a) - c
    fb = vals[lo_idx] - c
    for _ in range(200):
        if b - a <= tol:
            break
        if fb != fa:
            mid = a + float(fa / (fa - fb)) * (b - a)
            if not (a < mid < b):
                mid = 0.5 * (a + b)
        else:
            mid = 0.5 * (a + b)
        fm = _functional_real(query, mid) - c
        if (fm < 0) == (fa < 0):
            a, fa = mid, fm
        else:
            b, fb = mid, fm
    radius = 0.5 * (a + b)
    return RadiusResult(radius=radius, bracket=(a, b), method=method_label,
                        sup_at_radius=region_functional(query, complex(radius)),
                        argmax_angle=0.0, clamped=min(radius, 1.0))


# ----------------------------------------------------------------------------
# equations on file
# ----------------------------------------------------------------------------

def paper_equation_registry(query: RadiusQuery) -> EquationDescriptor:
    """Closed-form scalar equation on file for the query, if any.

    Entries exist exactly where the real-axis crossing provably equals the
    certified radius: Janowski targets with B <= 0, for every normalized
    kind.  There the functional maps |z| <= r into a disk centered on the
    real axis with leftmost point functional(r) attained at real z, and for
    B <= 0 the Janowski modulus |(v-1)/(A-Bv)| over that disk peaks at the
    leftmost point, so the boundary condition first fails on the real axis
    and the radius solves functional(r) = (1-A)/(1-B).

    Lemniscate entries are deliberately not on file: the analogous real-axis
    crossing at 2 - sqrt(2) is only a containment bound (the boundary
    extremum of |v^2 - 1| sits off the real axis), and no equation that
    matches the certifier is available here.  Janowski entries with B > 0
    are likewise absent (the extreme point of the image disk moves off the
    leftmost point).
    """
    rk = query.radius_kind
    if rk.startswith("lem"):
        raise NotTranscribedError(
            f"no equation on file for {rk} of kind {query.kind.value}: the "
            f"real-axis candidate constant {LEM_CONSTANT:.10f} is a "
            f"containment lower bound, not the certified radius")
    jp = query.janowski
    if jp.B > 0:
        raise NotTranscribedError(
            f"no equation on file for {rk} with B = {jp.B} > 0: real-axis "
            f"sharpness holds only for B <= 0")
    c = (1.0 - jp.A) / (1.0 - jp.B)
    functional = "z f'(z)/f(z)" if query.is_star else "1 + z f''(z)/f'(z)"
    bound = domain_bound(query)

    def residual(r: float) -> float:
        return _functional_real(query, r) - c

    return EquationDescriptor(
        description=(f"{functional} restricted to real z = r crosses "
                     f"(1-A)/(1-B) = {c:.12g}"),
        constant=c,
        interval=(0.0, bound),
        residual=residual,
        provenance="real-axis crossing, sharp for B <= 0 by the "
                   "containment-disk extreme-point argument",
    )


def solve_registry_equation(query: RadiusQuery, tol: float = 1e-9) -> RadiusResult:
    """Solve the on-file equation with the shared bracketing machinery."""
    desc = paper_equation_registry(query)
    return radius_real_axis(query, c=desc.constant, tol=tol,
                            method_label="paper_equation")


# ----------------------------------------------------------------------------
# cross-validation and findings
# ----------------------------------------------------------------------------

CROSS_CHECK_TOLERANCE = 1e-5


def cross_validate(query: RadiusQuery, tol: float = 1e-9) -> CrossCheckResult:
    """Run both methods; emit a Finding when they disagree beyond 1e-5.

    The certifier is definitional ground truth; a finding therefore flags the
    real-axis equation (its constant is a containment bound, or sharpness
    fails for the parameters), never the certifier.
    """
    cert = radius_by_certification(query, tol)
    real = radius_real_axis(query, tol=tol)
    delta = abs(cert.radius - real.radius)
    finding = None
    if delta > CROSS_CHECK_TOLERANCE:
        finding = Finding(
            query=query,
            certifier_radius=cert.radius,
            real_axis_radius=real.radius,
            delta=delta,
            argmax_angle=cert.argmax_angle,
            message=(f"real-axis radius {real.radius:.9f} differs from the "
                     f"certified radius {cert.radius:.9f} by {delta:.3e}; the "
                     f"boundary extremum sits at angle {cert.argmax_angle:.4f} "
                     f"off the real axis, so the real-axis constant is a "
                     f"containment bound, not the radius"),
        )
    return CrossCheckResult(certifier=cert, real_axis=real, delta=delta,
                            finding=finding)


# ----------------------------------------------------------------------------
# half-plane specialization (independent check of jan_star A=1, B=-1)
# ----------------------------------------------------------------------------

def halfplane_starlike_radius(kind: NormalizedKind, p: WrightParams,
                              tol: float = 1e-9) -> RadiusResult:
    """Largest r with Re w > 0 on |z| = r, by direct harmonic-minimum bisection.

    |(w-1)/(1+w)| < 1 is equivalent to Re w > 0, so this is an independent
    certifier for jan_star with (A, B) = (1, -1): it never forms the Janowski
    modulus and bisects on min Re w instead of a sup.
    """
    query = RadiusQuery(kind=kind, params=p, radius_kind="jan_star",
                        janowski=JanowskiParams(1.0, -1.0))
    bound = domain_bound(query, tol)
    hi = bound - 10.0 * tol

    def min_re(r: float) -> tuple[float, float]:
        theta = np.linspace(0.0, math.pi, 257)
        for _ in range(12):
            w = starlike_on_circle(kind, p, r, np.exp(1j * theta))
            i = int(np.argmin(w.real))
            lo_t = theta[max(i - 1, 0)]
            hi_t = theta[min(i + 1, len(theta) - 1)]
            jump = 0.0
            if i > 0:
                jump = max(jump, abs(float(w.real[i] - w.real[i - 1])))
            if i < len(theta) - 1:
                jump = max(jump, abs(float(w.real[i] - w.real[i + 1])))
            if jump * 0.5 < 1e-12 or (hi_t - lo_t) <= 2e-15:
                return float(w.real[i]), float(theta[i])
            theta = np.linspace(lo_t, hi_t, 21)
        return float(w.real[i]), float(theta[i])

    m_hi, _ = min_re(hi)
    if m_hi > 0.0:
        sup, ang = min_re(hi)
        return RadiusResult(radius=bound, bracket=(hi, bound), method="certifier",
                            sup_at_radius=1.0 - sup, argmax_angle=ang,
                            clamped=min(bound, 1.0), hit_domain_bound=True)
    lo = 0.0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if min_re(mid)[0] > 0.0:
            lo = mid
        else:
            hi = mid
    radius = 0.5 * (lo + hi)
    m, ang = min_re(max(radius, tol))
    return RadiusResult(radius=radius, bracket=(lo, hi), method="certifier",
                        sup_at_radius=1.0 - m, argmax_angle=ang,
                        clamped=min(radius, 1.0))


# ----------------------------------------------------------------------------
# rescaling semantics
# ----------------------------------------------------------------------------

def rescaled_boundary_sup(query: RadiusQuery, scale: float, r: float = 1.0,
                          tol_theta: float = 1e-10, initial_grid: int = 256) -> float:
    """Boundary sup of the rescaled function f_s(z) = f(s z)/s at radius r.

    Both functionals are invariant under the rescaling substitution:
    z f_s'(z)/f_s(z) = w_f(s z) and 1 + z f_s''(z)/f_s'(z) = C_f(s z).  This
    path evaluates the functional point by point through the scalar family
    route (same angle schedule as boundary_sup, different evaluation route),
    so agreement with boundary_sup(query, s*r) exercises the full plumbing
    rather than restating it.
    """
    if not (scale > 0 and r > 0):
        raise ParameterError("scale and r must be > 0")

    def values_at(theta: np.ndarray) -> np.ndarray:
        return np.array([region_functional(
            query, scale * r * complex(math.cos(t), math.sin(t))) for t in theta])

    sup, _ = _sup_scan(values_at, tol_theta, initial_grid)
    return sup
