"""Dynamics of f_c(z) = z^2 + c: orbits, external rays, Misiurewicz solving.

External rays (dynamical and parameter plane) are traced by the classic
potential-halving descent: at level n the ray point at potential t satisfies
f_c^n(z) ~ exp(2^n t + 2 pi i 2^n theta) once 2^n t is large, and each level
is corrected by Newton's method seeded from the previous one.  Angles are
doubled exactly (fractions), only the target points are floating point.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from .angles import Angle, preperiod_period
from .config import DEFAULT, Tolerances

# Dynamical-plane points are plain Python complex numbers throughout; the
# point at infinity never occurs on this side of the mating.
ComplexPoint = complex


class NewtonDivergence(ArithmeticError):
    """Newton correction failed to settle below tolerance."""


class EscapeDetected(ArithmeticError):
    """Critical orbit escapes: parameter outside the Mandelbrot set."""


class RootAmbiguity(ArithmeticError):
    """A solved root failed its disambiguation check."""


@dataclass
class RayTraceState:
    """Endpoint of a traced external ray."""

    angle: Angle
    potential: float
    point: ComplexPoint
    steps: int
    accuracy: float = math.inf   # Cauchy estimate over the last levels


@dataclass
class MisiurewiczParameter:
    spec: object                 # lamination.MisiurewiczAngle
    c: ComplexPoint
    residual: float
    newton_iterations: int
    candidates: list = field(default_factory=list)


def orbit(c: ComplexPoint, z0: ComplexPoint, n: int, escape: float = 1e10) -> list[ComplexPoint]:
    """[z0, f_c(z0), ..., f_c^n(z0)]; stops early if |z| exceeds the bound."""
    pts = [z0]
    z = z0
    for _ in range(n):
        z = z * z + c
        pts.append(z)
        if abs(z) > escape:
            break
    return pts


def is_connected(c: ComplexPoint, iterations: int = 1000, bound: float = 4.0) -> bool:
    """Heuristic connectivity check: bounded critical orbit."""
    z = 0j
    for _ in range(iterations):
        z = z * z + c
        if abs(z) > bound:
            return False
    return True


def _eval_iterate(c: ComplexPoint, z: ComplexPoint, n: int) -> tuple[ComplexPoint, ComplexPoint]:
    """f_c^n(z) and its z-derivative."""
    w, dw = z, 1.0 + 0j
    for _ in range(n):
        dw = 2.0 * w * dw
        w = w * w + c
        if abs(w) > 1e150:
            raise NewtonDivergence("iterate overflow during ray trace")
    return w, dw


def _eval_param_iterate(c: ComplexPoint, n: int) -> tuple[ComplexPoint, ComplexPoint]:
    """w_n = f_c^n(c) and d w_n / d c (so w_n = f_c^{n+1}(0))."""
    w, dw = c, 1.0 + 0j
    for _ in range(n):
        dw = 2.0 * w * dw + 1.0
        w = w * w + c
        if abs(w) > 1e150:
            raise NewtonDivergence("iterate overflow during parameter trace")
    return w, dw


def _newton(fun, z, tol, max_iter=60, step_cap=None):
    """Generic damped Newton on fun(z) = (value, derivative)."""
    for _ in range(max_iter):
        val, der = fun(z)
        if der == 0:
            raise NewtonDivergence("vanishing derivative")
        step = val / der
        if step_cap is not None and abs(step) > step_cap:
            step *= step_cap / abs(step)
        z = z - step
        if abs(step) < tol * max(1.0, abs(z)):
            return z
    if abs(step) < 1e-7:
        return z
    raise NewtonDivergence(f"no convergence, last step {abs(step):.3g}")


def trace_dynamic_ray(
    c: ComplexPoint,
    theta: Angle,
    levels: int | None = None,
    steps_per_level: int | None = None,
    tol: Tolerances = DEFAULT,
    check_connected: bool = True,
) -> RayTraceState:
    """Landing-point approximation of the external ray R_c(theta).

    Descends the ray from potential log(escape_radius) by halving per level,
    Newton-correcting f_c^n(z) = target at each sub-step.
    """
    levels = levels or tol.trace_levels
    spl = steps_per_level or tol.steps_per_level
    if check_connected and not is_connected(c):
        raise EscapeDetected(f"critical orbit of {c} escapes")
    t0 = math.log(tol.escape_radius)
    z = cmath.rect(tol.escape_radius, 2 * math.pi * float(theta))
    steps = 0
    tail: list[ComplexPoint] = [z]
    ang = theta
    for k in range(1, levels + 1):
        ang = ang.double()
        ang_f = 2 * math.pi * float(ang)
        for s in range(1, spl + 1):
            tau = t0 * 2.0 ** (1.0 - s / spl)     # 2^k * t for this sub-step
            target = cmath.rect(math.exp(tau), ang_f)
            z = _newton(lambda w: _sub(_eval_iterate(c, w, k), target),
                        z, tol.newton_tol, step_cap=1.0)
            steps += 1
        tail.append(z)
    diffs = [abs(tail[i + 1] - tail[i]) for i in range(max(0, len(tail) - 6), len(tail) - 1)]
    return RayTraceState(
        angle=theta,
        potential=t0 * 2.0 ** (-levels),
        point=z,
        steps=steps,
        accuracy=max(diffs) if diffs else math.inf,
    )


def _sub(value_der, target):
    val, der = value_der
    return val - target, der


def trace_parameter_ray(beta: Angle, levels: int = 30, tol: Tolerances = DEFAULT) -> RayTraceState:
    """Approximate landing point of the Mandelbrot parameter ray of angle beta."""
    t0 = math.log(tol.escape_radius)
    cc = cmath.rect(tol.escape_radius, 2 * math.pi * float(beta))
    ang = beta
    steps = 0
    tail = [cc]
    for k in range(1, levels + 1):
        ang = ang.double()
        ang_f = 2 * math.pi * float(ang)
        for s in range(1, tol.steps_per_level + 1):
            tau = t0 * 2.0 ** (1.0 - s / tol.steps_per_level)
            target = cmath.rect(math.exp(tau), ang_f)
            cc = _newton(lambda w: _sub(_eval_param_iterate(w, k), target),
                         cc, tol.newton_tol, step_cap=0.5)
            steps += 1
        tail.append(cc)
    diffs = [abs(tail[i + 1] - tail[i]) for i in range(max(0, len(tail) - 6), len(tail) - 1)]
    return RayTraceState(
        angle=beta,
        potential=t0 * 2.0 ** (-levels),
        point=cc,
        steps=steps,
        accuracy=max(diffs) if diffs else math.inf,
    )


def _critical_value_orbit_data(c: ComplexPoint, ell: int, p: int):
    """G(c) = f^{ell+p}(c) - f^{ell}(c) with derivative, via forward AD."""
    w, dw = c, 1.0 + 0j
    w_ell = dw_ell = None
    for j in range(ell + p):
        if j == ell:
            w_ell, dw_ell = w, dw
        dw = 2.0 * w * dw + 1.0
        w = w * w + c
    if ell == 0:
        w_ell, dw_ell = c, 1.0 + 0j
    elif w_ell is None:          # ell == ell + p impossible (p >= 1)
        w_ell, dw_ell = w, dw
    return w - w_ell, dw - dw_ell


def solve_misiurewicz_c(spec, tol: Tolerances = DEFAULT, seed: ComplexPoint | None = None) -> MisiurewiczParameter:
    """Newton-solve for the Misiurewicz parameter whose ray angle is spec.beta.

    Seeded by the traced parameter ray; the root is accepted only if the
    critical value is strictly preperiodic with spec's exact (preperiod,
    period) and the dynamical ray R_c(beta) lands back at c.
    """
    beta: Angle = spec.beta
    ell, p = spec.preperiod, spec.period
    if seed is None:
        seed = trace_parameter_ray(beta, levels=30, tol=tol).point
    iterations = 0

    def fun(c):
        nonlocal iterations
        iterations += 1
        return _critical_value_orbit_data(c, ell, p)

    c = _newton(fun, seed, tol.newton_tol, step_cap=0.25)
    residual = abs(_critical_value_orbit_data(c, ell, p)[0])
    if residual > tol.accept_poly:
        raise NewtonDivergence(f"residual {residual:.3g} above tolerance")

    pts = orbit(c, c, ell + p)
    # strict preperiodicity: no earlier entry into the cycle
    for j in range(ell):
        if abs(pts[j] - pts[j + p]) < tol.separation_tol:
            raise RootAmbiguity(f"premature periodicity at step {j} for beta={beta}")
    # exact period: no proper divisor of p closes the cycle
    for q in range(1, p):
        if p % q == 0 and abs(pts[ell + q] - pts[ell]) < tol.separation_tol:
            raise RootAmbiguity(f"period divides {q}, expected {p}")
    landing = trace_dynamic_ray(c, beta, tol=tol, check_connected=False).point
    if abs(landing - c) > tol.geometry_tol:
        raise RootAmbiguity(
            f"ray R_c({beta}) lands {abs(landing - c):.3g} away from c; wrong root")
    return MisiurewiczParameter(spec=spec, c=c, residual=residual, newton_iterations=iterations)


def poly_preimages(c: ComplexPoint, w: ComplexPoint) -> tuple[ComplexPoint, ComplexPoint]:
    """The two preimages of w under f_c."""
    s = cmath.sqrt(w - c)
    return s, -s


# -- basilica constants (f_{-1}) ------------------------------------------

BASILICA_C = -1.0 + 0j
ALPHA = (1 - math.sqrt(5)) / 2       # landing point of rays 1/3, 2/3
BETA_FIX = (1 + math.sqrt(5)) / 2    # landing point of ray 0


def basilica_ray_landing(theta: Angle, levels: int | None = None, tol: Tolerances = DEFAULT) -> ComplexPoint:
    return trace_dynamic_ray(BASILICA_C, theta, levels=levels, tol=tol, check_connected=False).point
