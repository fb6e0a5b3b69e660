"""Independent numerical verification of the closed-form radii.

The oracle never touches the closed forms: it estimates each radius from
first principles as the largest r for which the covering disc
D(a_F(r), c_F(r)) stays inside the target region, using only the disc
center/radius formulas and region membership.  Containment is tested by
sampling the disc circle, the first failure is bracketed by a coarse scan
and refined by bisection.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, NamedTuple, Sequence, Tuple

import numpy as np

from .analytic import ExtremalSpec, disc_bound, extremal_w, general_w, log_derivative_Q
from .params import ClassParams, OutOfRangeError, PolynomialSpec
from .radii import ClassKind, TargetClass
from .regions import DomainKind, TargetDomain, contains_many

_DOMAIN_OF_CLASS = {
    ClassKind.EXP: DomainKind.EXP,
    ClassKind.CARDIOID: DomainKind.CARDIOID,
    ClassKind.RATIONAL: DomainKind.RATIONAL,
    ClassKind.NEPHROID: DomainKind.NEPHROID,
    ClassKind.MOD_SIGMOID: DomainKind.MOD_SIGMOID,
}


def target_domain(target: TargetClass) -> TargetDomain:
    """The region that zF'/F must stay inside for the target class."""
    if target.kind is ClassKind.STARLIKE_ORDER:
        return TargetDomain(DomainKind.HALF_PLANE, lam=target.lam)
    return TargetDomain(_DOMAIN_OF_CLASS[target.kind])


@dataclass(frozen=True)
class OracleConfig:
    tol: float = 1e-9
    boundary_samples: int = 720
    coarse_steps: int = 200

    def __post_init__(self):
        if not self.tol > 0.0:
            raise OutOfRangeError("tol", self.tol, "tol > 0")
        if self.boundary_samples < 8:
            raise OutOfRangeError("boundary_samples", self.boundary_samples, ">= 8")
        if self.coarse_steps < 10:
            raise OutOfRangeError("coarse_steps", self.coarse_steps, ">= 10")


def _circle(samples: int) -> np.ndarray:
    # Even counts place theta = 0 and pi on the grid, where the tangential
    # boundary contact always happens (the contact point is real).
    return np.exp(2j * np.pi * np.arange(samples) / samples)


def disc_inside(domain: TargetDomain, params: ClassParams, r: float,
                unit_circle: np.ndarray) -> bool:
    """True iff the closed covering disc at r lies inside the domain."""
    d = disc_bound(params, r)
    pts = d.center + d.radius * unit_circle
    return bool(contains_many(domain, pts).all())


def containment_profile(target: TargetClass, params: ClassParams,
                        cfg: OracleConfig = OracleConfig()) -> Tuple[np.ndarray, np.ndarray]:
    """Containment flag at every coarse grid point r_i = i/steps, i=1..steps-1."""
    domain = target_domain(target)
    circle = _circle(cfg.boundary_samples)
    rs = np.arange(1, cfg.coarse_steps) / cfg.coarse_steps
    flags = np.array([disc_inside(domain, params, r, circle) for r in rs])
    return rs, flags


def numeric_radius(target: TargetClass, params: ClassParams,
                   cfg: OracleConfig = OracleConfig()) -> float:
    """Largest r* such that the covering disc stays inside the region.

    Coarse scan to the first containment failure, then bisection down to
    cfg.tol.  Returns 1.0 when containment never fails on the coarse grid.
    """
    domain = target_domain(target)
    circle = _circle(cfg.boundary_samples)
    lo = 0.0
    hi = None
    for i in range(1, cfg.coarse_steps):
        r = i / cfg.coarse_steps
        if disc_inside(domain, params, r, circle):
            lo = r
        else:
            hi = r
            break
    if hi is None:
        return 1.0
    while hi - lo > 2.0 * cfg.tol:
        mid = 0.5 * (lo + hi)
        if disc_inside(domain, params, mid, circle):
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


class WitnessPoleError(ZeroDivisionError):
    """Sharpness witness requested at R = 1 (pole of the extremal w)."""


@dataclass(frozen=True)
class SharpnessReport:
    """Boundary contact of the extremal image at the claimed radius."""

    witness_z: complex
    witness_w: complex
    boundary_residual: float
    inside_margin_below: float


def _boundary_residual(target: TargetClass, w: complex) -> float:
    """Distance of the class's boundary functional from its critical value."""
    kind = target.kind
    if kind is ClassKind.STARLIKE_ORDER:
        return abs(w.real - target.lam)
    if kind is ClassKind.EXP:
        return abs(abs(np.log(complex(w))) - 1.0)
    if kind is ClassKind.MOD_SIGMOID:
        return abs(abs(np.log(complex(w) / (2.0 - complex(w)))) - 1.0)
    # Cardioid / rational / nephroid witnesses land on the real-axis
    # endpoints phi(-1) or phi(1) of the region.
    from .regions import boundary_point

    domain = target_domain(target)
    lo = boundary_point(domain, math.pi)
    hi = boundary_point(domain, 0.0)
    return min(abs(w - lo), abs(w - hi))


def _interior_margin(target: TargetClass, ws: np.ndarray) -> np.ndarray:
    """Signed interiority measure; positive strictly inside the region."""
    kind = target.kind
    if kind is ClassKind.STARLIKE_ORDER:
        return ws.real - target.lam
    if kind is ClassKind.EXP:
        return 1.0 - np.abs(np.log(ws))
    if kind is ClassKind.MOD_SIGMOID:
        return 1.0 - np.abs(np.log(ws / (2.0 - ws)))
    from .regions import _nephroid_margin, _polygon  # shared internals

    if kind is ClassKind.NEPHROID:
        return _nephroid_margin(ws)
    import shapely

    poly, ring, _tree = _polygon(_DOMAIN_OF_CLASS[kind])
    pts = shapely.points(ws.real, ws.imag)
    dist = shapely.distance(pts, ring)
    inside = shapely.contains_xy(poly, ws.real, ws.imag)
    return np.where(inside, dist, -dist)


def verify_sharpness(target: TargetClass, params: ClassParams, R: float,
                     eps: float, samples: int = 720) -> SharpnessReport:
    """Check the extremal boundary contact at |z| = R.

    Evaluates the extremal zF'/F at z = -R and z = +R, takes the side with
    the smaller boundary-functional residual as the witness, and measures
    how strictly interior the whole extremal image circle is at R(1 - eps).
    """
    if R >= 1.0:
        raise WitnessPoleError("R = 1 is a pole of the extremal function")
    if not (0.0 < eps < 1.0 - R):
        raise OutOfRangeError("eps", eps, "0 < eps < 1 - R")
    best = None
    for sign in (-1.0, 1.0):
        z = sign * R
        w = extremal_w(params, z)
        res = _boundary_residual(target, w)
        if best is None or res < best[2]:
            best = (z, w, res)
    zs = R * (1.0 - eps) * _circle(samples)
    margin = float(np.min(_interior_margin(target, extremal_w(params, zs))))
    return SharpnessReport(
        witness_z=best[0],
        witness_w=best[1],
        boundary_residual=best[2],
        inside_margin_below=margin,
    )


class DiscBoundViolations(NamedTuple):
    """Counts of sampled points violating the covering-disc bounds."""

    disc: int  # |w - a_F(r)| <= c_F(r) failures
    polynomial: int  # zQ'/Q bound failures

    @property
    def total(self) -> int:
        return self.disc + self.polynomial


def verify_disc_bound(specs: Sequence[ExtremalSpec], r_grid: Sequence[float],
                      samples: int = 256, slack: float = 1e-10) -> DiscBoundViolations:
    """Monte-Carlo check of the covering-disc and polynomial bounds."""
    circle = _circle(samples)
    disc_viol = 0
    poly_viol = 0
    for spec in specs:
        n = spec.polynomial.degree
        for r in r_grid:
            d = disc_bound(spec.params, r)
            zs = r * circle
            ws = general_w(spec, zs)
            disc_viol += int(np.count_nonzero(np.abs(ws - d.center) > d.radius + slack))
            qs = log_derivative_Q(spec.polynomial, zs)
            den = 1.0 - r * r
            poly_viol += int(
                np.count_nonzero(
                    np.abs(qs + n * r * r / den) > n * r / den + slack
                )
            )
    return DiscBoundViolations(disc=disc_viol, polynomial=poly_viol)


def random_extremal_specs(count: int, rng: np.random.Generator,
                          max_degree: int = 5) -> List[ExtremalSpec]:
    """Random rotated-extremal specs for the Monte-Carlo suites."""
    specs = []
    for _ in range(count):
        alpha = rng.uniform(0.0, 1.0)
        beta = rng.uniform(0.05, 4.0)
        x = np.exp(1j * rng.uniform(0.0, 2.0 * np.pi))
        n = int(rng.integers(1, max_degree + 1))
        moduli = rng.uniform(1.0, 10.0, size=n)
        angles = rng.uniform(0.0, 2.0 * np.pi, size=n)
        zeros = moduli * np.exp(1j * angles)
        specs.append(
            ExtremalSpec(
                params=ClassParams(alpha, beta),
                polynomial=PolynomialSpec(tuple(zeros)),
                rotation=complex(x),
            )
        )
    return specs
