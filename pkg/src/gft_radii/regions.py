"""The six target domains as first-class objects.

Each domain knows how to test open-set membership, produce points of its
parametric boundary curve, and report the largest radius of a disc centered
at a real point a that still fits inside it.

Membership mechanism: the half-plane, exponential, modified-sigmoid and
nephroid domains have analytic inequalities and use them directly.  The
cardioid and rational domains are classified against a fixed 4096-segment
polyline of their boundary curve (the cardioid quartic's sign alone does not
characterize the interior globally).  Bulk polyline queries go through a
prepared shapely polygon built from that same polyline; a pure winding-number
routine over the identical polyline is exposed as well and the two are
cross-checked in the test suite.  Points within 1e-9 of the polyline are
refused and classified as outside (the regions are open), which also guards
the winding test near the curve cusps.
"""

from __future__ import annotations

import cmath
import enum
import math
import threading
from dataclasses import dataclass
from typing import Tuple

import numpy as np
import shapely

from .params import E, SQRT2, OutOfRangeError

#: Number of segments in the cached boundary polylines.
BOUNDARY_SEGMENTS = 4096

#: Points closer than this to the boundary polyline classify as outside.
BOUNDARY_EXCLUSION = 1e-9

#: Constant of the rational superordinate map.
K_RATIONAL = SQRT2 + 1.0


class NonFiniteError(ValueError):
    """Membership query with a NaN or infinite point."""


class UnboundedBoundaryError(ValueError):
    """Boundary curve requested for a domain with unbounded boundary."""


class CenterOutsideDiameterError(ValueError):
    """Inscribed-disc center outside the domain's real diameter."""

    def __init__(self, a: float, lo: float, hi: float):
        self.a = a
        super().__init__(f"center a={a!r} outside admissible diameter [{lo}, {hi}]")


class DomainKind(enum.Enum):
    HALF_PLANE = "half-plane"
    EXP = "exp"
    CARDIOID = "cardioid"
    RATIONAL = "rational"
    NEPHROID = "nephroid"
    MOD_SIGMOID = "mod-sigmoid"


@dataclass(frozen=True)
class TargetDomain:
    """One of the six target regions; lam applies to HALF_PLANE only."""

    kind: DomainKind
    lam: float = 0.0

    def __post_init__(self):
        if self.kind is DomainKind.HALF_PLANE and not (0.0 <= self.lam < 1.0):
            raise OutOfRangeError("lambda", self.lam, "0 <= lambda < 1")


def _superordinate(kind: DomainKind, z):
    """phi(z) whose image of the unit circle bounds the domain."""
    if kind is DomainKind.EXP:
        return np.exp(z)
    if kind is DomainKind.CARDIOID:
        return 1.0 + (4.0 / 3.0) * z + (2.0 / 3.0) * z * z
    if kind is DomainKind.RATIONAL:
        k = K_RATIONAL
        return 1.0 + (z * z + k * z) / (k * k - k * z)
    if kind is DomainKind.NEPHROID:
        return 1.0 + z - z ** 3 / 3.0
    if kind is DomainKind.MOD_SIGMOID:
        return 2.0 / (1.0 + np.exp(-z))
    raise UnboundedBoundaryError(f"{kind} has no bounded boundary curve")


def boundary_point(domain: TargetDomain, theta: float) -> complex:
    """Point phi(e^{i theta}) of the domain's boundary curve."""
    return complex(_superordinate(domain.kind, cmath.exp(1j * theta)))


def boundary_polyline(domain: TargetDomain, segments: int = BOUNDARY_SEGMENTS) -> np.ndarray:
    """Closed polyline of the boundary: `segments`+1 complex vertices."""
    theta = 2.0 * np.pi * np.arange(segments + 1) / segments
    pts = _superordinate(domain.kind, np.exp(1j * theta))
    pts[-1] = pts[0]  # close exactly
    return pts


# --- cached shapely polygons for the polyline-classified domains ----------

_POLY_LOCK = threading.Lock()
_POLY_CACHE: dict = {}


def _polygon(kind: DomainKind):
    with _POLY_LOCK:
        entry = _POLY_CACHE.get(kind)
        if entry is None:
            pts = boundary_polyline(TargetDomain(kind))
            coords = np.column_stack([pts.real, pts.imag])
            poly = shapely.Polygon(coords)
            ring = poly.exterior
            # Indexed boundary segments make the near-boundary exclusion
            # test cheap (the un-indexed ring distance is ~200x slower).
            segments = shapely.linestrings(
                np.stack([coords[:-1], coords[1:]], axis=1)
            )
            tree = shapely.STRtree(segments)
            shapely.prepare(poly)
            entry = (poly, ring, tree)
            _POLY_CACHE[kind] = entry
        return entry


def winding_number(vertices: np.ndarray, w: complex) -> int:
    """Winding number of a closed polyline (complex vertices) around w.

    Standard crossing-count formulation: upward edges crossing the
    horizontal ray to the right of w add one, downward edges subtract one.
    """
    x, y = w.real, w.imag
    x0, y0 = vertices[:-1].real, vertices[:-1].imag
    x1, y1 = vertices[1:].real, vertices[1:].imag
    side = (x1 - x0) * (y - y0) - (x - x0) * (y1 - y0)
    up = (y0 <= y) & (y1 > y) & (side > 0)
    down = (y0 > y) & (y1 <= y) & (side < 0)
    return int(np.count_nonzero(up)) - int(np.count_nonzero(down))


def _contains_polyline(kind: DomainKind, ws: np.ndarray) -> np.ndarray:
    poly, _ring, tree = _polygon(kind)
    ws = np.asarray(ws, dtype=complex)
    inside = shapely.contains_xy(poly, ws.real, ws.imag)
    if inside.any():
        idx = np.flatnonzero(inside)
        pts = shapely.points(ws.real[idx], ws.imag[idx])
        near = tree.query(pts, predicate="dwithin", distance=BOUNDARY_EXCLUSION)
        inside[idx[np.unique(near[0])]] = False
    return inside


def _nephroid_margin(ws: np.ndarray) -> np.ndarray:
    """Negative of the nephroid sextic; positive strictly inside."""
    u = ws.real - 1.0
    v = ws.imag
    return (4.0 / 3.0) * v * v - (u * u + v * v - 4.0 / 9.0) ** 3


def _log_modulus_sq(ws: np.ndarray) -> np.ndarray:
    """|Log w|^2 (principal branch), +inf where undefined (w = 0)."""
    mod = np.abs(ws)
    with np.errstate(divide="ignore"):
        ln = np.log(mod)
    arg = np.angle(ws)
    out = ln * ln + arg * arg
    return np.where(mod == 0.0, np.inf, out)


def contains_many(domain: TargetDomain, ws: np.ndarray) -> np.ndarray:
    """Vectorized open-set membership for an array of complex points."""
    ws = np.asarray(ws, dtype=complex)
    if not np.all(np.isfinite(ws)):
        raise NonFiniteError("non-finite membership query")
    kind = domain.kind
    if kind is DomainKind.HALF_PLANE:
        return ws.real > domain.lam
    if kind is DomainKind.EXP:
        return (ws.real > 0.0) & (_log_modulus_sq(ws) < 1.0)
    if kind is DomainKind.MOD_SIGMOID:
        ok = ws != 2.0
        zeta = np.where(ok, ws, 1.0) / np.where(ok, 2.0 - ws, 1.0)
        return ok & (_log_modulus_sq(zeta) < 1.0)
    if kind is DomainKind.NEPHROID:
        return _nephroid_margin(ws) > 0.0
    return _contains_polyline(kind, ws)


def contains(domain: TargetDomain, w: complex) -> bool:
    """True iff w lies in the open region."""
    return bool(contains_many(domain, np.asarray([w]))[0])


def contains_by_winding(domain: TargetDomain, w: complex) -> bool:
    """Membership via the winding number of the boundary polyline.

    Independent of the shapely path used by `contains`; agrees with it away
    from the 1e-9 boundary exclusion band.  Works for any domain with a
    bounded boundary curve.
    """
    if not (math.isfinite(w.real) and math.isfinite(w.imag)):
        raise NonFiniteError("non-finite membership query")
    pts = boundary_polyline(domain)
    if winding_number(pts, complex(w)) != 1:
        return False
    _poly, _ring, tree = _polygon(domain.kind)
    hits = tree.query(
        shapely.points([w.real], [w.imag]),
        predicate="dwithin",
        distance=BOUNDARY_EXCLUSION,
    )
    return hits.shape[1] == 0


# --- inscribed discs on the real diameter ---------------------------------

#: (lower endpoint, upper endpoint, split point) of the real diameter.
_DIAMETERS = {
    DomainKind.EXP: (1.0 / E, E, (E + 1.0 / E) / 2.0),
    DomainKind.CARDIOID: (1.0 / 3.0, 3.0, 5.0 / 3.0),
    DomainKind.RATIONAL: (2.0 * (SQRT2 - 1.0), 2.0, SQRT2),
    DomainKind.NEPHROID: (1.0 / 3.0, 5.0 / 3.0, 1.0),
    DomainKind.MOD_SIGMOID: (2.0 / (1.0 + E), 2.0 * E / (1.0 + E), 1.0),
}


def real_diameter(domain: TargetDomain) -> Tuple[float, float]:
    """Endpoints of the admissible real diameter (hi = inf for half-plane)."""
    if domain.kind is DomainKind.HALF_PLANE:
        return domain.lam, math.inf
    lo, hi, _ = _DIAMETERS[domain.kind]
    return lo, hi


def inscribed_radius(domain: TargetDomain, a: float) -> float:
    """Largest radius of a disc centered at real a that fits in the domain.

    Piecewise-linear in a: distance to the nearer real-diameter endpoint,
    with the branch split at the domain's split point.  Returns 0 at the
    endpoints themselves.
    """
    kind = domain.kind
    if kind is DomainKind.HALF_PLANE:
        if a < domain.lam:
            raise CenterOutsideDiameterError(a, domain.lam, math.inf)
        return a - domain.lam
    lo, hi, _ = _DIAMETERS[kind]
    if a < lo or a > hi:
        raise CenterOutsideDiameterError(a, lo, hi)
    if kind is DomainKind.MOD_SIGMOID:
        return max(0.0, (E - 1.0) / (E + 1.0) - abs(a - 1.0))
    return max(0.0, min(a - lo, hi - a))
