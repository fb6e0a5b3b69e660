"""SVG rendering of the tangency picture for one parameter point.

The figure contains three curves in w-plane coordinates (y axis flipped for
screen orientation): the target region boundary (id "region"), the covering
disc at the computed radius (id "disc"), and the extremal image circle
(id "image").  Coordinates are written 1:1 in w units so tangency distances
in the file equal distances in the w plane.
"""

from __future__ import annotations

from typing import Tuple

import numpy as np

from .analytic import disc_bound, extremal_w
from .oracle import target_domain
from .params import ClassParams
from .radii import ClassKind, TargetClass, radius
from .regions import DomainKind, _superordinate

#: Angular resolution of every rendered curve.
PLOT_POINTS = 1024

_STYLE = {
    "region": "fill:none;stroke:#1f77b4;stroke-width:{w}",
    "disc": "fill:none;stroke:#d62728;stroke-width:{w}",
    "image": "fill:none;stroke:#2ca02c;stroke-width:{w};stroke-dasharray:{d}",
}


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _path(points: np.ndarray, ident: str, width: float, closed: bool) -> str:
    cmds = [f"M {_fmt(points[0].real)} {_fmt(-points[0].imag)}"]
    cmds += [f"L {_fmt(p.real)} {_fmt(-p.imag)}" for p in points[1:]]
    if closed:
        cmds.append("Z")
    style = _STYLE[ident].format(w=_fmt(width), d=_fmt(4.0 * width))
    return f'<path id="{ident}" style="{style}" d="{" ".join(cmds)}"/>'


def tangency_curves(
    target: TargetClass, params: ClassParams
) -> Tuple[np.ndarray, np.ndarray, np.ndarray, float]:
    """(region boundary, disc circle, extremal image, radius R) in w coords.

    The half-plane region has no bounded boundary; its "curve" is a vertical
    segment of the line Re w = lambda spanning the other two curves.
    """
    result = radius(target, params)
    r = result.value
    theta = 2.0 * np.pi * np.arange(PLOT_POINTS) / PLOT_POINTS
    unit = np.exp(1j * theta)
    d = disc_bound(params, min(r, 1.0 - 1e-9))
    disc_pts = d.center + d.radius * unit
    image_pts = extremal_w(params, min(r, 1.0 - 1e-9) * unit)
    domain = target_domain(target)
    if domain.kind is DomainKind.HALF_PLANE:
        ys = np.concatenate([disc_pts.imag, image_pts.imag])
        span = max(1e-3, ys.max() - ys.min())
        y = np.linspace(ys.min() - 0.25 * span, ys.max() + 0.25 * span, PLOT_POINTS)
        region_pts = domain.lam + 1j * y
    else:
        region_pts = _superordinate(domain.kind, unit)
    return region_pts, disc_pts, image_pts, r


def render_svg(target: TargetClass, params: ClassParams) -> str:
    """Standalone SVG 1.1 document with paths region / disc / image."""
    region_pts, disc_pts, image_pts, _ = tangency_curves(target, params)
    allpts = np.concatenate([region_pts, disc_pts, image_pts])
    x0, x1 = allpts.real.min(), allpts.real.max()
    y0, y1 = (-allpts.imag).min(), (-allpts.imag).max()
    mx, my = 0.05 * max(x1 - x0, 1e-6), 0.05 * max(y1 - y0, 1e-6)
    x0, x1, y0, y1 = x0 - mx, x1 + mx, y0 - my, y1 + my
    stroke = 0.003 * max(x1 - x0, y1 - y0)
    region_closed = target.kind is not ClassKind.STARLIKE_ORDER
    body = "\n".join(
        [
            _path(region_pts, "region", stroke, region_closed),
            _path(disc_pts, "disc", stroke, True),
            _path(image_pts, "image", stroke, True),
        ]
    )
    viewbox = f"{_fmt(x0)} {_fmt(y0)} {_fmt(x1 - x0)} {_fmt(y1 - y0)}"
    return (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{viewbox}" width="640" height="640" '
        'preserveAspectRatio="xMidYMid meet">\n'
        f"{body}\n</svg>\n"
    )
