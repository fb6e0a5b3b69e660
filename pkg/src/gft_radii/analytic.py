"""Evaluation of w(z) = zF'(z)/F(z) and its universal covering disc.

F(z) = f(z) Q(z)^(beta/n) with f starlike of order alpha and Q a degree-n
polynomial non-vanishing on the unit disc.  The extremal family used by the
sharpness arguments is f(z) = z (1 - x z)^(2 alpha - 2) with a unimodular
rotation x, together with Q(z) = (1 + z)^n; for it zf'/f has the closed form
(1 + (1 - 2 alpha) x z) / (1 - x z), which is used directly (numerical
differentiation would lose precision as |z| -> 1).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .params import ClassParams, Disc, OutOfRangeError, PolynomialSpec


class PoleHitError(ZeroDivisionError):
    """Evaluation point coincides with a pole of the expression."""


@dataclass(frozen=True)
class ExtremalSpec:
    """A rotated extremal pair (f, Q): f(z) = z (1 - x z)^(2 alpha - 2)."""

    params: ClassParams
    polynomial: PolynomialSpec
    rotation: complex = 1.0 + 0.0j

    def __post_init__(self):
        if abs(abs(self.rotation) - 1.0) > 1e-12:
            raise OutOfRangeError("rotation", self.rotation, "|x| = 1")


def log_derivative_Q(spec: PolynomialSpec, z):
    """z Q'(z)/Q(z) = sum_k z/(z - z_k); z may be a complex array."""
    z = np.asarray(z, dtype=complex)
    out = np.zeros_like(z)
    for k, zk in enumerate(spec.zeros, start=1):
        den = z - zk
        if np.any(den == 0.0):
            raise PoleHitError(f"z equals polynomial zero #{k}")
        out = out + z / den
    return out if out.ndim else complex(out)


def extremal_w(params: ClassParams, z):
    """zF'/F for the sharpness witness F(z) = z(1-z)^(2a-2) (1+z)^b.

    Equals ((1-2a-b) z^2 + (2-2a+b) z + 1) / (1 - z^2); the beta/n exponent
    cancels the polynomial degree, so any n gives the same value.
    """
    a, b = params.alpha, params.beta
    z = np.asarray(z, dtype=complex)
    den = 1.0 - z * z
    if np.any(den == 0.0):
        raise PoleHitError("z = +/-1 is a pole of the extremal w")
    out = ((1.0 - 2.0 * a - b) * z * z + (2.0 - 2.0 * a + b) * z + 1.0) / den
    return out if out.ndim else complex(out)


def general_w(spec: ExtremalSpec, z):
    """zF'/F for a rotated extremal f and an arbitrary admissible Q."""
    a = spec.params.alpha
    x = spec.rotation
    z = np.asarray(z, dtype=complex)
    den = 1.0 - x * z
    if np.any(den == 0.0):
        raise PoleHitError("z = 1/x is a pole of zf'/f")
    head = (1.0 + (1.0 - 2.0 * a) * x * z) / den
    tail = (spec.params.beta / spec.polynomial.degree) * log_derivative_Q(
        spec.polynomial, z
    )
    out = head + tail
    return out if out.ndim else complex(out)


def disc_bound(params: ClassParams, r: float) -> Disc:
    """The covering disc of zF'/F over |z| <= r: center a_F(r), radius c_F(r).

    a_F(r) = (1 - (2a - 1 + b) r^2) / (1 - r^2),
    c_F(r) = (2 - 2a + b) r / (1 - r^2).
    """
    if not (0.0 <= r < 1.0):
        raise OutOfRangeError("r", r, "0 <= r < 1")
    a, b = params.alpha, params.beta
    den = 1.0 - r * r
    return Disc(
        center=(1.0 - (2.0 * a - 1.0 + b) * r * r) / den,
        radius=(2.0 - 2.0 * a + b) * r / den,
    )


def psi_lower_bound(params: ClassParams, r: float) -> float:
    """Lower bound on Re zF'/F over |z| <= r: a_F(r) - c_F(r).

    Simplifies to (1 - (1 - 2a) r)/(1 + r) - b r/(1 - r) and is strictly
    decreasing on (0, 1).
    """
    if not (0.0 <= r < 1.0):
        raise OutOfRangeError("r", r, "0 <= r < 1")
    a, b = params.alpha, params.beta
    return (1.0 - (1.0 - 2.0 * a) * r) / (1.0 + r) - b * r / (1.0 - r)
