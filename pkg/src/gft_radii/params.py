"""Core value types shared by every other module.

All types are immutable dataclasses; validation happens at construction so
that downstream code never has to re-check the standing hypotheses
(0 <= alpha <= 1, beta > 0, 0 <= lambda < 1, polynomial zeros outside the
open unit disc, Q(0) = 1).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional, Sequence


class OutOfRangeError(ValueError):
    """A scalar parameter violates its admissible range."""

    def __init__(self, name: str, value: float, constraint: str):
        self.name = name
        self.value = value
        super().__init__(f"{name}={value!r} violates {constraint}")


class ZeroInsideDiscError(ValueError):
    """A polynomial zero lies inside the open unit disc."""

    def __init__(self, index: int, zero: complex):
        self.index = index
        self.zero = zero
        super().__init__(f"zero #{index} = {zero!r} has modulus < 1")


class Branch(enum.Enum):
    """Which of the two closed-form roots is the radius."""

    SIGMA0 = "sigma0"
    SIGMA_TILDE0 = "sigma_tilde0"


class WitnessSign(enum.Enum):
    """Location of the extremal boundary contact on the real axis."""

    MINUS_SIGMA = -1  # contact at z = -R
    PLUS_SIGMA = +1  # contact at z = +R


@dataclass(frozen=True)
class ClassParams:
    """The parameter triple (alpha, beta, lam).

    alpha is the order of starlikeness of the inner factor f, beta the
    exponent weight on the polynomial factor, and lam the target order
    (used only by the starlike-of-order-lambda class).

    alpha = 1 is admitted as the degenerate case f(z) = z; every radius
    formula is continuous there, so evaluating at the endpoint turns the
    classical limit statements into exact identities.
    """

    alpha: float
    beta: float
    lam: float = 0.0

    def __post_init__(self):
        if not (0.0 <= self.alpha <= 1.0):
            raise OutOfRangeError("alpha", self.alpha, "0 <= alpha <= 1")
        if not self.beta > 0.0:
            raise OutOfRangeError("beta", self.beta, "beta > 0")
        if not (0.0 <= self.lam < 1.0):
            raise OutOfRangeError("lambda", self.lam, "0 <= lambda < 1")

    @property
    def degenerate(self) -> bool:
        """True when alpha = 1, i.e. the inner factor is f(z) = z."""
        return self.alpha == 1.0


def validate_params(alpha: float, beta: float, lam: float = 0.0) -> ClassParams:
    """Validate (alpha, beta, lambda) and return an immutable ClassParams."""
    return ClassParams(float(alpha), float(beta), float(lam))


@dataclass(frozen=True)
class Disc:
    """A disc with real center on the positive axis and nonnegative radius."""

    center: float
    radius: float

    def __post_init__(self):
        if self.radius < 0.0:
            raise OutOfRangeError("radius", self.radius, "radius >= 0")


@dataclass(frozen=True)
class PolynomialSpec:
    """A degree-n polynomial, non-vanishing on the unit disc.

    Stored by its zeros z_k (|z_k| >= 1) and normalized so Q(0) = 1 via the
    product form Q(z) = prod_k (1 - z/z_k).  Keeping zeros instead of
    coefficients makes the non-vanishing hypothesis checkable exactly.
    """

    zeros: tuple

    def __post_init__(self):
        if len(self.zeros) == 0:
            raise OutOfRangeError("degree", 0, "degree >= 1")
        for k, z in enumerate(self.zeros, start=1):
            if abs(z) < 1.0:
                raise ZeroInsideDiscError(k, z)

    @property
    def degree(self) -> int:
        return len(self.zeros)

    def evaluate(self, z: complex) -> complex:
        """Q(z) = prod_k (1 - z/z_k)."""
        out = 1.0 + 0.0j
        for zk in self.zeros:
            out *= 1.0 - z / zk
        return out


def validate_polynomial(zeros: Sequence[complex]) -> PolynomialSpec:
    """Validate a zero list (all moduli >= 1) and return a PolynomialSpec."""
    return PolynomialSpec(tuple(complex(z) for z in zeros))


@dataclass(frozen=True)
class CaseDiagnostics:
    """Intermediate quantities of the two-branch case analysis.

    two_alpha_beta_minus_two is the primary sign discriminator 2a+b-2;
    x_value is the secondary discriminator X(alpha, beta) for the classes
    that define one; sigma_tilde_1 is the auxiliary root of the center
    crossing equation, surfaced for debugging only.
    """

    two_alpha_beta_minus_two: float
    x_value: Optional[float] = None
    sigma_tilde_1: Optional[float] = None

    def __post_init__(self):
        if self.sigma_tilde_1 is not None:
            if not (0.0 < self.sigma_tilde_1 < 1.0):
                raise OutOfRangeError(
                    "sigma_tilde_1", self.sigma_tilde_1, "0 < sigma_tilde_1 < 1"
                )


@dataclass(frozen=True)
class RadiusResult:
    """A sharp radius: its value, the chosen branch and the witness side."""

    value: float
    branch: Branch
    witness_sign: WitnessSign
    diagnostics: Optional[CaseDiagnostics] = None

    def __post_init__(self):
        if not (0.0 < self.value <= 1.0):
            raise OutOfRangeError("value", self.value, "0 < value <= 1")
        # Boundary contact happens at z = -sigma0 or z = +sigma_tilde0.
        expected = (
            WitnessSign.MINUS_SIGMA
            if self.branch is Branch.SIGMA0
            else WitnessSign.PLUS_SIGMA
        )
        if self.witness_sign is not expected:
            raise ValueError(
                f"branch {self.branch} must pair with witness {expected}"
            )


E = math.e
SQRT2 = math.sqrt(2.0)
