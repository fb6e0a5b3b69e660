"""Closed-form sharp radii for the six target classes.

Each radius is the smallest positive root of a quadratic obtained by
equating the covering-disc radius c_F(r) with the inscribed-disc radius of
the target region at the moving center a_F(r).  Two quadratics compete (one
per linear branch of the inscribed radius); the winner is selected by the
sign of 2*alpha + beta - 2 and, for the exponential / cardioid / rational
classes, by a secondary discriminator X(alpha, beta).

Every closed form is double-checked at call time against the numerically
stable quadratic solver applied to its defining polynomial; a mismatch
raises ConsistencyError rather than returning a silently wrong radius.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Tuple

from .params import (
    E,
    SQRT2,
    Branch,
    CaseDiagnostics,
    ClassParams,
    OutOfRangeError,
    RadiusResult,
    WitnessSign,
)

#: Relative slack treating X(alpha, beta) ~ 0 as X <= 0 (the two branches
#: coincide on the transition set, so the tie-break cannot change the value).
_X_TIE_RTOL = 1e-12

#: Allowed relative gap between a displayed closed form and the root solver.
_CONSISTENCY_RTOL = 1e-10

#: Roots up to this far above 1 still count as "in (0, 1]" (fp slack).
_UNIT_SLACK = 1e-12


class NoRootInUnitIntervalError(ArithmeticError):
    """The case polynomial has no root in (0, 1]."""


class NotApplicableError(ValueError):
    """Case diagnostics requested for a class without a case analysis."""


class ConsistencyError(ArithmeticError):
    """A closed form disagrees with the root of its defining polynomial."""


class ClassKind(enum.Enum):
    STARLIKE_ORDER = "st"
    EXP = "exp"
    CARDIOID = "cardioid"
    RATIONAL = "rational"
    NEPHROID = "nephroid"
    MOD_SIGMOID = "sigmoid"


@dataclass(frozen=True)
class TargetClass:
    """A target subclass of starlike functions; lam applies to ST only."""

    kind: ClassKind
    lam: float = 0.0

    def __post_init__(self):
        if self.kind is ClassKind.STARLIKE_ORDER and not (0.0 <= self.lam < 1.0):
            raise OutOfRangeError("lambda", self.lam, "0 <= lambda < 1")


def solve_smallest_root(a2: float, a1: float, a0: float) -> float:
    """Smallest root of a2*r^2 + a1*r + a0 in (0, 1].

    Uses the rationalized ("citardauq") quadratic formula so that the small
    root is never computed by cancellation; degenerates to the linear root
    -a0/a1 when |a2| is negligible against the other coefficients.
    """
    scale = max(abs(a1), abs(a0))
    if abs(a2) <= 1e-14 * scale:
        if a1 == 0.0:
            raise NoRootInUnitIntervalError("degenerate polynomial")
        roots = [-a0 / a1]
    else:
        disc = a1 * a1 - 4.0 * a2 * a0
        if disc < 0.0:
            raise NoRootInUnitIntervalError("complex roots")
        sq = math.sqrt(disc)
        # q = -(a1 + sign(a1) sqrt(disc)) / 2 never cancels; the two roots
        # are q/a2 and a0/q.
        q = -0.5 * (a1 + math.copysign(sq, a1)) if a1 != 0.0 else 0.5 * sq
        roots = [q / a2, a0 / q] if q != 0.0 else [0.0]
    candidates = [r for r in roots if 0.0 < r <= 1.0 + _UNIT_SLACK]
    if not candidates:
        raise NoRootInUnitIntervalError(
            f"no root of {a2}*r^2 + {a1}*r + {a0} in (0, 1]"
        )
    return min(min(candidates), 1.0)


def _checked(value: float, coeffs: Tuple[float, float, float]) -> float:
    """Guard a displayed closed form against its defining polynomial."""
    root = solve_smallest_root(*coeffs)
    scale = 1.0 + max(abs(c) for c in coeffs)
    if abs(value - root) > _CONSISTENCY_RTOL * scale:
        raise ConsistencyError(
            f"closed form {value!r} != polynomial root {root!r} for {coeffs}"
        )
    return value


# --- per-class case polynomials, closed forms and discriminators ----------
#
# Conventions: s = 2a + b - 2 is the primary discriminator; "phi" denotes
# the polynomial whose root is sigma0 (contact at the lower real endpoint of
# the region, witness z = -sigma0) and "psi" the one whose root is
# sigma_tilde0 (upper endpoint, witness z = +sigma_tilde0).


def _st_phi(p: ClassParams) -> Tuple[float, float, float]:
    a, b, l = p.alpha, p.beta, p.lam
    return (1.0 - 2.0 * a - b + l, -(2.0 - 2.0 * a + b), 1.0 - l)


def _st_sigma0(p: ClassParams) -> float:
    a, b, l = p.alpha, p.beta, p.lam
    t = 2.0 - 2.0 * a + b
    return 2.0 * (1.0 - l) / (
        t + math.sqrt(t * t + 4.0 * (1.0 - l) * (2.0 * a + b - 1.0 - l))
    )


def _exp_phi(p: ClassParams) -> Tuple[float, float, float]:
    a, b = p.alpha, p.beta
    return (
        1.0 - E * (2.0 * a + b - 1.0),
        -E * (2.0 - 2.0 * a + b),
        E - 1.0,
    )


def _exp_psi(p: ClassParams) -> Tuple[float, float, float]:
    a, b = p.alpha, p.beta
    return (2.0 * a + b - 1.0 - E, -(2.0 - 2.0 * a + b), E - 1.0)


def _exp_sigma0(p: ClassParams) -> float:
    a, b = p.alpha, p.beta
    t = 2.0 - 2.0 * a + b
    disc = (E * t) ** 2 - 4.0 * (E - 1.0) * (1.0 - E * (2.0 * a - 1.0 + b))
    return 2.0 * (E - 1.0) / (E * t + math.sqrt(disc))


def _exp_sigma_tilde0(p: ClassParams) -> float:
    a, b = p.alpha, p.beta
    t = 2.0 - 2.0 * a + b
    disc = t * t - 4.0 * (E - 1.0) * (2.0 * a - 1.0 + b - E)
    return 2.0 * (E - 1.0) / (t + math.sqrt(disc))


def _exp_x(p: ClassParams) -> Tuple[float, float]:
    """X(alpha, beta) for the exponential class, as (term1, term2)."""
    a, b = p.alpha, p.beta
    t = 2.0 + b - 2.0 * a
    sq = math.sqrt(t * t - 4.0 * (E - 1.0) * (2.0 * a - 1.0 + b - E))
    t1 = 2.0 * t * (1.0 + E * E - 2.0 * E * (2.0 * a + b - 1.0)) * (t - sq)
    t2 = 4.0 * (2.0 * a + b - 1.0 - E) * (E * E - 1.0) * (2.0 * a + b - 2.0)
    return t1, t2


def _exp_sigma_tilde1(p: ClassParams) -> float:
    a, b = p.alpha, p.beta
    return math.sqrt(
        (E - 1.0) ** 2 / ((1.0 + E) ** 2 - 4.0 * E * a - 2.0 * E * b)
    )


def _cardioid_phi(p: ClassParams) -> Tuple[float, float, float]:
    a, b = p.alpha, p.beta
    return (3.0 * (2.0 * a - 1.0 + b) - 1.0, 3.0 * (2.0 - 2.0 * a + b), -2.0)


def _cardioid_psi(p: ClassParams) -> Tuple[float, float, float]:
    a, b = p.alpha, p.beta
    return (2.0 * a - 1.0 + b - 3.0, -(2.0 - 2.0 * a + b), 2.0)


def _cardioid_sigma0(p: ClassParams) -> float:
    a, b = p.alpha, p.beta
    t = 2.0 - 2.0 * a + b
    disc = (3.0 * t) ** 2 + 8.0 * (6.0 * a + 3.0 * b - 4.0)
    return 4.0 / (3.0 * t + math.sqrt(disc))


def _cardioid_sigma_tilde0(p: ClassParams) -> float:
    a, b = p.alpha, p.beta
    t = 2.0 - 2.0 * a + b
    return 4.0 / (t + math.sqrt(t * t - 8.0 * (2.0 * a + b - 4.0)))


def _cardioid_x(p: ClassParams) -> Tuple[float, float]:
    a, b = p.alpha, p.beta
    u = 6.0 * a - 6.0 - 3.0 * b
    sq = math.sqrt((6.0 - 6.0 * a + 3.0 * b) ** 2 + 8.0 * (6.0 * a + 3.0 * b - 4.0))
    t1 = 2.0 * (8.0 - 6.0 * a - 3.0 * b) * u * (u + sq)
    t2 = 48.0 * (6.0 * a + 3.0 * b - 4.0) * (2.0 - 2.0 * a - b)
    return t1, t2


def _cardioid_sigma_tilde1(p: ClassParams) -> float:
    return math.sqrt(2.0 / (8.0 - 6.0 * p.alpha - 3.0 * p.beta))


def _rational_phi(p: ClassParams) -> Tuple[float, float, float]:
    a, b = p.alpha, p.beta
    return (
        2.0 * (SQRT2 - 1.0) - (2.0 * a - 1.0 + b),
        -(2.0 - 2.0 * a + b),
        3.0 - 2.0 * SQRT2,
    )


def _rational_psi(p: ClassParams) -> Tuple[float, float, float]:
    a, b = p.alpha, p.beta
    return (2.0 * a - 3.0 + b, -(2.0 - 2.0 * a + b), 1.0)


def _rational_sigma0(p: ClassParams) -> float:
    a, b = p.alpha, p.beta
    t = 2.0 - 2.0 * a + b
    c = 3.0 - 2.0 * SQRT2
    disc = t * t - 4.0 * c * (2.0 * SQRT2 - 1.0 - 2.0 * a - b)
    return 2.0 * c / (t + math.sqrt(disc))


def _rational_sigma_tilde0(p: ClassParams) -> float:
    a, b = p.alpha, p.beta
    t = 2.0 - 2.0 * a + b
    return 2.0 / (t + math.sqrt(t * t - 4.0 * (2.0 * a - 3.0 + b)))


def _rational_x(p: ClassParams) -> Tuple[float, float]:
    a, b = p.alpha, p.beta
    u = 2.0 * a - 2.0 - b
    c = 3.0 - 2.0 * SQRT2
    sq = math.sqrt(u * u - 4.0 * c * (2.0 * SQRT2 - 1.0 - 2.0 * a - b))
    t1 = 2.0 * u * (1.0 + SQRT2 - 2.0 * a - b) * (u + sq)
    v = 1.0 - 2.0 * SQRT2 + 2.0 * a + b
    t2 = 4.0 * v * (c * (1.0 + SQRT2 - 2.0 * a - b) + (1.0 - SQRT2) * v)
    return t1, t2


def _rational_sigma_tilde1(p: ClassParams) -> float:
    return math.sqrt((SQRT2 - 1.0) / (SQRT2 + 1.0 - 2.0 * p.alpha - p.beta))


def _nephroid_phi(p: ClassParams) -> Tuple[float, float, float]:
    a, b = p.alpha, p.beta
    return (4.0 - 6.0 * a - 3.0 * b, -3.0 * (2.0 - 2.0 * a + b), 2.0)


def _nephroid_psi(p: ClassParams) -> Tuple[float, float, float]:
    a, b = p.alpha, p.beta
    return (6.0 * a - 8.0 + 3.0 * b, -3.0 * (2.0 - 2.0 * a + b), 2.0)


def _nephroid_sigma0(p: ClassParams) -> float:
    a, b = p.alpha, p.beta
    t = 2.0 - 2.0 * a + b
    disc = 9.0 * t * t - 8.0 * (4.0 - 6.0 * a - 3.0 * b)
    return 4.0 / (3.0 * t + math.sqrt(disc))


def _nephroid_sigma_tilde0(p: ClassParams) -> float:
    a, b = p.alpha, p.beta
    t = 2.0 - 2.0 * a + b
    disc = 9.0 * t * t - 8.0 * (6.0 * a - 8.0 + 3.0 * b)
    return 4.0 / (3.0 * t + math.sqrt(disc))


def _sigmoid_phi(p: ClassParams) -> Tuple[float, float, float]:
    a, b = p.alpha, p.beta
    return (
        (2.0 - 2.0 * a - b) * (E + 1.0) - (E - 1.0),
        -(2.0 - 2.0 * a + b) * (E + 1.0),
        E - 1.0,
    )


def _sigmoid_psi(p: ClassParams) -> Tuple[float, float, float]:
    a, b = p.alpha, p.beta
    return (
        (2.0 - 2.0 * a - b) * (E + 1.0) + (E - 1.0),
        (2.0 - 2.0 * a + b) * (E + 1.0),
        -(E - 1.0),
    )


def _sigmoid_sigma0(p: ClassParams) -> float:
    a, b = p.alpha, p.beta
    t = (2.0 - 2.0 * a + b) * (E + 1.0)
    disc = t * t - 4.0 * (E - 1.0) * (
        3.0 + E - 2.0 * a - 2.0 * a * E - b - b * E
    )
    return 2.0 * (E - 1.0) / (t + math.sqrt(disc))


def _sigmoid_sigma_tilde0(p: ClassParams) -> float:
    a, b = p.alpha, p.beta
    t = (2.0 - 2.0 * a + b) * (E + 1.0)
    disc = t * t + 4.0 * (E - 1.0) * (
        1.0 + 3.0 * E - 2.0 * a - 2.0 * a * E - b - b * E
    )
    return 2.0 * (E - 1.0) / (t + math.sqrt(disc))


_X_FUNCS = {
    ClassKind.EXP: (_exp_x, _exp_sigma_tilde1),
    ClassKind.CARDIOID: (_cardioid_x, _cardioid_sigma_tilde1),
    ClassKind.RATIONAL: (_rational_x, _rational_sigma_tilde1),
}


def case_selector(params: ClassParams, target: TargetClass) -> CaseDiagnostics:
    """Branch diagnostics: the sign 2a+b-2, X(alpha, beta), sigma_tilde_1.

    X and sigma_tilde_1 exist only for the exponential, cardioid and
    rational classes; the nephroid and modified-sigmoid classes branch on
    the sign of 2a+b-2 alone, and the starlike-order class has no case
    analysis at all.
    """
    kind = target.kind
    if kind is ClassKind.STARLIKE_ORDER:
        raise NotApplicableError("starlike-order class has a single branch")
    s = 2.0 * params.alpha + params.beta - 2.0
    if kind not in _X_FUNCS:
        return CaseDiagnostics(two_alpha_beta_minus_two=s)
    x_func, st1_func = _X_FUNCS[kind]
    t1, t2 = x_func(params)
    st1 = st1_func(params) if s < 0.0 else None
    return CaseDiagnostics(
        two_alpha_beta_minus_two=s, x_value=t1 + t2, sigma_tilde_1=st1
    )


def _x_is_nonpositive(t1: float, t2: float) -> bool:
    # |X| below fp noise of its constituents counts as X <= 0; the two
    # branch values coincide on the transition set so the tie is harmless.
    return t1 + t2 <= _X_TIE_RTOL * max(1.0, abs(t1), abs(t2))


def _result(branch: Branch, value: float, diag: CaseDiagnostics) -> RadiusResult:
    sign = (
        WitnessSign.MINUS_SIGMA if branch is Branch.SIGMA0 else WitnessSign.PLUS_SIGMA
    )
    return RadiusResult(value=value, branch=branch, witness_sign=sign, diagnostics=diag)


def radius_starlike_order(params: ClassParams) -> RadiusResult:
    """Radius of starlikeness of order lam for F; single sigma0 branch."""
    value = _checked(_st_sigma0(params), _st_phi(params))
    diag = CaseDiagnostics(2.0 * params.alpha + params.beta - 2.0)
    return _result(Branch.SIGMA0, value, diag)


def _two_branch_radius(
    params: ClassParams,
    kind: ClassKind,
    phi_coeffs,
    psi_coeffs,
    sigma0,
    sigma_tilde0,
) -> RadiusResult:
    diag = case_selector(params, TargetClass(kind))
    s = diag.two_alpha_beta_minus_two
    if kind in _X_FUNCS:
        t1, t2 = _X_FUNCS[kind][0](params)
        take_sigma0 = s >= 0.0 or _x_is_nonpositive(t1, t2)
    else:
        take_sigma0 = s >= 0.0
    if take_sigma0:
        value = _checked(sigma0(params), phi_coeffs(params))
        return _result(Branch.SIGMA0, value, diag)
    value = _checked(sigma_tilde0(params), psi_coeffs(params))
    return _result(Branch.SIGMA_TILDE0, value, diag)


def radius_exp(params: ClassParams) -> RadiusResult:
    """Radius for the class subordinate to e^z."""
    return _two_branch_radius(
        params, ClassKind.EXP, _exp_phi, _exp_psi, _exp_sigma0, _exp_sigma_tilde0
    )


def radius_cardioid(params: ClassParams) -> RadiusResult:
    """Radius for the class whose target region is bounded by a cardioid."""
    return _two_branch_radius(
        params,
        ClassKind.CARDIOID,
        _cardioid_phi,
        _cardioid_psi,
        _cardioid_sigma0,
        _cardioid_sigma_tilde0,
    )


def radius_rational(params: ClassParams) -> RadiusResult:
    """Radius for the class of the rational map with k = sqrt(2) + 1."""
    return _two_branch_radius(
        params,
        ClassKind.RATIONAL,
        _rational_phi,
        _rational_psi,
        _rational_sigma0,
        _rational_sigma_tilde0,
    )


def radius_nephroid(params: ClassParams) -> RadiusResult:
    """Radius for the class whose target region is bounded by a nephroid."""
    return _two_branch_radius(
        params,
        ClassKind.NEPHROID,
        _nephroid_phi,
        _nephroid_psi,
        _nephroid_sigma0,
        _nephroid_sigma_tilde0,
    )


def radius_sigmoid(params: ClassParams) -> RadiusResult:
    """Radius for the class of the modified sigmoid 2/(1 + e^-z)."""
    return _two_branch_radius(
        params,
        ClassKind.MOD_SIGMOID,
        _sigmoid_phi,
        _sigmoid_psi,
        _sigmoid_sigma0,
        _sigmoid_sigma_tilde0,
    )


_RADIUS_FUNCS = {
    ClassKind.EXP: radius_exp,
    ClassKind.CARDIOID: radius_cardioid,
    ClassKind.RATIONAL: radius_rational,
    ClassKind.NEPHROID: radius_nephroid,
    ClassKind.MOD_SIGMOID: radius_sigmoid,
}

_PHI_COEFFS = {
    ClassKind.STARLIKE_ORDER: _st_phi,
    ClassKind.EXP: _exp_phi,
    ClassKind.CARDIOID: _cardioid_phi,
    ClassKind.RATIONAL: _rational_phi,
    ClassKind.NEPHROID: _nephroid_phi,
    ClassKind.MOD_SIGMOID: _sigmoid_phi,
}

_PSI_COEFFS = {
    ClassKind.EXP: _exp_psi,
    ClassKind.CARDIOID: _cardioid_psi,
    ClassKind.RATIONAL: _rational_psi,
    ClassKind.NEPHROID: _nephroid_psi,
    ClassKind.MOD_SIGMOID: _sigmoid_psi,
}


def radius(target: TargetClass, params: ClassParams) -> RadiusResult:
    """Sharp radius for any target class."""
    if target.kind is ClassKind.STARLIKE_ORDER:
        p = ClassParams(params.alpha, params.beta, target.lam)
        return radius_starlike_order(p)
    return _RADIUS_FUNCS[target.kind](params)


def case_polynomial(
    target: TargetClass, params: ClassParams, branch: Branch
) -> Tuple[float, float, float]:
    """Coefficients (a2, a1, a0) of the polynomial defining the branch root."""
    if branch is Branch.SIGMA0:
        if target.kind is ClassKind.STARLIKE_ORDER:
            p = ClassParams(params.alpha, params.beta, target.lam)
            return _st_phi(p)
        return _PHI_COEFFS[target.kind](params)
    if target.kind is ClassKind.STARLIKE_ORDER:
        raise NotApplicableError("starlike-order class has no sigma_tilde0 branch")
    return _PSI_COEFFS[target.kind](params)
