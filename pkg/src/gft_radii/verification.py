"""Verification suites shared by the `verify` CLI subcommand and the tests.

Each suite returns CheckResult records; a run passes when every record does.
All randomness is driven by an explicit seed, so runs are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence

import numpy as np

from .analytic import extremal_w
from .oracle import (
    OracleConfig,
    containment_profile,
    numeric_radius,
    random_extremal_specs,
    target_domain,
    verify_disc_bound,
    verify_sharpness,
)
from .params import ClassParams
from .radii import ClassKind, TargetClass, case_polynomial, radius
from .regions import (
    DomainKind,
    TargetDomain,
    contains,
    contains_many,
    inscribed_radius,
    real_diameter,
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} {self.name}" + (
            f" ({self.detail})" if self.detail else ""
        )


ALL_CLASSES = [
    TargetClass(ClassKind.STARLIKE_ORDER, 0.0),
    TargetClass(ClassKind.EXP),
    TargetClass(ClassKind.CARDIOID),
    TargetClass(ClassKind.RATIONAL),
    TargetClass(ClassKind.NEPHROID),
    TargetClass(ClassKind.MOD_SIGMOID),
]

_BOUNDED_DOMAINS = [
    DomainKind.EXP,
    DomainKind.CARDIOID,
    DomainKind.RATIONAL,
    DomainKind.NEPHROID,
    DomainKind.MOD_SIGMOID,
]

ALPHA_GRID = np.linspace(0.0, 1.0, 11)
BETA_GRID = (0.25, 0.5, 1.0, 2.0, 4.0)
LAMBDA_GRID = (0.0, 0.25, 0.5)


def _grid_params(target: TargetClass) -> Iterable[ClassParams]:
    lams = LAMBDA_GRID if target.kind is ClassKind.STARLIKE_ORDER else (target.lam,)
    for lam in lams:
        for a in ALPHA_GRID:
            for b in BETA_GRID:
                yield ClassParams(float(a), float(b), float(lam))


def check_lemma_consistency(centers: int = 64, angles: int = 720) -> List[CheckResult]:
    """Inscribed discs at (1 - 1e-6) r_a lie inside; inflating by 1e-4 exits."""
    theta = np.exp(2j * np.pi * np.arange(angles) / angles)
    results = []
    for kind in _BOUNDED_DOMAINS:
        domain = TargetDomain(kind)
        lo, hi = real_diameter(domain)
        a_vals = np.linspace(lo, hi, centers + 2)[1:-1]
        inside_ok = True
        outside_ok = True
        for a in a_vals:
            ra = inscribed_radius(domain, float(a))
            pts = a + ra * (1.0 - 1e-6) * theta
            if not contains_many(domain, pts).all():
                inside_ok = False
            pts = a + ra * (1.0 + 1e-4) * theta
            if contains_many(domain, pts).all():
                outside_ok = False
        results.append(
            CheckResult(f"lemma-inscribed-inside[{kind.value}]", inside_ok)
        )
        results.append(
            CheckResult(f"lemma-inscribed-maximal[{kind.value}]", outside_ok)
        )
    return results


def check_disc_bound_mc(n_specs: int, seed: int) -> List[CheckResult]:
    """Monte-Carlo covering-disc and polynomial bounds (zero violations)."""
    rng = np.random.default_rng(seed)
    specs = random_extremal_specs(n_specs, rng)
    r_grid = [0.1 * k for k in range(1, 10)]
    viol = verify_disc_bound(specs, r_grid, samples=256)
    return [
        CheckResult(
            "disc-bound-monte-carlo",
            viol.total == 0,
            f"{n_specs} specs, disc={viol.disc}, polynomial={viol.polynomial}",
        )
    ]


def check_root_residuals(classes: Sequence[TargetClass]) -> List[CheckResult]:
    """Returned radii satisfy their case polynomial to 1e-10 (scaled)."""
    results = []
    for target in classes:
        worst = 0.0
        ok = True
        for p in _grid_params(target):
            res = radius(target, p)
            a2, a1, a0 = case_polynomial(target, p, res.branch)
            r = res.value
            resid = abs(a2 * r * r + a1 * r + a0)
            scale = 1.0 + max(abs(a2), abs(a1), abs(a0))
            worst = max(worst, resid / scale)
            if resid > 1e-10 * scale:
                ok = False
        results.append(
            CheckResult(
                f"root-residual[{target.kind.value}]", ok, f"max scaled {worst:.3e}"
            )
        )
    return results


def check_oracle_agreement(
    classes: Sequence[TargetClass], cfg: OracleConfig
) -> List[CheckResult]:
    """Closed form and first-principles oracle agree on the standard grid."""
    threshold = max(1e-6, 10.0 * cfg.tol)
    results = []
    for target in classes:
        worst = 0.0
        ok = True
        for p in _grid_params(target):
            tc = (
                TargetClass(ClassKind.STARLIKE_ORDER, p.lam)
                if target.kind is ClassKind.STARLIKE_ORDER
                else target
            )
            closed = radius(tc, p).value
            est = numeric_radius(tc, p, cfg)
            gap = abs(closed - est)
            worst = max(worst, gap)
            if gap > threshold:
                ok = False
        results.append(
            CheckResult(
                f"oracle-agreement[{target.kind.value}]",
                ok,
                f"max |closed-oracle| {worst:.3e} <= {threshold:.1e}",
            )
        )
    return results


def check_containment_monotone(
    classes: Sequence[TargetClass], cfg: OracleConfig
) -> List[CheckResult]:
    """Disc containment is monotone in r (any re-entry is reported)."""
    results = []
    for target in classes:
        findings = []
        for p in [ClassParams(a, b, target.lam) for a in (0.0, 0.5, 1.0) for b in (0.5, 2.0)]:
            _, flags = containment_profile(target, p, cfg)
            if flags.any() and not flags.all():
                first_fail = int(np.argmin(flags))
                if flags[first_fail:].any():
                    findings.append(f"a={p.alpha},b={p.beta}")
        results.append(
            CheckResult(
                f"containment-monotone[{target.kind.value}]",
                not findings,
                "; ".join(findings) if findings else "no re-entry",
            )
        )
    return results


def check_sharpness(
    classes: Sequence[TargetClass], per_class: int, seed: int
) -> List[CheckResult]:
    """Witness residual ~ 0; interior at R(1-1e-4); exterior at R(1+1e-4)."""
    rng = np.random.default_rng(seed)
    results = []
    for target in classes:
        worst = 0.0
        ok = True
        for _ in range(per_class):
            p = ClassParams(
                float(rng.uniform(0.0, 1.0)),
                float(rng.uniform(0.05, 4.0)),
                target.lam,
            )
            res = radius(target, p)
            rep = verify_sharpness(target, p, res.value, 1e-4)
            worst = max(worst, rep.boundary_residual)
            if rep.boundary_residual > 1e-9 or rep.inside_margin_below <= 0.0:
                ok = False
            w_out = extremal_w(p, res.witness_sign.value * res.value * (1.0 + 1e-4))
            if contains(target_domain(target), w_out):
                ok = False
        results.append(
            CheckResult(
                f"sharpness[{target.kind.value}]",
                ok,
                f"{per_class} draws, max residual {worst:.3e}",
            )
        )
    return results


def check_branch_vs_oracle(
    cfg: OracleConfig, grid: int = 21
) -> List[CheckResult]:
    """Exponential-class branch selection against the oracle where 2a+b-2 < 0.

    The case analysis for this class evaluates its center-crossing
    polynomial at sigma_tilde0 while the parallel cardioid argument uses
    sigma0; both selectors flip on the same transition set, so the chosen
    branch must track the oracle everywhere.  Disagreements beyond 1e-6 are
    reported rather than silently accepted.
    """
    target = TargetClass(ClassKind.EXP)
    disagreements = []
    worst = 0.0
    for a in np.linspace(0.0, 1.0, grid):
        for b in np.linspace(0.05, 2.0, grid):
            if 2.0 * a + b - 2.0 >= 0.0:
                continue
            p = ClassParams(float(a), float(b))
            closed = radius(target, p).value
            est = numeric_radius(target, p, cfg)
            gap = abs(closed - est)
            worst = max(worst, gap)
            if gap > 1e-6:
                disagreements.append(f"a={a:.3f},b={b:.3f},gap={gap:.2e}")
    detail = f"max gap {worst:.3e}"
    if disagreements:
        detail += "; branch/oracle disagreements: " + "; ".join(disagreements)
    return [CheckResult("exp-branch-vs-oracle", not disagreements, detail)]


def run_verification(
    classes: Optional[Sequence[TargetClass]] = None,
    tol: float = 1e-9,
    samples: int = 1000,
    seed: int = 42,
) -> List[CheckResult]:
    """The full verification battery; `classes` filters the per-class suites."""
    cfg = OracleConfig(tol=tol)
    selected = list(classes) if classes is not None else ALL_CLASSES
    results: List[CheckResult] = []
    results += check_lemma_consistency()
    results += check_disc_bound_mc(samples, seed)
    results += check_root_residuals(selected)
    results += check_oracle_agreement(selected, cfg)
    results += check_containment_monotone(selected, cfg)
    results += check_sharpness(selected, per_class=50, seed=seed)
    if any(t.kind is ClassKind.EXP for t in selected):
        results += check_branch_vs_oracle(cfg)
    return results
