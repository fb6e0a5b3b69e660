import math

import numpy as np
import pytest

from gft_radii import (
    ClassKind,
    ClassParams,
    DomainKind,
    ExtremalSpec,
    OracleConfig,
    OutOfRangeError,
    PolynomialSpec,
    TargetClass,
    WitnessPoleError,
    numeric_radius,
    radius,
    random_extremal_specs,
    target_domain,
    verify_disc_bound,
    verify_sharpness,
)

E = math.e


def test_target_domain_mapping():
    d = target_domain(TargetClass(ClassKind.STARLIKE_ORDER, 0.25))
    assert d.kind is DomainKind.HALF_PLANE and d.lam == 0.25
    assert target_domain(TargetClass(ClassKind.EXP)).kind is DomainKind.EXP
    assert target_domain(TargetClass(ClassKind.MOD_SIGMOID)).kind is DomainKind.MOD_SIGMOID


def test_oracle_config_validation():
    with pytest.raises(OutOfRangeError):
        OracleConfig(tol=0.0)
    with pytest.raises(OutOfRangeError):
        OracleConfig(boundary_samples=3)
    with pytest.raises(OutOfRangeError):
        OracleConfig(coarse_steps=1)


def test_numeric_radius_half_plane():
    r = numeric_radius(TargetClass(ClassKind.STARLIKE_ORDER), ClassParams(0, 1))
    assert r == pytest.approx(1 / 3, abs=1e-8)


def test_numeric_radius_exp():
    r = numeric_radius(TargetClass(ClassKind.EXP), ClassParams(1, 1))
    assert r == pytest.approx((E - 1) / (2 * E - 1), abs=1e-8)


def test_numeric_radius_nephroid_small_beta():
    r = numeric_radius(TargetClass(ClassKind.NEPHROID), ClassParams(0, 1e-8))
    assert r == pytest.approx(0.25, abs=1e-6)


@pytest.mark.parametrize(
    "kind",
    [
        ClassKind.STARLIKE_ORDER,
        ClassKind.EXP,
        ClassKind.CARDIOID,
        ClassKind.RATIONAL,
        ClassKind.NEPHROID,
        ClassKind.MOD_SIGMOID,
    ],
)
def test_oracle_agrees_with_closed_form(kind):
    target = TargetClass(kind)
    for alpha, beta in [(0.0, 0.5), (0.5, 1.0), (1.0, 2.0)]:
        p = ClassParams(alpha, beta)
        closed = radius(target, p).value
        numeric = numeric_radius(target, p)
        assert numeric == pytest.approx(closed, abs=1e-6)


def test_sharpness_cardioid_example():
    rep = verify_sharpness(
        TargetClass(ClassKind.CARDIOID), ClassParams(1, 1), 0.4, 1e-4
    )
    assert rep.witness_z == pytest.approx(-0.4)
    assert rep.witness_w == pytest.approx(1 / 3)
    assert rep.boundary_residual <= 1e-9
    assert rep.inside_margin_below > 0.0


def test_sharpness_plus_branch_witness():
    target = TargetClass(ClassKind.NEPHROID)
    p = ClassParams(0.0, 1e-6)
    res = radius(target, p)
    rep = verify_sharpness(target, p, res.value, 1e-4)
    assert rep.witness_z == pytest.approx(res.value)  # witness at +R
    assert rep.boundary_residual <= 1e-9
    assert rep.inside_margin_below > 0.0


def test_sharpness_rejects_pole():
    with pytest.raises(WitnessPoleError):
        verify_sharpness(TargetClass(ClassKind.EXP), ClassParams(0, 1), 1.0, 1e-4)


def test_disc_bound_empty():
    report = verify_disc_bound([], np.linspace(0.05, 0.5, 5))
    assert report.total == 0


def test_disc_bound_random_specs():
    rng = np.random.default_rng(7)
    specs = random_extremal_specs(50, rng)
    report = verify_disc_bound(specs, np.linspace(0.05, 0.9, 12))
    assert report.disc == 0
    assert report.polynomial == 0


def test_disc_bound_detects_violation(monkeypatch):
    # shrink the reported disc so that the extremal values must escape it
    import gft_radii.oracle as oracle_mod
    from gft_radii import Disc, disc_bound

    def shrunken(params, r):
        d = disc_bound(params, r)
        return Disc(d.center, d.radius * 0.5)

    monkeypatch.setattr(oracle_mod, "disc_bound", shrunken)
    spec = ExtremalSpec(ClassParams(0.0, 1.0), PolynomialSpec((-1.0 + 0j,)))
    report = verify_disc_bound([spec], np.array([0.5]))
    assert report.disc > 0


def test_random_specs_properties():
    rng = np.random.default_rng(0)
    specs = random_extremal_specs(20, rng)
    assert len(specs) == 20
    for s in specs:
        assert abs(abs(s.rotation) - 1.0) <= 1e-12
        assert 1 <= s.polynomial.degree <= 5
        assert all(abs(z) >= 1.0 for z in s.polynomial.zeros)
