
import numpy as np
import pytest

from gft_radii import (
    ClassParams,
    ExtremalSpec,
    OutOfRangeError,
    PoleHitError,
    disc_bound,
    extremal_w,
    general_w,
    log_derivative_Q,
    psi_lower_bound,
    validate_polynomial,
)
from gft_radii.oracle import random_extremal_specs


def test_log_derivative_at_origin():
    assert log_derivative_Q(validate_polynomial([-1]), 0.0) == 0.0


def test_log_derivative_single_zero():
    assert log_derivative_Q(validate_polynomial([-1]), 0.5) == pytest.approx(1.0 / 3.0)


def test_log_derivative_repeated_zero():
    spec = validate_polynomial([-1, -1])
    assert log_derivative_Q(spec, 0.5) == pytest.approx(2.0 / 3.0)


def test_log_derivative_pole():
    with pytest.raises(PoleHitError):
        log_derivative_Q(validate_polynomial([-1]), -1.0)


def test_extremal_w_normalization():
    assert extremal_w(ClassParams(0.3, 1.7), 0.0) == 1.0


def test_extremal_w_st_radius_root():
    # Re w hits 0 exactly at the starlikeness radius 1/3 for (a, b) = (0, 1).
    assert extremal_w(ClassParams(0.0, 1.0), -1.0 / 3.0) == pytest.approx(0.0)


def test_extremal_w_alexander_root():
    assert extremal_w(ClassParams(1.0, 1.0), -0.5) == pytest.approx(0.0)


def test_extremal_w_pole():
    with pytest.raises(PoleHitError):
        extremal_w(ClassParams(0.0, 1.0), 1.0)


def test_general_w_matches_extremal_for_canonical_spec():
    params = ClassParams(0.0, 1.0)
    spec = ExtremalSpec(params, validate_polynomial([-1]), rotation=1.0)
    for r in np.linspace(-0.9, 0.9, 19):
        assert general_w(spec, r) == pytest.approx(
            extremal_w(params, r), abs=1e-14
        )


def test_general_w_at_origin():
    spec = ExtremalSpec(
        ClassParams(0.5, 1.0), validate_polynomial([2, -3j]), rotation=-1.0
    )
    assert general_w(spec, 0.0) == 1.0


def test_general_w_stays_in_covering_disc():
    params = ClassParams(0.5, 1.0)
    spec = ExtremalSpec(params, validate_polynomial([2]), rotation=-1.0)
    d = disc_bound(params, 0.3)
    w = general_w(spec, 0.3)
    assert abs(w - d.center) <= d.radius + 1e-12


def test_rotation_must_be_unimodular():
    with pytest.raises(OutOfRangeError):
        ExtremalSpec(ClassParams(0.0, 1.0), validate_polynomial([-1]), rotation=0.5)


def test_disc_bound_degenerate_at_origin():
    d = disc_bound(ClassParams(0.7, 2.0), 0.0)
    assert (d.center, d.radius) == (1.0, 0.0)


def test_disc_bound_values():
    d = disc_bound(ClassParams(0.0, 1.0), 0.5)
    assert d.center == pytest.approx(4.0 / 3.0)
    assert d.radius == pytest.approx(2.0)
    d = disc_bound(ClassParams(0.5, 1.0), 0.5)
    assert d.center == pytest.approx(1.0)  # 2a + b - 2 = 0 pins the center
    assert d.radius == pytest.approx(4.0 / 3.0)


def test_disc_bound_r_out_of_range():
    with pytest.raises(OutOfRangeError):
        disc_bound(ClassParams(0.0, 1.0), 1.0)


def test_psi_values():
    assert psi_lower_bound(ClassParams(0.1, 3.0), 0.0) == 1.0
    assert psi_lower_bound(ClassParams(0.0, 1.0), 1.0 / 3.0) == pytest.approx(0.0)


@pytest.mark.parametrize("alpha,beta", [(0.0, 1.0), (0.5, 1.0), (1.0, 0.25), (0.3, 4.0)])
def test_psi_strictly_decreasing(alpha, beta):
    p = ClassParams(alpha, beta)
    rs = np.linspace(0.1, 0.9, 9)
    vals = [psi_lower_bound(p, r) for r in rs]
    assert all(b < a for a, b in zip(vals, vals[1:]))


@pytest.mark.parametrize("alpha,beta", [(0.0, 1.0), (0.9, 0.5), (1.0, 2.0), (0.2, 1.5)])
def test_psi_consistent_with_disc(alpha, beta):
    p = ClassParams(alpha, beta)
    for r in np.linspace(0.0, 0.95, 20):
        d = disc_bound(p, r)
        assert psi_lower_bound(p, r) == pytest.approx(d.center - d.radius, abs=1e-12)


@pytest.mark.parametrize(
    "alpha,beta,increasing",
    [(0.0, 1.0, True), (0.2, 0.5, True), (1.0, 1.0, False), (0.5, 1.5, False)],
)
def test_center_monotonicity(alpha, beta, increasing):
    # a_F increases in r when 2a + b - 2 < 0 and decreases otherwise.
    p = ClassParams(alpha, beta)
    centers = [disc_bound(p, r).center for r in np.linspace(0.05, 0.9, 18)]
    diffs = np.diff(centers)
    assert (diffs > 0).all() if increasing else (diffs <= 1e-15).all()


def test_monte_carlo_disc_covering_sample():
    rng = np.random.default_rng(3)
    circle = np.exp(2j * np.pi * np.arange(256) / 256)
    for spec in random_extremal_specs(60, rng):
        for r in (0.1, 0.5, 0.9):
            d = disc_bound(spec.params, r)
            ws = general_w(spec, r * circle)
            assert (np.abs(ws - d.center) <= d.radius + 1e-10).all()
