
import pytest

from gft_radii import (
    Branch,
    OutOfRangeError,
    RadiusResult,
    WitnessSign,
    ZeroInsideDiscError,
    validate_params,
    validate_polynomial,
)


def test_valid_params_basic():
    p = validate_params(0.0, 1.0, 0.0)
    assert (p.alpha, p.beta, p.lam) == (0.0, 1.0, 0.0)
    assert not p.degenerate


def test_beta_zero_rejected():
    with pytest.raises(OutOfRangeError):
        validate_params(0.5, 0.0, 0.0)


def test_alpha_one_is_degenerate():
    p = validate_params(1.0, 2.0, 0.25)
    assert p.degenerate


@pytest.mark.parametrize(
    "alpha,beta,lam",
    [(-0.1, 1, 0), (1.1, 1, 0), (0.5, -1, 0), (0.5, 1, -0.1), (0.5, 1, 1.0)],
)
def test_out_of_range_params(alpha, beta, lam):
    with pytest.raises(OutOfRangeError):
        validate_params(alpha, beta, lam)


def test_params_revalidate_identically():
    p = validate_params(0.3, 2.5, 0.7)
    q = validate_params(p.alpha, p.beta, p.lam)
    assert p == q


def test_polynomial_degree_one():
    spec = validate_polynomial([-1])
    assert spec.degree == 1
    assert spec.evaluate(0.5) == pytest.approx(1.5)  # Q(z) = 1 + z


def test_polynomial_degree_two():
    spec = validate_polynomial([2j, -3])
    assert spec.degree == 2


def test_polynomial_zero_inside_disc_rejected():
    with pytest.raises(ZeroInsideDiscError) as exc:
        validate_polynomial([0.5])
    assert exc.value.index == 1


def test_polynomial_normalized_at_origin():
    spec = validate_polynomial([1.5 + 2j, -4, 10j, -1 - 1j])
    assert abs(spec.evaluate(0.0) - 1.0) <= 1e-15


def test_radius_result_branch_witness_pairing():
    with pytest.raises(ValueError):
        RadiusResult(0.5, Branch.SIGMA0, WitnessSign.PLUS_SIGMA)
    ok = RadiusResult(0.5, Branch.SIGMA_TILDE0, WitnessSign.PLUS_SIGMA)
    assert ok.value == 0.5


def test_radius_result_range():
    with pytest.raises(OutOfRangeError):
        RadiusResult(0.0, Branch.SIGMA0, WitnessSign.MINUS_SIGMA)
    with pytest.raises(OutOfRangeError):
        RadiusResult(1.5, Branch.SIGMA0, WitnessSign.MINUS_SIGMA)
