import json

import numpy as np
import pytest

import gft_radii.cli as cli
from gft_radii.cli import CSV_COLUMNS, main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_radius_text(capsys):
    code, out, _ = run(
        capsys, "radius", "--class", "st", "--alpha", "0", "--beta", "1"
    )
    assert code == 0
    assert "radius    0.333333333333" in out
    assert "branch    sigma0" in out
    assert "case      single" in out


def test_radius_json_round_trip(capsys):
    argv = [
        "radius", "--class", "exp", "--alpha", "0.5", "--beta", "1",
        "--format", "json",
    ]
    code, out1, _ = run(capsys, *argv)
    assert code == 0
    rec = json.loads(out1)
    assert rec["class"] == "exp"
    assert rec["radius"] == pytest.approx(0.289561, abs=1e-6)
    assert rec["oracle_radius"] is None
    code, out2, _ = run(capsys, *argv)
    assert out1 == out2  # byte-identical reruns


def test_radius_validation_error(capsys):
    code, _, err = run(
        capsys, "radius", "--class", "st", "--alpha", "2", "--beta", "1"
    )
    assert code == 1
    assert "error:" in err


def test_radius_lambda_out_of_range(capsys):
    code, _, err = run(
        capsys, "radius", "--class", "st", "--alpha", "0.5", "--beta", "1",
        "--lambda", "1.5",
    )
    assert code == 1
    assert "error:" in err


def test_scan_grid_rows(capsys):
    code, out, _ = run(
        capsys, "scan", "--class", "cardioid", "--alpha", "0:1:0.5",
        "--beta", "1",
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == CSV_COLUMNS
    assert len(lines) == 4  # header + alphas {0, 0.5, 1}
    alphas = [float(line.split(",")[1]) for line in lines[1:]]
    assert alphas == [0.0, 0.5, 1.0]  # alpha-major deterministic order
    assert float(lines[3].split(",")[4]) == pytest.approx(0.4)


def test_scan_deterministic(capsys, tmp_path):
    outs = []
    for i in range(2):
        path = tmp_path / f"scan{i}.csv"
        code, _, _ = run(
            capsys, "scan", "--class", "exp", "--alpha", "0:1:0.25",
            "--beta", "0.5:2:0.5", "--out", str(path),
        )
        assert code == 0
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]


def test_scan_with_oracle(capsys):
    code, out, _ = run(
        capsys, "scan", "--class", "st", "--alpha", "0.5", "--beta", "1",
        "--oracle",
    )
    assert code == 0
    row = out.strip().split("\n")[1].split(",")
    assert row[7] != "" and row[8] != ""
    assert float(row[8]) <= 1e-6  # |closed form - oracle|


def test_scan_bad_range(capsys):
    code, _, err = run(
        capsys, "scan", "--class", "st", "--alpha", "0:1", "--beta", "1"
    )
    assert code == 1
    assert "error:" in err


def test_verify_single_class(capsys):
    code, out, _ = run(
        capsys, "verify", "--class", "st", "--samples", "50", "--seed", "1"
    )
    assert code == 0
    assert "PASS" in out
    assert "0 failed" in out


def test_verify_failure_exit_code(capsys, monkeypatch):
    import gft_radii.verification as verification

    def broken(*args, **kwargs):
        return [verification.CheckResult("forced-failure", False, "injected")]

    monkeypatch.setattr(cli, "run_verification", broken)
    code, out, _ = run(capsys, "verify", "--class", "st")
    assert code == 2
    assert "FAIL" in out


def test_plot_svg(capsys, tmp_path):
    path = tmp_path / "fig.svg"
    code, _, _ = run(
        capsys, "plot", "--class", "cardioid", "--alpha", "1", "--beta", "1",
        "--out", str(path),
    )
    assert code == 0
    svg = path.read_text()
    for ident in ('id="region"', 'id="disc"', 'id="image"'):
        assert ident in svg
    assert svg.startswith("<?xml") or svg.startswith("<svg")


def test_plot_tangency_geometry():
    from gft_radii import ClassKind, ClassParams, TargetClass
    from gft_radii.plotting import tangency_curves

    region, disc, image, R = tangency_curves(
        TargetClass(ClassKind.CARDIOID), ClassParams(1.0, 1.0)
    )
    assert R == pytest.approx(0.4)
    # image curve touches the region boundary at the witness value 1/3
    gap = np.min(np.abs(image - (1 / 3)))
    assert gap <= 1e-6
    # disc circle also passes through the same tangency point
    assert np.min(np.abs(disc - (1 / 3))) <= 1e-3


def test_plot_half_plane_region_is_vertical_line():
    from gft_radii import ClassKind, ClassParams, TargetClass
    from gft_radii.plotting import tangency_curves

    region, _, _, _ = tangency_curves(
        TargetClass(ClassKind.STARLIKE_ORDER, 0.25), ClassParams(0.0, 1.0)
    )
    assert np.allclose(region.real, 0.25, atol=1e-12)


def test_plot_unwritable_path(capsys, tmp_path):
    bad = tmp_path / "missing-dir" / "fig.svg"
    code, _, err = run(
        capsys, "plot", "--class", "exp", "--alpha", "1", "--beta", "1",
        "--out", str(bad),
    )
    assert code == 1
    assert "error:" in err
