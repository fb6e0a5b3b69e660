"""Command line front end: `gft-radii radius | scan | verify | plot`.

Exit codes: 0 success, 1 usage or validation error, 2 verification failure.
All numeric output uses 12 significant digits; scans are emitted in
deterministic alpha-major order so repeated runs are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Sequence

from .oracle import OracleConfig, numeric_radius
from .params import Branch, ClassParams, OutOfRangeError, ZeroInsideDiscError
from .plotting import render_svg
from .radii import ClassKind, TargetClass, radius
from .verification import ALL_CLASSES, run_verification

_CLASS_NAMES = {
    "st": ClassKind.STARLIKE_ORDER,
    "exp": ClassKind.EXP,
    "cardioid": ClassKind.CARDIOID,
    "rational": ClassKind.RATIONAL,
    "nephroid": ClassKind.NEPHROID,
    "sigmoid": ClassKind.MOD_SIGMOID,
}

CSV_COLUMNS = (
    "class,alpha,beta,lambda,radius,branch,case,oracle_radius,residual"
)


def _fmt(x: float) -> str:
    return f"{float(x):.12g}"


def _case_label(target: TargetClass, result) -> str:
    diag = result.diagnostics
    if target.kind is ClassKind.STARLIKE_ORDER or diag is None:
        return "single"
    if diag.two_alpha_beta_minus_two >= 0.0:
        return "2a+b-2>=0"
    if diag.x_value is None:
        return "2a+b-2<0"
    return "X<=0" if result.branch is Branch.SIGMA0 else "X>0"


def _record(
    class_name: str,
    target: TargetClass,
    params: ClassParams,
    oracle: Optional[float] = None,
) -> dict:
    result = radius(target, params)
    rec = {
        "class": class_name,
        "alpha": params.alpha,
        "beta": params.beta,
        "lambda": target.lam,
        "radius": result.value,
        "branch": result.branch.value,
        "case": _case_label(target, result),
        "oracle_radius": oracle,
        "residual": None if oracle is None else abs(result.value - oracle),
    }
    return rec


def _record_json(rec: dict) -> str:
    out = dict(rec)
    for key in ("alpha", "beta", "lambda", "radius", "oracle_radius", "residual"):
        if out[key] is not None:
            out[key] = float(_fmt(out[key]))
    return json.dumps(out)


def _record_csv_row(rec: dict) -> str:
    cells = [
        rec["class"],
        _fmt(rec["alpha"]),
        _fmt(rec["beta"]),
        _fmt(rec["lambda"]),
        _fmt(rec["radius"]),
        rec["branch"],
        rec["case"],
        "" if rec["oracle_radius"] is None else _fmt(rec["oracle_radius"]),
        "" if rec["residual"] is None else _fmt(rec["residual"]),
    ]
    return ",".join(cells)


def _parse_range(text: str) -> List[float]:
    parts = text.split(":")
    if len(parts) == 1:
        return [float(parts[0])]
    if len(parts) != 3:
        raise ValueError(f"range {text!r} is not lo:hi:step")
    lo, hi, step = (float(p) for p in parts)
    if step <= 0.0 or hi < lo:
        raise ValueError(f"range {text!r} must have step > 0 and hi >= lo")
    values = []
    k = 0
    while True:
        v = lo + k * step
        if v > hi + 1e-12 * max(1.0, abs(hi)):
            break
        values.append(min(v, hi))
        k += 1
    return values


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("GFT_RADII_THREADS", "1")))
    except ValueError:
        return 1


def cmd_radius(args: argparse.Namespace) -> int:
    kind = _CLASS_NAMES[args.klass]
    params = ClassParams(args.alpha, args.beta, args.lam)
    target = TargetClass(kind, args.lam)
    rec = _record(args.klass, target, params)
    if args.format == "json":
        print(_record_json(rec))
    else:
        result = radius(target, params)
        print(f"class     {args.klass}")
        print(f"alpha     {_fmt(params.alpha)}")
        print(f"beta      {_fmt(params.beta)}")
        print(f"lambda    {_fmt(target.lam)}")
        print(f"radius    {_fmt(result.value)}")
        print(f"branch    {result.branch.value}")
        print(f"case      {rec['case']}")
    return 0


def cmd_scan(args: argparse.Namespace) -> int:
    kind = _CLASS_NAMES[args.klass]
    alphas = _parse_range(args.alpha)
    betas = _parse_range(args.beta)
    lams = _parse_range(args.lam) if args.lam else [0.0]
    cfg = OracleConfig()
    points = [
        (a, b, l) for a in alphas for b in betas for l in lams
    ]  # alpha-major, then beta, then lambda

    def row(point) -> str:
        a, b, l = point
        target = TargetClass(kind, l)
        params = ClassParams(a, b, l)
        oracle = numeric_radius(target, params, cfg) if args.oracle else None
        return _record_csv_row(_record(args.klass, target, params, oracle))

    n = _threads()
    if n > 1:
        with ThreadPoolExecutor(max_workers=n) as pool:
            rows = list(pool.map(row, points))
    else:
        rows = [row(p) for p in points]
    text = "\n".join([CSV_COLUMNS] + rows) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    if args.klass == "all":
        classes = ALL_CLASSES
    else:
        kind = _CLASS_NAMES[args.klass]
        classes = [t for t in ALL_CLASSES if t.kind is kind]
    results = run_verification(
        classes=classes, tol=args.tol, samples=args.samples, seed=args.seed
    )
    failed = 0
    for res in results:
        print(res.line())
        failed += 0 if res.passed else 1
    print(f"{len(results) - failed} passed, {failed} failed")
    return 0 if failed == 0 else 2


def cmd_plot(args: argparse.Namespace) -> int:
    kind = _CLASS_NAMES[args.klass]
    params = ClassParams(args.alpha, args.beta, args.lam)
    target = TargetClass(kind, args.lam)
    svg = render_svg(target, params)
    try:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(svg)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gft-radii",
        description=(
            "Sharp starlikeness radii for products of starlike functions "
            "with non-vanishing polynomials."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_class_params(sp, with_values=True):
        sp.add_argument(
            "--class",
            dest="klass",
            required=True,
            choices=sorted(_CLASS_NAMES),
        )
        if with_values:
            sp.add_argument("--alpha", type=float, required=True)
            sp.add_argument("--beta", type=float, required=True)
            sp.add_argument("--lambda", dest="lam", type=float, default=0.0)

    sp = sub.add_parser("radius", help="single-point closed-form radius")
    add_class_params(sp)
    sp.add_argument("--format", choices=("json", "text"), default="text")
    sp.set_defaults(func=cmd_radius)

    sp = sub.add_parser("scan", help="CSV grid scan")
    sp.add_argument(
        "--class", dest="klass", required=True, choices=sorted(_CLASS_NAMES)
    )
    sp.add_argument("--alpha", required=True, help="lo:hi:step or single value")
    sp.add_argument("--beta", required=True, help="lo:hi:step or single value")
    sp.add_argument("--lambda", dest="lam", default="", help="lo:hi:step")
    sp.add_argument("--oracle", action="store_true")
    sp.add_argument("--out", default="")
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("verify", help="full verification battery")
    sp.add_argument(
        "--class", dest="klass", default="all", choices=["all", *sorted(_CLASS_NAMES)]
    )
    sp.add_argument("--tol", type=float, default=1e-9)
    sp.add_argument("--samples", type=int, default=1000)
    sp.add_argument("--seed", type=int, default=42)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("plot", help="SVG tangency figure")
    add_class_params(sp)
    sp.add_argument("--out", required=True)
    sp.set_defaults(func=cmd_plot)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (OutOfRangeError, ZeroInsideDiscError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
