"""Command-line front end.

Subcommands: eval-poly, gram, spectrum, plot-data, verify.
Exit codes: 0 success, 1 verification/consistency failure, 2 usage or config
error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from .config import load_config
from .errors import (
    AccuracyError,
    ConsistencyError,
    DomainError,
    NumericError,
    ParameterError,
    SingularityError,
    UsageError,
)
from .exceptional import (
    ClassicalJacobi,
    ClassicalLaguerre,
    family_from_dict,
    gram_matrix,
    x1_polynomial,
)
from .io_utils import csv_lines, format_json, write_atomic
from .polynomials import eval_jacobi, eval_laguerre
from .systems import reduce_system, system_from_json, system_to_dict, wavefunction
from .verify import isospectral_compare

_USAGE_ERRORS = (UsageError, ParameterError, DomainError)
_NUMERIC_ERRORS = (ConsistencyError, AccuracyError, NumericError, SingularityError)


def _emit(text: str, out: str | None) -> None:
    if out:
        write_atomic(out, text)
    else:
        sys.stdout.write(text)


def _parse_family(text: str):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"family spec is not valid JSON: {exc}") from exc
    return family_from_dict(data)


def _parse_points(args) -> np.ndarray:
    if args.points is not None:
        try:
            values = [float(tok) for tok in args.points.split(",") if tok.strip()]
        except ValueError as exc:
            raise UsageError(f"bad --points list: {args.points!r}") from exc
        if not values:
            raise UsageError("--points lists no values")
        return np.asarray(values)
    lo, hi = args.range
    if not lo < hi:
        raise UsageError(f"range needs lo < hi, got {lo} {hi}")
    return np.linspace(lo, hi, args.count)


def cmd_eval_poly(args) -> int:
    family = _parse_family(args.family)
    x = _parse_points(args)
    if isinstance(family, ClassicalLaguerre):
        values = eval_laguerre(args.n, family.k, x)
        poly = None
    elif isinstance(family, ClassicalJacobi):
        values = eval_jacobi(args.n, family.alpha, family.beta, x)
        poly = None
    else:
        pair = x1_polynomial(family, args.n)
        poly = pair.polynomial
        values = poly(x)
    _emit(csv_lines(["x", "value"], zip(x.tolist(), values.tolist())), args.out)
    if args.coeffs_out:
        if poly is None:
            from .exceptional import family_members

            poly = family_members(family, args.n + 1)[args.n]
        write_atomic(args.coeffs_out, poly.to_json() + "\n")
    return 0


def cmd_gram(args) -> int:
    family = _parse_family(args.family)
    g = gram_matrix(family, args.n_max)
    rows = [(i, j, float(g[i, j])) for i in range(g.shape[0]) for j in range(g.shape[1])]
    _emit(csv_lines(["i", "j", "value"], rows), args.out)
    return 0


def cmd_spectrum(args) -> int:
    params = system_from_json(args.system)
    if args.levels < 1:
        raise UsageError(f"levels must be positive, got {args.levels}")
    report = isospectral_compare(params, args.levels, grid_points=args.grid_points)
    rows = [
        (n, report.eigenvalues_original[n], report.eigenvalues_extended[n],
         report.spectral_diffs[n])
        for n in range(args.levels)
    ]
    if args.format == "json":
        payload = {"system": system_to_dict(params), "levels": [
            {"level": n, "E_original": e_o, "E_extended": e_e, "abs_diff": d}
            for n, e_o, e_e, d in rows
        ]}
        _emit(format_json(payload) + "\n", args.out)
    else:
        _emit(csv_lines(["level", "E_original", "E_extended", "abs_diff"], rows), args.out)
    if args.psi_out:
        reduced = reduce_system(params)
        result = _grid_eigenfunctions(reduced, args.levels, args.grid_points)
        header = ["x"] + [f"psi_{n}" for n in range(args.levels)]
        grid_rows = [
            [float(x)] + [float(v) for v in result.eigenfunctions[i, :]]
            for i, x in enumerate(result.grid.points)
        ]
        write_atomic(args.psi_out, csv_lines(header, grid_rows))
    return 0


def _grid_eigenfunctions(reduced, levels, grid_points):
    from .spectral import Grid, apply_coordinate_weight, discretize, eigen_lowest

    grid = Grid(*reduced.grid_domain, grid_points)
    op = discretize(reduced.operator_potential, grid)
    if reduced.eigen_weight is not None:
        op = apply_coordinate_weight(op, reduced.eigen_weight)
    return eigen_lowest(op, levels)


def cmd_plot_data(args) -> int:
    params = system_from_json(args.system)
    reduced = reduce_system(params)
    lo, hi = args.range
    if not (reduced.domain.contains(lo) and reduced.domain.contains(hi) and lo < hi):
        raise UsageError(
            f"range ({lo}, {hi}) outside system domain "
            f"({reduced.domain.lo}, {reduced.domain.hi})"
        )
    x = np.linspace(lo, hi, args.count)
    v_orig = reduced.original(x)
    v_shift = reduced.shift(x)
    v_ext = reduced.extended(x)
    if args.variant == "original":
        indices = list(range(args.levels))
    else:
        indices = list(range(1, args.levels + 1))
    psis = [wavefunction(params, args.variant, n)(x).val for n in indices]
    header = ["x", "V_original", "V_e", "V_extended"] + [f"psi_{n}" for n in indices]
    rows = [
        [float(x[i]), float(v_orig[i]), float(v_shift[i]), float(v_ext[i])]
        + [float(p[i]) for p in psis]
        for i in range(x.size)
    ]
    _emit(csv_lines(header, rows), args.out)
    return 0


def cmd_verify(args) -> int:
    config = load_config(args.config)
    levels = args.levels if args.levels is not None else config.levels
    grid_points = args.grid_points if args.grid_points is not None else config.grid.points
    out_dir = args.out if args.out is not None else config.output.path
    all_passed = True
    for index, params in enumerate(config.systems):
        kind = type(params).__name__
        report = isospectral_compare(
            params, levels,
            grid_points=grid_points,
            tolerances=config.tolerances,
            domain=config.grid.domain_for(kind),
        )
        all_passed &= report.passed
        path = os.path.join(out_dir, f"report_{index}_{kind}.json")
        write_atomic(path, format_json(report.to_dict()) + "\n")
        status = "PASS" if report.passed else "FAIL"
        print(
            f"{status} {kind} max|dE|={max(report.spectral_diffs):.3e} "
            f"residual={report.max_wavefunction_residual:.3e} "
            f"gram={report.gram_max_offdiag:.3e} -> {path}"
        )
    return 0 if all_passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="xop",
        description="Exceptional-polynomial isospectral potential toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval-poly", help="tabulate a classical or X1 polynomial")
    p.add_argument("--family", required=True, help='family JSON, e.g. {"kind":"X1Laguerre","params":{"k":0.5}}')
    p.add_argument("--n", type=int, required=True, help="degree")
    p.add_argument("--points", help="comma-separated evaluation points")
    p.add_argument("--range", type=float, nargs=2, metavar=("LO", "HI"))
    p.add_argument("--count", type=int, default=101)
    p.add_argument("--coeffs-out", help="also write the coefficient JSON array here")
    p.add_argument("--out")
    p.set_defaults(func=cmd_eval_poly)

    p = sub.add_parser("gram", help="Gram matrix of a family under its weight")
    p.add_argument("--family", required=True)
    p.add_argument("--n-max", type=int, default=4)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gram)

    p = sub.add_parser("spectrum", help="original vs extended eigenvalues")
    p.add_argument("--system", required=True, help='system JSON, e.g. {"kind":"DiracOscillator","params":{"l":0}}')
    p.add_argument("--levels", type=int, default=4)
    p.add_argument("--grid-points", type=int, default=2000)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--psi-out", help="write grid eigenfunctions CSV here")
    p.add_argument("--out")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("plot-data", help="potential and wavefunction samples")
    p.add_argument("--system", required=True)
    p.add_argument("--range", type=float, nargs=2, metavar=("LO", "HI"), required=True)
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--levels", type=int, default=3)
    p.add_argument("--variant", choices=("original", "exceptional"), default="original")
    p.add_argument("--out")
    p.set_defaults(func=cmd_plot_data)

    p = sub.add_parser("verify", help="run the full verification pipeline")
    p.add_argument("--config", help="config JSON path (bundled default otherwise)")
    p.add_argument("--levels", type=int)
    p.add_argument("--grid-points", type=int)
    p.add_argument("--out", help="report directory (overrides config)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except _USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except _NUMERIC_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
