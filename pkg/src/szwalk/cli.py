"""Command-line entry point: ``szwalk {chars,spectrum,overlap,mixing,basis-prob,verify}``."""

from __future__ import annotations

import argparse
import contextlib
import csv
import sys
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

import numpy as np

from . import characters as ch
from . import formats, spectral, szegedy, verify
from .symgroup import Permutation, class_size, unrank

MAX_CHAR_N = 30


@dataclass
class RunConfig:
    n: int
    t_max: int = 50
    T: int = 500
    beta: Fraction = Fraction(85, 16)
    tolerance: float = 1e-9
    format: str = "csv"
    seed: int = 0


def _config(args) -> RunConfig:
    return RunConfig(
        n=args.n,
        t_max=getattr(args, "t_max", 50),
        T=getattr(args, "T", 500),
        beta=Fraction(getattr(args, "beta", "85/16")),
        tolerance=getattr(args, "tol", 1e-9),
        format=args.format,
        seed=getattr(args, "seed", 0),
    )


def _check_sim_n(n: int) -> None:
    limit = szegedy.max_simulation_n()
    if not 2 <= n <= limit:
        raise SystemExit(f"simulation commands need 2 <= n <= {limit} (set SZW_MAX_N to change)")


def _write_rows(rows: list[dict], fields, fmt: str, out, extra: dict | None = None) -> None:
    if fmt == "json":
        payload = {**(extra or {}), "rows": rows}
        out.write(formats.dumps(payload) + "\n")
        return
    writer = csv.DictWriter(out, fieldnames=list(fields), lineterminator="\n", extrasaction="ignore")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: ("" if v is None else v) for k, v in row.items()})


# -- subcommands -----------------------------------------------------------------


def cmd_chars(args, out) -> int:
    cfg = _config(args)
    if not 1 <= cfg.n <= MAX_CHAR_N:
        raise SystemExit(f"character tables need 1 <= n <= {MAX_CHAR_N}")
    parts, classes, table = ch.character_table(cfg.n)
    labels = [formats.format_parts(c) for c in classes]
    rows = [
        {"partition": formats.format_parts(lam), **dict(zip(labels, values))}
        for lam, values in zip(parts, table)
    ]
    status = 0
    extra = {"n": cfg.n, "class_sizes": {lab: class_size(c) for lab, c in zip(labels, classes)}}
    if args.verify:
        err = verify.orthogonality_error(cfg.n)
        extra["orthogonality_error"] = err
        print(f"orthogonality max error: {err}", file=sys.stderr)
        status = 0 if err == 0 else 1
    _write_rows(rows, ["partition", *labels], cfg.format, out, extra)
    return status


def cmd_spectrum(args, out) -> int:
    cfg = _config(args)
    if cfg.n < 2:
        raise SystemExit("spectrum needs n >= 2")
    members: dict[Fraction, list[str]] = {}
    for mu in ch.partitions(cfg.n):
        members.setdefault(spectral.lambda_tilde(mu), []).append(formats.format_parts(mu))
    rows = [
        {
            "lambda_tilde": formats.format_fraction(value),
            "multiplicity": mult,
            "partitions": "; ".join(members[value]),
        }
        for value, mult in spectral.spectrum_of_D(cfg.n)
    ]
    extra: dict = {"n": cfg.n}
    status = 0
    if args.dense_check:
        if cfg.n > 6:
            raise SystemExit("--dense-check is limited to n <= 6")
        err = verify.spectrum_error(cfg.n)
        extra["dense_max_error"] = err
        print(f"dense eigensolver max error: {err:.3e}", file=sys.stderr)
        status = 0 if err <= cfg.tolerance else 1
    _write_rows(rows, ["lambda_tilde", "multiplicity", "partitions"], cfg.format, out, extra)
    return status


def cmd_overlap(args, out) -> int:
    cfg = _config(args)
    if args.mode != "analytic":
        _check_sim_n(cfg.n)
    elif cfg.n < 3:
        raise SystemExit("the n-cycle overlap needs n >= 3")
    simulated = None
    if args.mode != "analytic":
        simulated = szegedy.overlap_series(szegedy.WalkOperator(cfg.n), cfg.t_max).real
    rhs = float(Fraction(cfg.n**20) * cfg.beta ** (2 * cfg.n) / factorial(cfg.n))
    rows = []
    for t in range(cfg.t_max + 1):
        sim = None if simulated is None else float(simulated[t])
        if args.mode == "simulated":
            row = formats.report_row(cfg.n, t, sim, sim, rhs)
            row["analytic"] = None
            row["abs_diff"] = None
        else:
            row = formats.report_row(cfg.n, t, spectral.analytic_overlap(cfg.n, t), sim, rhs)
        rows.append(row)
    status = 0
    if args.mode == "both":
        worst = max(r["abs_diff"] for r in rows)
        print(f"max |analytic - simulated| = {worst:.3e}", file=sys.stderr)
        status = 0 if worst <= cfg.tolerance else 1
    _write_rows(rows, formats.REPORT_FIELDS, cfg.format, out, {"beta": cfg.beta})
    return status


def cmd_mixing(args, out) -> int:
    cfg = _config(args)
    _check_sim_n(cfg.n)
    w = szegedy.WalkOperator(cfg.n)
    y = Permutation.from_string(args.y) if args.y else unrank(cfg.n, 0)
    row = szegedy.average_mixing_row(w, y, cfg.T)
    mass = float(row[szegedy.ncycle_mask(cfg.n)].sum())
    print(f"n-cycle mass {mass:.6g} vs classical {1 / cfg.n:.6g}", file=sys.stderr)
    if cfg.format == "json":
        extra = {
            "n": cfg.n,
            "T": cfg.T,
            "start": str(y),
            "ncycle_mass": mass,
            "classical_uniform": 1.0 / cfg.n,
        }
        _write_rows(formats.distribution_rows(cfg.n, row), formats.DISTRIBUTION_COLUMNS, "json", out, extra)
    else:
        formats.write_distribution_csv(cfg.n, row, out)
    return 0


def cmd_basis_prob(args, out) -> int:
    cfg = _config(args)
    _check_sim_n(cfg.n)
    w = szegedy.WalkOperator(cfg.n)
    g = Permutation.from_string(args.g) if args.g else Permutation(tuple(range(1, cfg.n)) + (0,))
    series = szegedy.basis_probability_series(w, g, cfg.t_max)
    rows = [
        {"n": cfg.n, "t": t, "permutation": str(g), "probability": float(p)}
        for t, p in enumerate(series)
    ]
    _write_rows(rows, ["n", "t", "permutation", "probability"], cfg.format, out)
    return 0


def cmd_verify(args, out) -> int:
    results = verify.run_suite(extended=args.extended, seed=args.seed)
    report = verify.summary(results)
    if args.format == "json":
        out.write(formats.dumps(report) + "\n")
    else:
        _write_rows(
            report["checks"],
            ["name", "n", "max_error", "tolerance", "passed", "asserted", "seconds", "note"],
            "csv",
            out,
        )
    return 0 if report["passed"] else 1


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="szwalk", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, default_format="csv"):
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--format", choices=("csv", "json"), default=default_format)
        p.add_argument("--out", help="output file (default: stdout)")
        p.add_argument("--threads", type=int, help="cap on BLAS/OpenMP worker threads")
        p.add_argument("--tol", type=float, default=1e-9)
        p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("chars", help="character table of S_n")
    common(p)
    p.add_argument("--verify", action="store_true", help="check orthogonality relations")
    p.set_defaults(func=cmd_chars)

    p = sub.add_parser("spectrum", help="eigenvalues of the discriminant")
    common(p)
    p.add_argument("--dense-check", action="store_true")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("overlap", help="<phi_[n]|W^t|phi_e> time series")
    common(p)
    p.add_argument("--t-max", type=int, default=50)
    p.add_argument("--beta", default="85/16")
    p.add_argument("--mode", choices=("analytic", "simulated", "both"), default="both")
    p.set_defaults(func=cmd_overlap)

    p = sub.add_parser("mixing", help="average mixing row from A|y>")
    common(p)
    p.add_argument("--T", type=int, default=500)
    p.add_argument("--y", help="start permutation, one-line (default identity)")
    p.set_defaults(func=cmd_mixing)

    p = sub.add_parser("basis-prob", help="sum_s |<g,gs|W^t|phi_e>|^2 over t")
    common(p)
    p.add_argument("--t-max", type=int, default=20)
    p.add_argument("--g", help="target permutation, one-line (default the n-cycle 1 2 ... 0)")
    p.set_defaults(func=cmd_basis_prob)

    p = sub.add_parser("verify", help="run the invariant suite")
    p.add_argument("--extended", action="store_true", help="add n = 6 reconciliation")
    p.add_argument("--format", choices=("csv", "json"), default="json")
    p.add_argument("--out")
    p.add_argument("--threads", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    limits = contextlib.nullcontext()
    if args.threads:
        from threadpoolctl import threadpool_limits

        limits = threadpool_limits(limits=args.threads)
    with limits:
        if args.out:
            with open(args.out, "w", newline="") as out:
                return args.func(args, out)
        return args.func(args, sys.stdout)


if __name__ == "__main__":
    sys.exit(main())
