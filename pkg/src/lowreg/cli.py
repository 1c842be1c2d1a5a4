# -*- coding: utf-8 -*-
"""
Command line front end: lowreg {converge,conserve,step,oracle-check,full}
"""

import argparse
import sys
from typing import List, Optional

import numpy as np
from loguru import logger

from lowreg import settings
from lowreg.baselines.oracle_suite import ORACLE_TOLERANCE, oracle_check_passed, run_oracle_check
from lowreg.experiment.config import (
    ExperimentConfig,
    InitialData,
    ReferencePolicy,
    parse_ladder,
    parse_methods,
)
from lowreg.experiment.conservation import run_conservation_study
from lowreg.experiment.convergence import ensemble_order, full_error_study, run_convergence_study
from lowreg.experiment.report import csv_body, metadata_lines, write_csv
from lowreg.experiment.runner import JobRunner
from lowreg.integrator.params import Method
from lowreg.integrator.stepper import integrate
from lowreg.spectral.norms import NormKind


def _add_run_arguments(ap: argparse.ArgumentParser) -> None:
    ap.add_argument("--dim", type=int, default=1, help="torus dimension d")
    ap.add_argument("--n", type=int, default=256, help="grid points per axis (even)")
    ap.add_argument("--r", type=float, default=3.0, help="regularity of the random data")
    ap.add_argument("--mu", type=float, default=1.0, help="nonlinearity coefficient")
    ap.add_argument("--T", type=float, default=1.0, help="final time")
    ap.add_argument("--seed", type=int, default=0, help="random data seed")
    ap.add_argument("--data", choices=[d.value for d in InitialData], default=InitialData.RANDOM.value)
    ap.add_argument("--amplitude", type=complex, default=1.0, help="plane-wave amplitude, e.g. 0.5 or 0.5+0.5j")
    ap.add_argument("--wave-mode", type=str, default=None, help="plane-wave mode, e.g. '2' or '1,1'")
    ap.add_argument(
        "--phi1-target", choices=["conjugate", "cubic"], default="conjugate",
        help="field the phi1 multiplier of lowregdd acts on",
    )
    ap.add_argument("--out", type=str, default=None, help="CSV output path (stdout if omitted)")


def _add_ladder_arguments(ap: argparse.ArgumentParser) -> None:
    ap.add_argument("--methods", type=str, default="lowreg1d,strang", help="comma-separated methods")
    ap.add_argument("--norm", type=str, default="l2", help="l2, h1 or sobolev:<r>")
    ap.add_argument("--taus", type=str, default="0.0625:2:4", help="start:factor:count or comma list")
    ap.add_argument(
        "--reference", choices=[p.value for p in ReferencePolicy],
        default=ReferencePolicy.CROSS_METHOD.value,
    )
    ap.add_argument("--refinement", type=int, default=None, help="reference step tau_min/refinement")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="lowreg",
        description="Low-regularity Fourier integrators for the cubic NLS on the torus",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    converge = sub.add_parser("converge", help="global time error and fitted orders")
    _add_run_arguments(converge)
    _add_ladder_arguments(converge)
    converge.add_argument(
        "--seeds", type=str, default=None,
        help="comma-separated seeds; median fitted orders over them go to the metadata",
    )

    full = sub.add_parser("full", help="space and time error over several resolutions")
    _add_run_arguments(full)
    _add_ladder_arguments(full)
    full.add_argument("--n-values", type=str, required=True, help="comma-separated resolutions")

    conserve = sub.add_parser("conserve", help="energy and mass time series")
    _add_run_arguments(conserve)
    conserve.add_argument("--method", type=str, default="lowreg1d")
    conserve.add_argument("--tau", type=float, required=True)
    conserve.add_argument("--stride", type=int, default=1, help="record every stride steps")

    step = sub.add_parser("step", help="single run, dump the final field")
    _add_run_arguments(step)
    step.add_argument("--method", type=str, default="lowreg1d")
    step.add_argument("--tau", type=float, required=True)

    oracle = sub.add_parser("oracle-check", help="closed forms against direct Fourier sums")
    oracle.add_argument("--dim", type=int, default=1)
    oracle.add_argument("--n", type=int, default=16)
    oracle.add_argument("--seed", type=int, default=0)
    oracle.add_argument("--tau", type=float, default=0.5)
    return ap


def _config(args, methods, taus) -> ExperimentConfig:
    wave_mode = tuple(int(k) for k in args.wave_mode.split(",")) if args.wave_mode else ()
    return ExperimentConfig(
        dim=args.dim,
        n=args.n,
        T=args.T,
        taus=taus,
        methods=methods,
        r=args.r,
        seed=args.seed,
        mu=args.mu,
        norm=NormKind.parse(getattr(args, "norm", "l2")),
        reference=ReferencePolicy(getattr(args, "reference", ReferencePolicy.CROSS_METHOD.value)),
        refinement=getattr(args, "refinement", None),
        data=InitialData(args.data),
        wave_amplitude=args.amplitude,
        wave_mode=wave_mode,
        phi1_target=args.phi1_target,
    )


def _emit(args, columns, rows, metadata) -> None:
    if args.out:
        write_csv(args.out, columns, rows, metadata)
        logger.info(f"wrote {args.out}")
        return
    sys.stdout.write("\n".join(metadata) + "\n" + csv_body(columns, rows))


def _converge(args) -> int:
    cfg = _config(args, parse_methods(args.methods), parse_ladder(args.taus))
    runner = JobRunner()
    result = run_convergence_study(cfg, runner)
    extra = {"reference": result.reference, "fits": result.fits}
    if args.seeds:
        seeds = [int(s) for s in args.seeds.split(",")]
        extra["median_order"] = ensemble_order(cfg, seeds, runner)
        extra["seeds"] = seeds
    metadata = metadata_lines(cfg.to_dict(), **extra)
    _emit(args, ["method", "tau", "error", "order_fit", "irregular"], result.rows(), metadata)
    return 0


def _full(args) -> int:
    cfg = _config(args, parse_methods(args.methods), parse_ladder(args.taus))
    n_values = [int(n) for n in args.n_values.split(",")]
    result = full_error_study(cfg, n_values)
    rows = []
    for key, table in result.tables.items():
        method, _, n = key.partition("@")
        fit = result.fits.get(key)
        order = fit.order if fit is not None and fit.reliable else None
        irregular = int(fit.irregular) if fit is not None else None
        rows.extend((method, int(n), tau, error, order, irregular) for tau, error in table)
    metadata = metadata_lines(result.config, reference=result.reference, fits=result.fits)
    _emit(args, ["method", "n", "tau", "error", "order_fit", "irregular"], rows, metadata)
    return 0


def _conserve(args) -> int:
    cfg = _config(args, (Method.parse(args.method),), (args.tau,))
    series = run_conservation_study(cfg, stride=args.stride)
    metadata = metadata_lines(
        cfg.to_dict(),
        stride=args.stride,
        drift={
            "energy_drift": series.energy_drift,
            "mass_drift": series.mass_drift,
            "energy_growth": series.energy_growth,
            "mass_growth": series.mass_growth,
        },
    )
    _emit(args, ["t", "energy", "mass"], series.rows(), metadata)
    return 0


def _step(args) -> int:
    method = Method.parse(args.method)
    cfg = _config(args, (method,), (args.tau,))
    u = integrate(cfg.initial_value(), cfg.T, cfg.params(method, args.tau))
    grid = u.grid
    values = u.physical()
    axes = range(1, grid.dim + 1)
    columns = [f"index_{j}" for j in axes] + [f"x_{j}" for j in axes] + ["re", "im"]
    rows = []
    for index in np.ndindex(grid.shape):
        x = [i * grid.mesh_width for i in index]
        value = values[index]
        rows.append(list(index) + x + [float(value.real), float(value.imag)])
    _emit(args, columns, rows, metadata_lines(cfg.to_dict()))
    return 0


def _oracle_check(args) -> int:
    report = run_oracle_check(args.dim, args.n, args.seed, args.tau)
    for name, deviation in report.items():
        print(f"{name}\t{deviation:.3e}")
    passed = oracle_check_passed(report)
    print(f"{'PASS' if passed else 'FAIL'} (tolerance {ORACLE_TOLERANCE:g})")
    return 0 if passed else 1


COMMANDS = {
    "converge": _converge,
    "full": _full,
    "conserve": _conserve,
    "step": _step,
    "oracle-check": _oracle_check,
}


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logger.remove()
    logger.add(sys.stderr, level=settings.log_level)
    try:
        return COMMANDS[args.command](args)
    except (ValueError, NotImplementedError) as e:
        logger.error(f"lowreg {args.command}: {e}")
        return 2


if __name__ == "__main__":
    sys.exit(main())
