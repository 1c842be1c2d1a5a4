# -*- coding: utf-8 -*-
"""
Convergence studies: global time error, full space-time error, one-step
error and multi-seed order ensembles.
"""

from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from loguru import logger

from lowreg.baselines.plane_wave import plane_wave
from lowreg.baselines.reference import default_refinement, reference_solve
from lowreg.integrator.params import Method, SchemeParams
from lowreg.integrator.stepper import integrate, step
from lowreg.spectral.field import Field, resample
from lowreg.spectral.norms import DiscreteL2, NormKind, norm

from .config import ExperimentConfig, ReferencePolicy
from .order import estimate_order
from .results import ConvergenceResult
from .runner import JobRunner


def reference_method(method: Method, dim: int) -> Method:
    """The independent method whose fine solution measures `method`."""
    if method is Method.STRANG:
        return Method.LOWREG_1D if dim == 1 else Method.LOWREG_DD
    return Method.STRANG


def _refinement(cfg: ExperimentConfig) -> int:
    if cfg.refinement is not None:
        return cfg.refinement
    return default_refinement(cfg.taus[-1], cfg.taus[-1])


def _references(
    cfg: ExperimentConfig,
    u0: Field,
    runner: JobRunner,
) -> Tuple[Dict[Method, Field], Dict[str, str]]:
    """Reference solution at T for every method under study."""
    if cfg.reference is ReferencePolicy.ANALYTIC:
        exact = plane_wave(cfg.wave_amplitude, cfg.wave_mode, cfg.mu, cfg.T, cfg.grid)
        return {m: exact for m in cfg.methods}, {m.value: "analytic" for m in cfg.methods}

    refinement = _refinement(cfg)
    tau_min = cfg.taus[-1]
    needed = sorted({reference_method(m, cfg.dim) for m in cfg.methods}, key=lambda m: m.value)
    jobs = [
        (ref, lambda ref=ref: reference_solve(u0, cfg.T, cfg.params(ref, tau_min), refinement))
        for ref in needed
    ]
    logger.info(
        f"computing {len(jobs)} reference solution(s) at tau={tau_min / refinement:g}",
    )
    solved = runner.run(jobs)
    fields = {m: solved[reference_method(m, cfg.dim)] for m in cfg.methods}
    labels = {
        m.value: f"cross-method:{reference_method(m, cfg.dim).value}/{refinement}"
        for m in cfg.methods
    }
    return fields, labels


def run_convergence_study(
    cfg: ExperimentConfig,
    runner: Optional[JobRunner] = None,
) -> ConvergenceResult:
    """Global error at T for each method and step size, with fitted orders."""
    runner = runner or JobRunner()
    u0 = cfg.initial_value()
    references, labels = _references(cfg, u0, runner)

    jobs = [
        ((method, tau), lambda method=method, tau=tau: integrate(u0, cfg.T, cfg.params(method, tau)))
        for method in cfg.methods
        for tau in cfg.taus
    ]
    solved = runner.run(jobs)

    result = ConvergenceResult(reference=labels, config=cfg.to_dict())
    for method in cfg.methods:
        table = [
            (tau, norm(solved[(method, tau)] - references[method], cfg.norm))
            for tau in cfg.taus
        ]
        result.tables[method.value] = table
        if len(table) < 2:
            continue
        fit = result.fits[method.value] = estimate_order(table)
        if fit.order is not None:
            logger.info(f"{method.value}: fitted order {fit.order:.3f} (reliable={fit.reliable})")
    return result


def full_error_study(
    cfg: ExperimentConfig,
    n_values: Sequence[int],
    runner: Optional[JobRunner] = None,
) -> ConvergenceResult:
    """Space and time error at T for several resolutions.

    The initial value is built on the finest grid cfg.n and truncated to
    each coarser grid. The reference is the finest-grid cross-method solution
    at the finest step refined; coarse solutions are zero-padded onto the
    finest grid before measuring. Tables are keyed "method@N".
    """
    if cfg.reference is not ReferencePolicy.CROSS_METHOD:
        raise ValueError("Full-error study needs the cross-method reference")
    for n in n_values:
        if n > cfg.n:
            raise ValueError(f"Resolution {n} exceeds the reference resolution {cfg.n}")
    runner = runner or JobRunner()
    u0 = cfg.initial_value()
    references, labels = _references(cfg, u0, runner)

    jobs = [
        (
            (method, n, tau),
            lambda method=method, n=n, tau=tau: resample(
                integrate(resample(u0, n), cfg.T, cfg.params(method, tau)), cfg.n,
            ),
        )
        for method in cfg.methods
        for n in n_values
        for tau in cfg.taus
    ]
    solved = runner.run(jobs)

    config = cfg.to_dict()
    config["n_values"] = list(n_values)
    result = ConvergenceResult(config=config)
    for method in cfg.methods:
        for n in n_values:
            key = f"{method.value}@{n}"
            table = [
                (tau, norm(solved[(method, n, tau)] - references[method], cfg.norm))
                for tau in cfg.taus
            ]
            result.tables[key] = table
            result.reference[key] = f"{labels[method.value]}@{cfg.n}"
            if len(table) >= 2:
                result.fits[key] = estimate_order(table)
    return result


def local_error_study(
    u0: Field,
    p: SchemeParams,
    taus: Sequence[float],
    refinement: int,
    kind: NormKind = DiscreteL2,
    reference: Method = Method.STRANG,
) -> List[Tuple[float, float]]:
    """One-step errors |Φ_τ(u0) - u_ref(τ)| against a refined reference."""
    table = []
    for tau in taus:
        trial = step(u0, p.with_tau(tau))
        exact = reference_solve(u0, tau, p.with_tau(tau).with_method(reference), refinement)
        table.append((tau, norm(trial - exact, kind)))
    return table


def ensemble_order(
    cfg: ExperimentConfig,
    seeds: Sequence[int],
    runner: Optional[JobRunner] = None,
) -> Dict[str, Optional[float]]:
    """Median over seeds of the reliable fitted orders, per method."""
    orders: Dict[str, List[float]] = {m.value: [] for m in cfg.methods}
    for seed in seeds:
        result = run_convergence_study(cfg.with_seed(seed), runner)
        for method, fit in result.fits.items():
            if fit.reliable:
                orders[method].append(fit.order)

    medians: Dict[str, Optional[float]] = {}
    for method, values in orders.items():
        if not values:
            logger.warning(f"{method}: no reliable order fit over seeds {list(seeds)}")
            medians[method] = None
            continue
        medians[method] = float(np.median(values))
        logger.info(f"{method}: median order {medians[method]:.3f} over {len(values)} seed(s)")
    return medians
