# -*- coding: utf-8 -*-
"""
Long-time tracking of energy and mass
"""

from typing import Optional, Tuple

import numpy as np
from loguru import logger
from scipy.stats import linregress

from lowreg.integrator.stepper import integrate
from lowreg.spectral.field import Field

from .config import ExperimentConfig
from .functionals import energy, mass
from .results import ConservationSeries


def drift_statistics(times, values) -> Tuple[float, float, Optional[float]]:
    """(max relative deviation, linear growth coefficient, |correlation|)."""
    values = np.asarray(values, dtype=np.float64)
    scale = abs(values[0]) if values[0] != 0 else 1.0
    deviation = (values - values[0]) / scale
    max_drift = float(np.max(np.abs(deviation)))
    if len(values) < 2:
        return max_drift, 0.0, None
    fit = linregress(np.asarray(times, dtype=np.float64), deviation)
    return max_drift, float(fit.slope), abs(float(fit.rvalue))


def run_conservation_study(cfg: ExperimentConfig, stride: int = 1) -> ConservationSeries:
    """Energy and mass every `stride` steps for the single method and τ of cfg."""
    if len(cfg.methods) != 1 or len(cfg.taus) != 1:
        raise ValueError(
            "Conservation study needs exactly one method and one step size, "
            f"got {len(cfg.methods)} method(s) and {len(cfg.taus)} step size(s)",
        )
    method, tau = cfg.methods[0], cfg.taus[0]
    series = ConservationSeries(method=method.value, tau=tau)

    def record(n: int, t: float, u: Field) -> None:
        series.times.append(t)
        series.energy.append(energy(u, cfg.mu))
        series.mass.append(mass(u))

    integrate(cfg.initial_value(), cfg.T, cfg.params(method, tau), callback=record, stride=stride)

    series.energy_drift, series.energy_growth, series.energy_correlation = drift_statistics(
        series.times, series.energy,
    )
    series.mass_drift, series.mass_growth, series.mass_correlation = drift_statistics(
        series.times, series.mass,
    )
    logger.info(
        f"{method.value} tau={tau:g}: max relative drift "
        f"energy {series.energy_drift:.3e}, mass {series.mass_drift:.3e}",
    )
    return series
