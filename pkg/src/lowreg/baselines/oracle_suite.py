# -*- coding: utf-8 -*-
"""
Closed form versus direct sum comparison suite
"""

from typing import Dict

import numpy as np
from loguru import logger

from lowreg.experiment.data import band_limited_data
from lowreg.integrator.integrals import j1_1d, j2_1d, kj
from lowreg.integrator.lowreg import lowreg_dd_map
from lowreg.spectral.field import from_physical
from lowreg.spectral.grid import TorusGrid
from lowreg.spectral.operators import free_propagate, phi1_apply

from .duhamel import (
    cubic_direct,
    decomposed_integral_direct,
    j1_direct,
    j2_direct,
    kj_direct,
    phi1_direct,
)

ORACLE_TOLERANCE = 1e-12


def _composed_step_deviation(v, tau: float, mu: float = 1.0) -> float:
    """lowreg_dd_map against e^{iτΔ} of the bracket built from direct sums."""
    grid = v.grid
    values = v.physical()
    conj_values = np.conj(values)
    v_bar = v.conj()

    bracket = np.exp(1j * mu * tau * np.abs(values) ** 2) * values
    bracket = bracket + 1j * mu * tau * (3 * grid.dim - 1) * np.abs(values) ** 2 * values
    bracket = bracket - 1j * mu * phi1_direct(v, tau).physical()
    for axis in range(1, grid.dim + 1):
        bracket = bracket - 1j * mu * kj_direct(v, v, tau, axis).physical() * conj_values
        bracket = bracket - 2j * mu * kj_direct(v_bar, v, tau, axis).physical() * values
    composed = free_propagate(from_physical(bracket, grid), tau)
    return lowreg_dd_map(v, tau, mu).max_abs_diff(composed)


def run_oracle_check(dim: int, n: int, seed: int, tau: float = 0.5) -> Dict[str, float]:
    """Max coefficient deviation |closed form - direct sum| per integral.

    Data is band-limited to |k_j| <= N/8 so that no product aliases.
    """
    grid = TorusGrid(dim, n)
    v = band_limited_data(grid, seed)
    w = band_limited_data(grid, seed + 1)
    v_bar = v.conj()
    values = v.physical()

    report: Dict[str, float] = {}
    if dim == 1:
        report["j1"] = j1_1d(v, tau).max_abs_diff(j1_direct(v, tau))
        report["j2"] = j2_1d(v, tau).max_abs_diff(j2_direct(v, tau))
        split = j1_direct(v, tau) + j2_direct(v, tau) - cubic_direct(v, tau)
        report["decomposition"] = decomposed_integral_direct(v, tau).max_abs_diff(split)

    phi_closed = from_physical(tau * phi1_apply(v_bar, tau).physical() * values ** 2, grid)
    report["phi1"] = phi_closed.max_abs_diff(phi1_direct(v, tau))

    for axis in range(1, dim + 1):
        report[f"k{axis}(v,v)"] = kj(v, v, tau, axis).max_abs_diff(kj_direct(v, v, tau, axis))
        report[f"k{axis}(vbar,v)"] = kj(v_bar, v, tau, axis).max_abs_diff(
            kj_direct(v_bar, v, tau, axis),
        )
        report[f"k{axis}(w,v)"] = kj(w, v, tau, axis).max_abs_diff(kj_direct(w, v, tau, axis))

    report["step"] = _composed_step_deviation(v, tau)

    worst = max(report.values())
    logger.info(
        f"oracle check dim={dim} n={n} seed={seed}: max deviation {worst:.3e}",
    )
    return report


def oracle_check_passed(report: Dict[str, float], tolerance: float = ORACLE_TOLERANCE) -> bool:
    return bool(np.all(np.array(list(report.values())) <= tolerance))
