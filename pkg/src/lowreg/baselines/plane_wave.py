# -*- coding: utf-8 -*-
"""
Analytic plane wave solutions and the discretized NLS residual
"""

from typing import Sequence, Union

import numpy as np

from lowreg.spectral.field import Field, from_physical
from lowreg.spectral.grid import TorusGrid
from lowreg.spectral.operators import laplacian


def plane_wave(
    a: complex,
    k: Union[int, Sequence[int]],
    mu: float,
    t: float,
    grid: TorusGrid,
) -> Field:
    """u(t,x) = a e^{ik·x} e^{-i(|k|² + μ|a|²)t}, an exact solution of i∂_t u = -Δu + μ|u|²u."""
    k = np.atleast_1d(np.asarray(k, dtype=np.int64))
    frequency = float(np.sum(k ** 2)) + mu * abs(a) ** 2
    return Field.from_modes(grid, {tuple(k): a * np.exp(-1j * frequency * t)})


def nls_residual(u: Field, dudt: Field, mu: float) -> Field:
    """i∂_t u + Δu - μ|u|²u with the spectral Laplacian and a pointwise cubic term."""
    u.same_grid(dudt)
    values = u.physical()
    cubic = from_physical(mu * np.abs(values) ** 2 * values, u.grid)
    return dudt * 1j + laplacian(u) - cubic
