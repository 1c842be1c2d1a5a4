# -*- coding: utf-8 -*-
"""
Deterministic random initial data of prescribed Sobolev regularity.

Draws come from numpy's Philox4x64 counter-based generator keyed by the
seed. The stream is consumed in a fixed order: N^d uniform draws on [-1, 1]
for the real parts, then N^d for the imaginary parts, both over the
coefficient lattice in C order of the FFT-ordered layout. The same seed
therefore gives the same field on every platform.
"""

from typing import Optional

import numpy as np

from lowreg.spectral.field import Field
from lowreg.spectral.grid import TorusGrid


def _generator(seed: int) -> np.random.Generator:
    if seed < 0 or seed >= 2 ** 64:
        raise ValueError(f"Invalid seed {seed}, must fit in an unsigned 64-bit integer")
    return np.random.Generator(np.random.Philox(key=int(seed)))


def _uniform_coefficients(grid: TorusGrid, seed: int) -> np.ndarray:
    rng = _generator(seed)
    real = rng.uniform(-1.0, 1.0, size=grid.size)
    imag = rng.uniform(-1.0, 1.0, size=grid.size)
    return (real + 1j * imag).reshape(grid.shape)


def random_hr_data(grid: TorusGrid, r: float, seed: int) -> Field:
    """Coefficients uniform in [-1,1] + i[-1,1], divided by (1+|k|)^{r+1/2}."""
    if r < 0:
        raise ValueError(f"Invalid regularity {r}, must be >= 0")
    coeffs = _uniform_coefficients(grid, seed) / (1.0 + grid.k_abs) ** (r + 0.5)
    return Field(grid, coeffs)


def band_limited_data(
    grid: TorusGrid,
    seed: int,
    kmax: Optional[int] = None,
    r: float = 0.0,
) -> Field:
    """Random data supported on |k_j| <= kmax for every axis j.

    With the default kmax = N/8 every cubic product of the field stays on
    the lattice, so collocation products are alias-free.
    """
    if kmax is None:
        kmax = grid.n // 8
    if kmax < 0:
        raise ValueError(f"Invalid band limit {kmax}, must be >= 0")
    field = random_hr_data(grid, r, seed)
    inside = np.ones(grid.shape, dtype=bool)
    for kj in grid.k:
        inside &= np.abs(kj) <= kmax
    return Field(grid, np.where(inside, field.coeffs, 0.0))
