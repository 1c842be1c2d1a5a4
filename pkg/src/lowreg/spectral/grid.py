# -*- coding: utf-8 -*-
"""
Discrete torus geometry
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Tuple

import numpy as np


@dataclass(frozen=True)
class TorusGrid:
    """The equidistant grid on the d dimensional torus [0, 2π)^d.

    - dim:   spatial dimension d ≥ 1
    - n:     points per axis N, even, identical on every axis

    Coefficient arrays are laid out in FFT order along every axis, i.e.
    index m holds wavenumber m for m < N/2 and m - N otherwise, so the
    retained wavenumbers are {-N/2, ..., N/2 - 1}.
    """

    dim: int
    n: int

    def __post_init__(self) -> None:
        if not isinstance(self.dim, (int, np.integer)) or self.dim < 1:
            raise ValueError(f"Invalid dimension {self.dim}, must be an integer >= 1")
        if not isinstance(self.n, (int, np.integer)) or self.n < 2 or self.n % 2:
            raise ValueError(f"Invalid resolution {self.n}, must be an even integer >= 2")

    @property
    def mesh_width(self) -> float:
        """h = 2π/N"""
        return 2.0 * np.pi / self.n

    @property
    def shape(self) -> Tuple[int, ...]:
        return (self.n,) * self.dim

    @property
    def size(self) -> int:
        return self.n ** self.dim

    @cached_property
    def wavenumbers(self) -> np.ndarray:
        """Integer wavenumbers of one axis in FFT order."""
        k = np.fft.fftfreq(self.n, d=1.0 / self.n)
        return np.rint(k).astype(np.int64)

    @cached_property
    def k(self) -> Tuple[np.ndarray, ...]:
        """Per-axis wavenumber arrays broadcast over the full lattice."""
        axes = [self.wavenumbers] * self.dim
        return tuple(np.meshgrid(*axes, indexing="ij"))

    @cached_property
    def k_squared(self) -> np.ndarray:
        """|k|^2 = k_1^2 + ... + k_d^2 over the lattice."""
        return sum(kj.astype(np.float64) ** 2 for kj in self.k)

    @cached_property
    def k_abs(self) -> np.ndarray:
        return np.sqrt(self.k_squared)

    @cached_property
    def points(self) -> Tuple[np.ndarray, ...]:
        """Grid points x_j = j h broadcast over the lattice, one array per axis."""
        x = np.arange(self.n) * self.mesh_width
        return tuple(np.meshgrid(*([x] * self.dim), indexing="ij"))

    def check_axis(self, axis: int) -> int:
        """Validate a 1-based axis and return its 0-based array index."""
        if not isinstance(axis, (int, np.integer)) or not 1 <= axis <= self.dim:
            raise ValueError(f"Invalid axis {axis}, must satisfy 1 <= axis <= {self.dim}")
        return int(axis) - 1

    def index_of(self, mode) -> Tuple[int, ...]:
        """Array index of the wavenumber multi-index `mode`."""
        mode = np.atleast_1d(np.asarray(mode, dtype=np.int64))
        if mode.shape != (self.dim,):
            raise ValueError(f"Mode {tuple(mode)} does not match dimension {self.dim}")
        half = self.n // 2
        if np.any(mode < -half) or np.any(mode >= half):
            raise ValueError(f"Mode {tuple(mode)} is outside the lattice [-{half}, {half - 1}]")
        return tuple(int(m) % self.n for m in mode)
