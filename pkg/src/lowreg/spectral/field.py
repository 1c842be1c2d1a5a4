# -*- coding: utf-8 -*-
"""
Complex valued fields on the torus and the transforms between
coefficient space and grid values.
"""

from dataclasses import dataclass
from typing import Dict, Sequence, Union

import numpy as np
import scipy.fft

from .grid import TorusGrid

Scalar = Union[int, float, complex]


@dataclass(frozen=True, eq=False)
class Field:
    """A complex field stored by its Fourier coefficients.

    The coefficient at wavenumber k is the mean-integral coefficient
    (2π)^{-d} ∫ e^{-ik·x} v(x) dx, so grid values are recovered as
    Σ_k v̂_k e^{ik·x_j}. Fields never change after construction; the
    coefficient array is copied and marked read-only.
    """

    grid: TorusGrid
    coeffs: np.ndarray

    def __post_init__(self) -> None:
        coeffs = np.array(self.coeffs, dtype=np.complex128)
        if coeffs.shape != self.grid.shape:
            raise ValueError(
                f"Coefficient shape {coeffs.shape} does not match grid shape "
                f"{self.grid.shape}",
            )
        coeffs.flags.writeable = False
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def zeros(cls, grid: TorusGrid) -> "Field":
        return cls(grid, np.zeros(grid.shape, dtype=np.complex128))

    @classmethod
    def constant(cls, grid: TorusGrid, value: Scalar) -> "Field":
        coeffs = np.zeros(grid.shape, dtype=np.complex128)
        coeffs[(0,) * grid.dim] = value
        return cls(grid, coeffs)

    @classmethod
    def from_modes(cls, grid: TorusGrid, modes: Dict[Sequence[int], Scalar]) -> "Field":
        """Build a trigonometric polynomial from {wavenumber: coefficient}."""
        coeffs = np.zeros(grid.shape, dtype=np.complex128)
        for mode, value in modes.items():
            coeffs[grid.index_of(mode)] += value
        return cls(grid, coeffs)

    def coefficient(self, mode: Sequence[int]) -> complex:
        return complex(self.coeffs[self.grid.index_of(mode)])

    def physical(self) -> np.ndarray:
        return to_physical(self)

    def conj(self) -> "Field":
        """Complex conjugate, formed on grid values."""
        return from_physical(np.conj(self.physical()), self.grid)

    def same_grid(self, other: "Field") -> None:
        if not isinstance(other, Field):
            raise TypeError(f"Expect a Field, but get {type(other)}")
        if other.grid != self.grid:
            raise ValueError(f"Grid mismatch: {self.grid} vs {other.grid}")

    def max_abs_diff(self, other: "Field") -> float:
        """Largest coefficient deviation from `other`."""
        self.same_grid(other)
        return float(np.max(np.abs(self.coeffs - other.coeffs)))

    def __add__(self, other: "Field") -> "Field":
        self.same_grid(other)
        return Field(self.grid, self.coeffs + other.coeffs)

    def __sub__(self, other: "Field") -> "Field":
        self.same_grid(other)
        return Field(self.grid, self.coeffs - other.coeffs)

    def __neg__(self) -> "Field":
        return Field(self.grid, -self.coeffs)

    def __mul__(self, scalar: Scalar) -> "Field":
        if not isinstance(scalar, (int, float, complex, np.number)):
            return NotImplemented
        return Field(self.grid, self.coeffs * scalar)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"Field(dim={self.grid.dim}, n={self.grid.n})"


def to_physical(f: Field) -> np.ndarray:
    """Grid values Σ_k v̂_k e^{ik·x_j}."""
    # norm="forward" leaves the inverse transform unscaled
    return scipy.fft.ifftn(f.coeffs, norm="forward")


def from_physical(values: np.ndarray, grid: TorusGrid) -> Field:
    """Mean-integral coefficients of grid values (raw DFT divided by N^d)."""
    values = np.asarray(values)
    if values.shape != grid.shape:
        raise ValueError(
            f"Array shape {values.shape} does not match grid shape {grid.shape}",
        )
    return Field(grid, scipy.fft.fftn(values, norm="forward"))


def resample(f: Field, n: int) -> Field:
    """Spectral interpolation onto the grid with n points per axis.

    Refining zero-pads the coefficients and coarsening truncates them to
    the coarse lattice; either way the modes both grids share are kept.
    """
    target = TorusGrid(f.grid.dim, n)
    shared = target.wavenumbers if n <= f.grid.n else f.grid.wavenumbers
    src = np.ix_(*[np.mod(shared, f.grid.n)] * f.grid.dim)
    dst = np.ix_(*[np.mod(shared, n)] * f.grid.dim)
    coeffs = np.zeros(target.shape, dtype=np.complex128)
    coeffs[dst] = f.coeffs[src]
    return Field(target, coeffs)
