# -*- coding: utf-8 -*-
"""
Fourier multiplier operators on torus fields
"""

import numpy as np

from .field import Field

# below this modulus φ₁ is evaluated by its Taylor polynomial
PHI1_SERIES_THRESHOLD = 1e-4


def free_propagate(f: Field, t: float) -> Field:
    """The free Schrödinger group e^{itΔ}: mode k picks up e^{-it|k|^2}."""
    if t == 0:
        return f
    return Field(f.grid, f.coeffs * np.exp(-1j * t * f.grid.k_squared))


def partial_propagate(f: Field, t: float, axis: int) -> Field:
    """e^{it∂_j^2} acting along a single axis j (1-based)."""
    j = f.grid.check_axis(axis)
    if t == 0:
        return f
    kj = f.grid.k[j].astype(np.float64)
    return Field(f.grid, f.coeffs * np.exp(-1j * t * kj ** 2))


def spectral_derivative(f: Field, axis: int) -> Field:
    """∂_j, multiplying mode k by i k_j."""
    j = f.grid.check_axis(axis)
    return Field(f.grid, f.coeffs * (1j * f.grid.k[j]))


def inv_derivative(f: Field, axis: int) -> Field:
    """Regularized ∂_j^{-1}: 1/(i k_j) for k_j != 0 and 0 on the k_j = 0 slice."""
    j = f.grid.check_axis(axis)
    kj = f.grid.k[j]
    nonzero = kj != 0
    multiplier = np.zeros(f.grid.shape, dtype=np.complex128)
    multiplier[nonzero] = 1.0 / (1j * kj[nonzero])
    return Field(f.grid, f.coeffs * multiplier)


def laplacian(f: Field) -> Field:
    return Field(f.grid, -f.grid.k_squared * f.coeffs)


def phi1(z):
    """φ₁(z) = (e^z - 1)/z, elementwise, with φ₁(0) = 1."""
    z = np.asarray(z, dtype=np.complex128)
    small = np.abs(z) < PHI1_SERIES_THRESHOLD
    safe = np.where(small, 1.0, z)
    closed = np.expm1(safe) / safe
    series = 1.0 + z / 2.0 + z ** 2 / 6.0 + z ** 3 / 24.0
    return np.where(small, series, closed)


def phi1_apply(f: Field, tau: float) -> Field:
    """φ₁(-2iτΔ) f; since -2iτΔ acts as 2iτ|k|^2 on mode k."""
    if tau < 0:
        raise ValueError(f"Invalid step size {tau}, must be >= 0")
    return Field(f.grid, f.coeffs * phi1(2j * tau * f.grid.k_squared))


def zero_mode_slice(f: Field, axis: int) -> Field:
    """ĥ_{0,j}: keep only the k_j = 0 slice, a field constant along axis j."""
    j = f.grid.check_axis(axis)
    return Field(f.grid, np.where(f.grid.k[j] == 0, f.coeffs, 0.0))
