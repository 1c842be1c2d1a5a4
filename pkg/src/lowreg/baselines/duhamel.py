# -*- coding: utf-8 -*-
"""
Brute-force evaluation of the Duhamel integrals by direct Fourier sums.

The sums run over every pair or triple of retained wavenumbers and cost
O(N^{2d}) or O(N^{3d}); they exist to check the closed forms. Output
wavenumbers are folded back onto the lattice modulo N, which matches the
collocation products of the closed forms only for alias-free input, e.g.
data band-limited to |k_j| <= N/8.
"""

from typing import Callable

import numpy as np
from loguru import logger

from lowreg import settings
from lowreg.spectral.field import Field

# Ω(κ, λ, ν) over broadcast wavenumber arrays of shape (..., d)
PhaseFn = Callable[[np.ndarray, np.ndarray, np.ndarray], np.ndarray]


def check_oracle_cap(field: Field) -> None:
    grid = field.grid
    if grid.dim == 1:
        cap = settings.oracle_cap_1d
    elif grid.dim == 2:
        cap = settings.oracle_cap_2d
    else:
        raise NotImplementedError(f"No direct-sum oracle for dimension {grid.dim}")
    if grid.n > cap:
        raise ValueError(
            f"Oracle refuses N = {grid.n} in {grid.dim}D (cap {cap}); "
            f"the direct sum costs O(N^{3 * grid.dim})",
        )


def _modes(field: Field) -> np.ndarray:
    """Wavenumber vectors of all lattice points, shape (N^d, d), C order."""
    return np.stack([kj.ravel() for kj in field.grid.k], axis=-1).astype(np.int64)


def _fold(field: Field, total: np.ndarray) -> np.ndarray:
    """Flat lattice index of wavenumbers `total` (..., d) taken modulo N."""
    folded = np.mod(total, field.grid.n)
    return np.ravel_multi_index(tuple(np.moveaxis(folded, -1, 0)), field.grid.shape)


def time_integral(omega: np.ndarray, tau: float) -> np.ndarray:
    """∫₀^τ e^{isΩ} ds: (e^{iτΩ} - 1)/(iΩ) for Ω != 0 and τ for Ω = 0."""
    omega = np.asarray(omega, dtype=np.float64)
    resonant = omega == 0
    safe = np.where(resonant, 1.0, omega)
    return np.where(resonant, tau, np.expm1(1j * tau * safe) / (1j * safe))


def _scatter(field: Field, index: np.ndarray, weights: np.ndarray) -> Field:
    size = field.grid.size
    index = index.ravel()
    weights = weights.ravel()
    real = np.bincount(index, weights=weights.real, minlength=size)
    imag = np.bincount(index, weights=weights.imag, minlength=size)
    return Field(field.grid, (real + 1j * imag).reshape(field.grid.shape))


def triple_sum(v: Field, tau: float, phase: PhaseFn) -> Field:
    """Σ_{κ,λ,ν} v̄̂_κ v̂_λ v̂_ν e^{i(κ+λ+ν)·x} ∫₀^τ e^{isΩ(κ,λ,ν)} ds"""
    check_oracle_cap(v)
    modes = _modes(v)
    kappa = modes[:, None, None, :]
    lam = modes[None, :, None, :]
    nu = modes[None, None, :, :]

    conj_coeffs = v.conj().coeffs.ravel()
    coeffs = v.coeffs.ravel()
    amplitude = conj_coeffs[:, None, None] * coeffs[None, :, None] * coeffs[None, None, :]
    weights = amplitude * time_integral(phase(kappa, lam, nu), tau)
    logger.debug(f"triple sum over {modes.shape[0] ** 3} wavenumber triples")
    return _scatter(v, _fold(v, kappa + lam + nu), weights)


def _dot(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.sum(a * b, axis=-1)


def full_phase(kappa, lam, nu):
    """Ω = |κ+λ+ν|² + |κ|² - |λ|² - |ν|²"""
    total = kappa + lam + nu
    return _dot(total, total) + _dot(kappa, kappa) - _dot(lam, lam) - _dot(nu, nu)


def j1_phase(kappa, lam, nu):
    """2κ·(κ+λ+ν), the J₁ kernel"""
    return 2 * _dot(kappa, kappa + lam + nu)


def j2_phase(kappa, lam, nu):
    """2λ·ν, the J₂ kernel"""
    return 2 * _dot(lam, nu)


def phi1_phase(kappa, lam, nu):
    """2κ·κ, the kernel integrated by the φ₁ multiplier"""
    return 2 * _dot(kappa, kappa)


def zero_phase(kappa, lam, nu):
    return np.zeros(1, dtype=np.int64)


def duhamel_integral_direct(v: Field, tau: float) -> Field:
    """∫₀^τ e^{-isΔ}[(e^{-isΔ}v̄)(e^{isΔ}v)²] ds by its Fourier triple sum."""
    return triple_sum(v, tau, full_phase)


def j1_direct(v: Field, tau: float) -> Field:
    return triple_sum(v, tau, j1_phase)


def j2_direct(v: Field, tau: float) -> Field:
    return triple_sum(v, tau, j2_phase)


def phi1_direct(v: Field, tau: float) -> Field:
    """Triple sum with kernel e^{2isκ·κ}, i.e. (τφ₁(-2iτΔ)v̄)v² on alias-free data."""
    return triple_sum(v, tau, phi1_phase)


def cubic_direct(v: Field, tau: float) -> Field:
    """Triple sum with kernel 1, i.e. τ|v|²v."""
    return triple_sum(v, tau, zero_phase)


def decomposed_integral_direct(v: Field, tau: float) -> Field:
    """Triple sum with the kernel e^{2isκ·k} + e^{2isλ·ν} - 1 replacing e^{isΩ}.

    Equals j1_direct + j2_direct - τ|v|²v; its distance to the full Duhamel
    integral is the O(τ³) remainder on smooth data.
    """
    check_oracle_cap(v)
    modes = _modes(v)
    kappa = modes[:, None, None, :]
    lam = modes[None, :, None, :]
    nu = modes[None, None, :, :]

    conj_coeffs = v.conj().coeffs.ravel()
    coeffs = v.coeffs.ravel()
    amplitude = conj_coeffs[:, None, None] * coeffs[None, :, None] * coeffs[None, None, :]
    kernel = (
        time_integral(j1_phase(kappa, lam, nu), tau)
        + time_integral(j2_phase(kappa, lam, nu), tau)
        - tau
    )
    return _scatter(v, _fold(v, kappa + lam + nu), amplitude * kernel)


def kj_direct(w: Field, v: Field, tau: float, axis: int) -> Field:
    """Σ_{κ,λ} ŵ_κ v̂_λ e^{i(κ+λ)·x} ∫₀^τ e^{2isκ_jλ_j} ds"""
    w.same_grid(v)
    j = w.grid.check_axis(axis)
    check_oracle_cap(w)
    modes = _modes(w)
    kappa = modes[:, None, :]
    lam = modes[None, :, :]
    amplitude = w.coeffs.ravel()[:, None] * v.coeffs.ravel()[None, :]
    omega = 2 * kappa[..., j] * lam[..., j]
    return _scatter(w, _fold(w, kappa + lam), amplitude * time_integral(omega, tau))
