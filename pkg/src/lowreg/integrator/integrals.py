# -*- coding: utf-8 -*-
"""
Closed forms of the oscillatory integrals of the low regularity schemes.

Every integral is a fixed pipeline of Fourier multipliers and pointwise
products on grid values, so one evaluation costs O(N^d log N).
"""

import numpy as np

from lowreg.spectral.field import Field, from_physical
from lowreg.spectral.operators import (
    free_propagate,
    inv_derivative,
    partial_propagate,
    zero_mode_slice,
)


def _require_1d(v: Field) -> None:
    if v.grid.dim != 1:
        raise ValueError(f"One dimensional integral called on a {v.grid.dim}D field")


def j1_1d(v: Field, tau: float) -> Field:
    """J₁: the triple sum of v̄̂_{k1} v̂_{k2} v̂_{k3} e^{ikx} ∫₀^τ e^{2isk₁k} ds.

    Non-resonant part
        (i/2)[e^{-iτ∂²}∂⁻¹((e^{-iτ∂²}∂⁻¹v̄)(e^{iτ∂²}v²)) - ∂⁻¹((∂⁻¹v̄)v²)]
    plus the k₁ = 0 or k = 0 contributions
        τ v̄̂₀ v² + τ (|v|²v)^₀ - τ v̄̂₀ (v²)^₀.
    """
    _require_1d(v)
    grid = v.grid
    values = v.physical()
    conj_values = np.conj(values)
    v_bar = from_physical(conj_values, grid)
    v_sq = from_physical(values ** 2, grid)

    d_bar = inv_derivative(v_bar, 1)
    left = free_propagate(d_bar, -tau).physical()
    right = free_propagate(v_sq, tau).physical()
    twisted = free_propagate(inv_derivative(from_physical(left * right, grid), 1), -tau)
    plain = inv_derivative(from_physical(d_bar.physical() * v_sq.physical(), grid), 1)

    oscillatory = (twisted - plain) * 0.5j

    v_bar0 = v_bar.coeffs[0]
    cubic0 = from_physical(np.abs(values) ** 2 * values, grid).coeffs[0]
    resonant = v_sq * (tau * v_bar0) + Field.constant(grid, tau * (cubic0 - v_bar0 * v_sq.coeffs[0]))
    return oscillatory + resonant


def j2_1d(v: Field, tau: float) -> Field:
    """J₂: the triple sum of v̄̂_{k1} v̂_{k2} v̂_{k3} e^{ikx} ∫₀^τ e^{2isk₂k₃} ds.

    (i/2)[e^{-iτ∂²}(∂⁻¹e^{iτ∂²}v)² - (∂⁻¹v)²] v̄ + τ v̂₀(2v - v̂₀) v̄
    """
    _require_1d(v)
    grid = v.grid
    values = v.physical()
    conj_values = np.conj(values)

    d_twisted = inv_derivative(free_propagate(v, tau), 1).physical()
    d_plain = inv_derivative(v, 1).physical()
    twisted = free_propagate(from_physical(d_twisted ** 2, grid), -tau).physical()
    plain = from_physical(d_plain ** 2, grid).physical()

    v0 = v.coeffs[0]
    result = 0.5j * (twisted - plain) * conj_values
    result = result + tau * v0 * (2.0 * values - v0) * conj_values
    return from_physical(result, grid)


def kj(w: Field, v: Field, tau: float, axis: int) -> Field:
    """K_j(w, v): the double sum of ŵ_κ v̂_λ e^{i(κ+λ)·x} ∫₀^τ e^{2isκ_jλ_j} ds.

    (i/2)[e^{-iτ∂_j²}((e^{iτ∂_j²}∂_j⁻¹w)(e^{iτ∂_j²}∂_j⁻¹v)) - (∂_j⁻¹w)(∂_j⁻¹v)]
        + τ[v ŵ_{0,j} + w v̂_{0,j} - ŵ_{0,j} v̂_{0,j}]

    Symmetric in (w, v).
    """
    w.same_grid(v)
    grid = w.grid
    grid.check_axis(axis)

    dw = inv_derivative(w, axis)
    dv = inv_derivative(v, axis)
    left = partial_propagate(dw, tau, axis).physical()
    right = partial_propagate(dv, tau, axis).physical()
    twisted = partial_propagate(from_physical(left * right, grid), -tau, axis).physical()
    plain = from_physical(dw.physical() * dv.physical(), grid).physical()

    w0 = zero_mode_slice(w, axis).physical()
    v0 = zero_mode_slice(v, axis).physical()
    result = 0.5j * (twisted - plain)
    result = result + tau * (v.physical() * w0 + w.physical() * v0 - w0 * v0)
    return from_physical(result, grid)
