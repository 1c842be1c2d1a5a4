# -*- coding: utf-8 -*-
"""
One-step maps of the second-order low regularity Fourier integrators
"""

import numpy as np

from lowreg.spectral.field import Field, from_physical
from lowreg.spectral.operators import free_propagate, phi1_apply

from .integrals import j1_1d, j2_1d, kj
from .params import Method, SchemeParams


def lowreg_1d_map(u: Field, tau: float, mu: float) -> Field:
    """u ↦ e^{iτ∂²}(e^{iμτ|u|²}u - iμ(J₁(u) + J₂(u)))"""
    if u.grid.dim != 1:
        raise ValueError(f"The 1D scheme needs a 1D grid, got dimension {u.grid.dim}")
    if tau == 0:
        return u
    if mu == 0:
        return free_propagate(u, tau)
    values = u.physical()
    # the phase sign is opposite to the exact nonlinear flow; the resonant
    # parts of J₁ + J₂ compensate it
    rotated = from_physical(np.exp(1j * mu * tau * np.abs(values) ** 2) * values, u.grid)
    correction = j1_1d(u, tau) + j2_1d(u, tau)
    return free_propagate(rotated - correction * (1j * mu), tau)


def lowreg_dd_map(u: Field, tau: float, mu: float, phi1_target: str = "conjugate") -> Field:
    """u ↦ e^{iτΔ}[e^{iμτ|u|²}u + iμτ(3d-1)|u|²u - iμ L(u) - iμ Σ_j (K_j(u,u)ū + 2K_j(ū,u)u)]

    L(u) is (τφ₁(-2iτΔ)ū)u² for phi1_target "conjugate" and
    τφ₁(-2iτΔ)(|u|²u) for "cubic".
    """
    if tau == 0:
        return u
    if mu == 0:
        return free_propagate(u, tau)
    grid = u.grid
    values = u.physical()
    conj_values = np.conj(values)
    cubic = np.abs(values) ** 2 * values

    bracket = np.exp(1j * mu * tau * np.abs(values) ** 2) * values
    u_bar = from_physical(conj_values, grid)
    if phi1_target == "conjugate":
        phi_term = tau * phi1_apply(u_bar, tau).physical() * values ** 2
    elif phi1_target == "cubic":
        phi_term = tau * phi1_apply(from_physical(cubic, grid), tau).physical()
    else:
        raise ValueError(f"Invalid phi1 target {phi1_target}")

    resonance_sum = np.zeros(grid.shape, dtype=np.complex128)
    for axis in range(1, grid.dim + 1):
        resonance_sum += kj(u, u, tau, axis).physical() * conj_values
        resonance_sum += 2.0 * kj(u_bar, u, tau, axis).physical() * values

    bracket = (
        bracket
        + 1j * mu * tau * (3 * grid.dim - 1) * cubic
        - 1j * mu * phi_term
        - 1j * mu * resonance_sum
    )
    return free_propagate(from_physical(bracket, grid), tau)


def step_lowreg_1d(u: Field, p: SchemeParams) -> Field:
    if p.method is not Method.LOWREG_1D:
        raise ValueError(f"step_lowreg_1d called with method {p.method.value}")
    return lowreg_1d_map(u, p.tau, p.mu)


def step_lowreg_dd(u: Field, p: SchemeParams) -> Field:
    if p.method is not Method.LOWREG_DD:
        raise ValueError(f"step_lowreg_dd called with method {p.method.value}")
    return lowreg_dd_map(u, p.tau, p.mu, p.phi1_target)
