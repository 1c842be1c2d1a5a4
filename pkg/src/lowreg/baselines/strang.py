# -*- coding: utf-8 -*-
"""
Strang splitting of the cubic NLS
"""

import numpy as np

from lowreg.integrator.params import Method, SchemeParams
from lowreg.spectral.field import Field, from_physical
from lowreg.spectral.operators import free_propagate


def nonlinear_flow(u: Field, t: float, mu: float) -> Field:
    """Exact flow of i∂_t u = μ|u|²u; |u| is invariant along it."""
    values = u.physical()
    return from_physical(np.exp(-1j * mu * t * np.abs(values) ** 2) * values, u.grid)


def strang_map(u: Field, tau: float, mu: float) -> Field:
    """Half nonlinear flow, full free flow, half nonlinear flow."""
    if mu == 0:
        return free_propagate(u, tau)
    half = nonlinear_flow(u, 0.5 * tau, mu)
    return nonlinear_flow(free_propagate(half, tau), 0.5 * tau, mu)


def strang_step(u: Field, p: SchemeParams) -> Field:
    if p.method is not Method.STRANG:
        raise ValueError(f"strang_step called with method {p.method.value}")
    return strang_map(u, p.tau, p.mu)
