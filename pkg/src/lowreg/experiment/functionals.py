# -*- coding: utf-8 -*-
"""
Conserved quantities of the cubic NLS.

Both are normalized by the torus volume (2π)^d and evaluated with the
physical-grid rule h^d/(2π)^d Σ_j, the gradient taken spectrally. The rule
is exact for |∇u|² and |u|² of band-limited fields, not for |u|⁴.
"""

import numpy as np

from lowreg.spectral.field import Field
from lowreg.spectral.operators import spectral_derivative


def _quadrature_weight(u: Field) -> float:
    # h^d/(2π)^d = 1/N^d
    return 1.0 / u.grid.size


def mass(u: Field) -> float:
    """(1/(2π)^d) ∫|u|² dx"""
    return float(_quadrature_weight(u) * np.sum(np.abs(u.physical()) ** 2))


def energy(u: Field, mu: float) -> float:
    """(1/(2π)^d) ∫(|∇u|² + (μ/2)|u|⁴) dx"""
    density = 0.5 * mu * np.abs(u.physical()) ** 4
    for axis in range(1, u.grid.dim + 1):
        density = density + np.abs(spectral_derivative(u, axis).physical()) ** 2
    return float(_quadrature_weight(u) * np.sum(density))
