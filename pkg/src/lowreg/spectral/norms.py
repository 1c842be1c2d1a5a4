# -*- coding: utf-8 -*-
"""
Discrete and Sobolev norms of torus fields
"""

from dataclasses import dataclass
from typing import Literal

import numpy as np

from .field import Field
from .operators import spectral_derivative


@dataclass(frozen=True)
class NormKind:
    """Which norm to measure in.

    - l2:       ‖U‖₀² = h^d Σ_j |U_j|² on grid values
    - h1:       ‖U‖₁² = h^d Σ_j (|U_j|² + Σ_axes |V_j|²), V the spectral gradient
    - sobolev:  ‖v‖_r² = Σ_k (1+|k|)^{2r} |v̂_k|² on coefficients

    The discrete L² norm equals (2π)^{d/2} times the r = 0 Sobolev norm.
    """

    kind: Literal["l2", "h1", "sobolev"]
    r: float = 0.0

    def __post_init__(self) -> None:
        if self.kind not in ("l2", "h1", "sobolev"):
            raise ValueError(
                f"Invalid norm {self.kind}. The norm must be one of "
                f"['l2', 'h1', 'sobolev']",
            )

    @classmethod
    def parse(cls, text: str) -> "NormKind":
        """'l2', 'h1' or 'sobolev:<r>'"""
        name, _, r = text.strip().lower().partition(":")
        if name == "sobolev":
            if not r:
                raise ValueError("Sobolev norm needs an exponent, e.g. 'sobolev:2'")
            return cls("sobolev", float(r))
        return cls(name)

    def __str__(self) -> str:
        if self.kind == "sobolev":
            return f"sobolev:{self.r:g}"
        return self.kind


DiscreteL2 = NormKind("l2")
DiscreteH1 = NormKind("h1")


def SobolevR(r: float) -> NormKind:
    return NormKind("sobolev", float(r))


def norm(f: Field, kind: NormKind) -> float:
    grid = f.grid
    weight = grid.mesh_width ** grid.dim
    if kind.kind == "sobolev":
        multiplier = (1.0 + grid.k_abs) ** (2.0 * kind.r)
        return float(np.sqrt(np.sum(multiplier * np.abs(f.coeffs) ** 2)))

    total = np.sum(np.abs(f.physical()) ** 2)
    if kind.kind == "h1":
        for axis in range(1, grid.dim + 1):
            total += np.sum(np.abs(spectral_derivative(f, axis).physical()) ** 2)
    return float(np.sqrt(weight * total))
