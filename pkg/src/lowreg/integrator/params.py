# -*- coding: utf-8 -*-
"""
Scheme parameters
"""

from dataclasses import dataclass
from enum import Enum
from typing import Literal


class Method(str, Enum):
    """Time integrators known to the library."""

    LOWREG_1D = "lowreg1d"
    LOWREG_DD = "lowregdd"
    STRANG = "strang"

    @classmethod
    def parse(cls, value: str) -> "Method":
        try:
            return cls(value.strip().lower())
        except ValueError:
            raise ValueError(
                f"Invalid method {value}. The method must be one of "
                f"{[m.value for m in cls]}",
            )


@dataclass(frozen=True)
class SchemeParams:
    """Step size, nonlinearity and method of a run.

    - tau:          step size τ > 0
    - mu:           coefficient μ of |u|²u (μ > 0 defocusing)
    - method:       which integrator advances the field
    - phi1_target:  field the φ₁ multiplier of the d-dimensional scheme acts
                    on; "conjugate" gives (τφ₁(-2iτΔ)ū)u², "cubic" gives
                    τφ₁(-2iτΔ)(|u|²u)
    """

    tau: float
    mu: float = 1.0
    method: Method = Method.LOWREG_1D
    phi1_target: Literal["conjugate", "cubic"] = "conjugate"

    def __post_init__(self) -> None:
        if not self.tau > 0:
            raise ValueError(f"Invalid step size {self.tau}, must be > 0")
        if not isinstance(self.method, Method):
            object.__setattr__(self, "method", Method.parse(str(self.method)))
        if self.phi1_target not in ("conjugate", "cubic"):
            raise ValueError(
                f"Invalid phi1 target {self.phi1_target}. Must be 'conjugate' or 'cubic'.",
            )

    def with_tau(self, tau: float) -> "SchemeParams":
        return SchemeParams(tau, self.mu, self.method, self.phi1_target)

    def with_method(self, method: Method) -> "SchemeParams":
        return SchemeParams(self.tau, self.mu, method, self.phi1_target)

    def to_dict(self) -> dict:
        return {
            "tau": self.tau,
            "mu": self.mu,
            "method": self.method.value,
            "phi1_target": self.phi1_target,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "SchemeParams":
        return cls(
            tau=data["tau"],
            mu=data.get("mu", 1.0),
            method=Method.parse(data.get("method", Method.LOWREG_1D.value)),
            phi1_target=data.get("phi1_target", "conjugate"),
        )
