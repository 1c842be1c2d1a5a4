# -*- coding: utf-8 -*-
"""
Experiment configuration
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Tuple

from lowreg.baselines.plane_wave import plane_wave
from lowreg.integrator.params import Method, SchemeParams
from lowreg.integrator.stepper import step_count
from lowreg.spectral.field import Field
from lowreg.spectral.grid import TorusGrid
from lowreg.spectral.norms import DiscreteL2, NormKind

from .data import random_hr_data


class ReferencePolicy(str, Enum):
    ANALYTIC = "analytic"
    CROSS_METHOD = "cross-method"


class InitialData(str, Enum):
    RANDOM = "random"
    PLANE_WAVE = "plane-wave"


def parse_ladder(text: str) -> Tuple[float, ...]:
    """Step sizes from 'start:factor:count' (geometric, decreasing) or 'a,b,c'.

    '2e-2:2:4' gives (2e-2, 1e-2, 5e-3, 2.5e-3).
    """
    text = text.strip()
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise ValueError(f"Invalid ladder '{text}', expected start:factor:count")
        start, factor, count = float(parts[0]), float(parts[1]), int(parts[2])
        if not start > 0 or not factor > 1 or count < 1:
            raise ValueError(
                f"Invalid ladder '{text}', need start > 0, factor > 1 and count >= 1",
            )
        return tuple(start / factor ** i for i in range(count))
    return tuple(float(t) for t in text.split(",") if t.strip())


def parse_methods(text: str) -> Tuple[Method, ...]:
    return tuple(Method.parse(m) for m in text.split(",") if m.strip())


@dataclass(frozen=True)
class ExperimentConfig:
    """Everything a study needs; the same config always gives the same numbers.

    - dim, n:          torus dimension and points per axis
    - r:               regularity of the random data (coefficients decay
                       like (1+|k|)^{-(r+1/2)})
    - seed:            generator seed for the random data
    - mu:              nonlinearity coefficient
    - T:               final time, an integer multiple of every τ
    - taus:            step sizes, strictly decreasing
    - methods:         integrators under study
    - norm:            error norm
    - reference:       analytic (plane-wave data only) or cross-method
    - refinement:      reference step τ_min/refinement; None picks the
                       smallest power of two giving τ_ref <= τ_min/100
    - data:            random or plane-wave initial value
    - wave_amplitude, wave_mode:  plane-wave parameters
    - phi1_target:     see SchemeParams
    """

    dim: int
    n: int
    T: float
    taus: Tuple[float, ...]
    methods: Tuple[Method, ...] = (Method.LOWREG_1D,)
    r: float = 0.0
    seed: int = 0
    mu: float = 1.0
    norm: NormKind = DiscreteL2
    reference: ReferencePolicy = ReferencePolicy.CROSS_METHOD
    refinement: Optional[int] = None
    data: InitialData = InitialData.RANDOM
    wave_amplitude: complex = 1.0
    wave_mode: Tuple[int, ...] = field(default=())
    phi1_target: str = "conjugate"

    def __post_init__(self) -> None:
        object.__setattr__(self, "taus", tuple(float(t) for t in self.taus))
        object.__setattr__(
            self, "methods",
            tuple(m if isinstance(m, Method) else Method.parse(m) for m in self.methods),
        )
        object.__setattr__(self, "reference", ReferencePolicy(self.reference))
        object.__setattr__(self, "data", InitialData(self.data))
        if isinstance(self.norm, str):
            object.__setattr__(self, "norm", NormKind.parse(self.norm))
        if not self.wave_mode:
            object.__setattr__(self, "wave_mode", (1,) * self.dim)
        object.__setattr__(self, "wave_mode", tuple(int(k) for k in self.wave_mode))

        if not self.taus:
            raise ValueError("Step-size ladder is empty")
        if not self.methods:
            raise ValueError("No methods selected")
        for a, b in zip(self.taus, self.taus[1:]):
            if not b < a:
                raise ValueError(f"Step-size ladder must be strictly decreasing, got {a} then {b}")
        for tau in self.taus:
            step_count(self.T, tau)
        if self.r < 0:
            raise ValueError(f"Invalid regularity {self.r}, must be >= 0")
        if self.refinement is not None and self.refinement < 1:
            raise ValueError(f"Invalid refinement {self.refinement}, must be >= 1")
        if len(self.wave_mode) != self.dim:
            raise ValueError(
                f"Plane-wave mode {self.wave_mode} does not match dimension {self.dim}",
            )
        if self.reference is ReferencePolicy.ANALYTIC and self.data is not InitialData.PLANE_WAVE:
            raise ValueError("Analytic reference needs plane-wave initial data")
        TorusGrid(self.dim, self.n)

    @property
    def grid(self) -> TorusGrid:
        return TorusGrid(self.dim, self.n)

    def initial_value(self) -> Field:
        if self.data is InitialData.PLANE_WAVE:
            return plane_wave(self.wave_amplitude, self.wave_mode, self.mu, 0.0, self.grid)
        return random_hr_data(self.grid, self.r, self.seed)

    def params(self, method: Method, tau: float) -> SchemeParams:
        return SchemeParams(tau=tau, mu=self.mu, method=method, phi1_target=self.phi1_target)

    def with_seed(self, seed: int) -> "ExperimentConfig":
        data = self.to_dict()
        data["seed"] = seed
        return ExperimentConfig.from_dict(data)

    def with_n(self, n: int) -> "ExperimentConfig":
        data = self.to_dict()
        data["n"] = n
        return ExperimentConfig.from_dict(data)

    def to_dict(self) -> dict:
        amplitude = complex(self.wave_amplitude)
        return {
            "__module__": self.__class__.__module__,
            "__name__": self.__class__.__name__,
            "dim": self.dim,
            "n": self.n,
            "T": self.T,
            "taus": list(self.taus),
            "methods": [m.value for m in self.methods],
            "r": self.r,
            "seed": self.seed,
            "mu": self.mu,
            "norm": str(self.norm),
            "reference": self.reference.value,
            "refinement": self.refinement,
            "data": self.data.value,
            "wave_amplitude": [amplitude.real, amplitude.imag],
            "wave_mode": list(self.wave_mode),
            "phi1_target": self.phi1_target,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ExperimentConfig":
        amplitude = data.get("wave_amplitude", [1.0, 0.0])
        if isinstance(amplitude, (list, tuple)):
            amplitude = complex(amplitude[0], amplitude[1])
        return cls(
            dim=data["dim"],
            n=data["n"],
            T=data["T"],
            taus=tuple(data["taus"]),
            methods=parse_methods(",".join(data.get("methods", [Method.LOWREG_1D.value]))),
            r=data.get("r", 0.0),
            seed=data.get("seed", 0),
            mu=data.get("mu", 1.0),
            norm=NormKind.parse(data.get("norm", "l2")),
            reference=ReferencePolicy(data.get("reference", ReferencePolicy.CROSS_METHOD.value)),
            refinement=data.get("refinement"),
            data=InitialData(data.get("data", InitialData.RANDOM.value)),
            wave_amplitude=amplitude,
            wave_mode=tuple(data.get("wave_mode", ())),
            phi1_target=data.get("phi1_target", "conjugate"),
        )

