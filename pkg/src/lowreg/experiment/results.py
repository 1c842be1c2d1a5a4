# -*- coding: utf-8 -*-
"""
Result containers of the convergence and conservation studies
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .order import OrderFit


@dataclass
class ConvergenceResult:
    """Per-method (τ, error) tables and their fitted orders.

    `reference` names how the errors were measured, e.g.
    "analytic" or "cross-method:strang/64".
    """

    tables: Dict[str, List[Tuple[float, float]]] = field(default_factory=dict)
    fits: Dict[str, OrderFit] = field(default_factory=dict)
    reference: Dict[str, str] = field(default_factory=dict)
    config: Optional[dict] = None

    def order(self, method: str) -> Optional[float]:
        return self.fits[method].order

    def rows(self) -> List[Tuple[str, float, float, Optional[float], Optional[int]]]:
        """(method, τ, error, fitted order, irregular flag) in method then ladder order.

        The order is blank unless the fit is reliable; the flag is blank
        without a fit and 1 or 0 otherwise.
        """
        rows = []
        for method, table in self.tables.items():
            fit = self.fits.get(method)
            order = fit.order if fit is not None and fit.reliable else None
            irregular = int(fit.irregular) if fit is not None else None
            for tau, error in table:
                rows.append((method, tau, error, order, irregular))
        return rows

    def to_dict(self) -> dict:
        return {
            "tables": {m: [list(p) for p in t] for m, t in self.tables.items()},
            "fits": {m: f.to_dict() for m, f in self.fits.items()},
            "reference": dict(self.reference),
            "config": self.config,
            "__module__": self.__class__.__module__,
            "__name__": self.__class__.__name__,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ConvergenceResult":
        return cls(
            tables={m: [tuple(p) for p in t] for m, t in data.get("tables", {}).items()},
            fits={
                m: f if isinstance(f, OrderFit) else OrderFit.from_dict(f)
                for m, f in data.get("fits", {}).items()
            },
            reference=data.get("reference", {}),
            config=_plain(data.get("config")),
        )


def _plain(config):
    # the JSON object hook may already have rebuilt the config
    if hasattr(config, "to_dict"):
        return config.to_dict()
    return config


@dataclass
class ConservationSeries:
    """Energy and mass along one trajectory, starting at t = 0.

    Drift statistics are computed on the relative deviations
    (q(t) - q(0))/|q(0)|: the max of their magnitude, the least-squares
    slope against t, and the correlation of that fit.
    """

    method: str
    tau: float
    times: List[float] = field(default_factory=list)
    energy: List[float] = field(default_factory=list)
    mass: List[float] = field(default_factory=list)
    energy_drift: float = 0.0
    mass_drift: float = 0.0
    energy_growth: float = 0.0
    mass_growth: float = 0.0
    energy_correlation: Optional[float] = None
    mass_correlation: Optional[float] = None

    def rows(self) -> List[Tuple[float, float, float]]:
        return list(zip(self.times, self.energy, self.mass))

    def to_dict(self) -> dict:
        return {
            "method": self.method,
            "tau": self.tau,
            "times": list(self.times),
            "energy": list(self.energy),
            "mass": list(self.mass),
            "energy_drift": self.energy_drift,
            "mass_drift": self.mass_drift,
            "energy_growth": self.energy_growth,
            "mass_growth": self.mass_growth,
            "energy_correlation": self.energy_correlation,
            "mass_correlation": self.mass_correlation,
            "__module__": self.__class__.__module__,
            "__name__": self.__class__.__name__,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ConservationSeries":
        return cls(**{k: v for k, v in data.items() if not k.startswith("__")})
