# -*- coding: utf-8 -*-
"""
Convergence order estimation from (τ, error) tables
"""

from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np
from loguru import logger
from scipy.stats import linregress

# errors below this are roundoff and never enter a fit
ERROR_FLOOR = 1e-10
MIN_FIT_POINTS = 3
# a fit is irregular when some consecutive slope log(e_i/e_{i+1})/log(τ_i/τ_{i+1})
# lies further than this from the fitted order, or |rvalue| drops below the bound
IRREGULAR_SLOPE_SPREAD = 0.6
IRREGULAR_MIN_RVALUE = 0.99


@dataclass
class OrderFit:
    """Least-squares slope of log(error) against log(τ).

    - order:      fitted slope, None when fewer than two points survive
    - reliable:   at least MIN_FIT_POINTS points entered the fit
    - fit_range:  (largest τ, smallest τ) actually used
    - rvalue:     correlation coefficient of the log-log fit
    - floored:    some points were dropped by the error floor
    - saturated:  some points were dropped because the error stopped decreasing
    - irregular:  the surviving table is not a clean power law (see
                  IRREGULAR_SLOPE_SPREAD and IRREGULAR_MIN_RVALUE)
    """

    order: Optional[float]
    reliable: bool
    fit_range: Optional[Tuple[float, float]] = None
    rvalue: Optional[float] = None
    floored: bool = False
    saturated: bool = False
    irregular: bool = False
    points_used: int = 0
    dropped: List[float] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "reliable": self.reliable,
            "fit_range": list(self.fit_range) if self.fit_range else None,
            "rvalue": self.rvalue,
            "floored": self.floored,
            "saturated": self.saturated,
            "irregular": self.irregular,
            "points_used": self.points_used,
            "dropped": list(self.dropped),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "OrderFit":
        fit_range = data.get("fit_range")
        return cls(
            order=data.get("order"),
            reliable=data.get("reliable", False),
            fit_range=tuple(fit_range) if fit_range else None,
            rvalue=data.get("rvalue"),
            floored=data.get("floored", False),
            saturated=data.get("saturated", False),
            irregular=data.get("irregular", False),
            points_used=data.get("points_used", 0),
            dropped=data.get("dropped", []),
        )


def _surviving(points: Sequence[Tuple[float, float]]):
    """Sort by decreasing τ, then drop floored points and the saturated tail."""
    ordered = sorted(points, key=lambda p: -p[0])
    kept, dropped = [], []
    floored = saturated = False
    for tau, err in ordered:
        if err < ERROR_FLOOR:
            floored = True
            dropped.append(tau)
            continue
        if kept and err >= kept[-1][1]:
            # once the error stops decreasing the rest of the ladder is
            # spatial or reference error
            saturated = True
            dropped.append(tau)
            continue
        if saturated:
            dropped.append(tau)
            continue
        kept.append((tau, err))
    return kept, dropped, floored, saturated


def _irregular(kept: List[Tuple[float, float]], order: float, rvalue: float) -> bool:
    if len(kept) < 3:
        return False
    taus = np.array([tau for tau, _ in kept])
    errors = np.array([err for _, err in kept])
    local = np.log(errors[:-1] / errors[1:]) / np.log(taus[:-1] / taus[1:])
    spread = float(np.max(np.abs(local - order)))
    return spread > IRREGULAR_SLOPE_SPREAD or abs(rvalue) < IRREGULAR_MIN_RVALUE


def estimate_order(points: Sequence[Tuple[float, float]]) -> OrderFit:
    if len(points) < 2:
        raise ValueError(f"Order fit needs at least 2 points, got {len(points)}")
    for tau, err in points:
        if not tau > 0 or err < 0 or not np.isfinite(err):
            raise ValueError(f"Invalid point ({tau}, {err}), need tau > 0 and finite error >= 0")

    errors = np.array([err for _, err in points])
    if np.all(errors == errors[0]) and errors[0] >= ERROR_FLOOR:
        # flat table: zero slope over the full ladder
        taus = sorted((tau for tau, _ in points), reverse=True)
        return OrderFit(
            order=0.0,
            reliable=len(points) >= MIN_FIT_POINTS,
            fit_range=(taus[0], taus[-1]),
            rvalue=0.0,
            points_used=len(points),
        )

    kept, dropped, floored, saturated = _surviving(points)
    fit = OrderFit(
        order=None,
        reliable=False,
        floored=floored,
        saturated=saturated,
        points_used=len(kept),
        dropped=dropped,
    )
    if len(kept) >= 2:
        log_tau = np.log([tau for tau, _ in kept])
        log_err = np.log([err for _, err in kept])
        result = linregress(log_tau, log_err)
        fit.order = float(result.slope)
        fit.rvalue = float(result.rvalue)
        fit.fit_range = (kept[0][0], kept[-1][0])
        fit.irregular = _irregular(kept, fit.order, fit.rvalue)
    fit.reliable = len(kept) >= MIN_FIT_POINTS

    if not fit.reliable:
        logger.warning(
            f"Order fit unreliable: {len(kept)} of {len(points)} points survive "
            f"(floored={floored}, saturated={saturated})",
        )
    elif fit.irregular:
        logger.warning(f"Order fit {fit.order:.3f} is irregular over {len(kept)} points")
    return fit
