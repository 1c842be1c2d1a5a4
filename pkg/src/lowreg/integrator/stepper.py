# -*- coding: utf-8 -*-
"""
Base class for time steppers and the generic time loop
"""

from abc import ABC, abstractmethod
from typing import Callable, Dict, Optional, Type

from loguru import logger

from lowreg.baselines.strang import strang_map
from lowreg.spectral.field import Field

from .lowreg import lowreg_1d_map, lowreg_dd_map
from .params import Method, SchemeParams

# relative slack when checking that T is an integer multiple of tau
STEP_COUNT_TOLERANCE = 1e-9


class StepperBase(ABC):
    """Base class for steppers."""

    method: Method

    def __init__(self, params: SchemeParams) -> None:
        if params.method is not self.method:
            raise ValueError(
                f"{self.__class__.__name__} cannot run method {params.method.value}",
            )
        self.params = params

    def check(self, u: Field) -> None:
        """Reject fields the scheme is not defined for."""

    @abstractmethod
    def step(self, u: Field) -> Field:
        """Advance `u` by one step of size params.tau."""


class LowReg1DStepper(StepperBase):
    """The one dimensional second-order Fourier integrator."""

    method = Method.LOWREG_1D

    def check(self, u: Field) -> None:
        if u.grid.dim != 1:
            raise ValueError(
                f"Method {self.method.value} requires grid dimension 1, got {u.grid.dim}",
            )

    def step(self, u: Field) -> Field:
        return lowreg_1d_map(u, self.params.tau, self.params.mu)


class LowRegDDStepper(StepperBase):
    """The d-dimensional Fourier integrator."""

    method = Method.LOWREG_DD

    def step(self, u: Field) -> Field:
        return lowreg_dd_map(u, self.params.tau, self.params.mu, self.params.phi1_target)


class StrangStepper(StepperBase):
    """Nonlinear-linear-nonlinear Strang splitting."""

    method = Method.STRANG

    def step(self, u: Field) -> Field:
        return strang_map(u, self.params.tau, self.params.mu)


STEPPERS: Dict[Method, Type[StepperBase]] = {
    Method.LOWREG_1D: LowReg1DStepper,
    Method.LOWREG_DD: LowRegDDStepper,
    Method.STRANG: StrangStepper,
}


def get_stepper(params: SchemeParams) -> StepperBase:
    return STEPPERS[params.method](params)


def step(u: Field, params: SchemeParams) -> Field:
    """One step of whichever method `params` selects."""
    stepper = get_stepper(params)
    stepper.check(u)
    return stepper.step(u)


def step_count(T: float, tau: float) -> int:
    """Number of steps of size tau reaching T; rejects non-integer counts."""
    if T < 0:
        raise ValueError(f"Invalid horizon {T}, must be >= 0")
    ratio = T / tau
    n = int(round(ratio))
    if abs(ratio - n) > STEP_COUNT_TOLERANCE * max(1.0, ratio):
        raise ValueError(f"T = {T} is not an integer multiple of tau = {tau}")
    return n


def integrate(
    u0: Field,
    T: float,
    params: SchemeParams,
    callback: Optional[Callable[[int, float, Field], None]] = None,
    stride: int = 1,
) -> Field:
    """Integrate u0 to time T with constant step params.tau.

    Args:
        u0 (`Field`):
            initial value
        T (`float`):
            final time, an integer multiple of params.tau
        params (`SchemeParams`):
            step size, nonlinearity and method
        callback (`Optional[Callable[[int, float, Field], None]]`):
            called as callback(n, t_n, u^n) at n = 0 and every `stride`
            steps, and always at the final step
        stride (`int`, defaults to `1`):
            callback stride in steps
    """
    if stride < 1:
        raise ValueError(f"Invalid stride {stride}, must be >= 1")
    n_steps = step_count(T, params.tau)
    stepper = get_stepper(params)
    stepper.check(u0)
    logger.debug(
        f"integrate {params.method.value}: tau={params.tau:g}, mu={params.mu:g}, "
        f"steps={n_steps}, grid=({u0.grid.dim}, {u0.grid.n})",
    )

    u = u0
    if callback is not None:
        callback(0, 0.0, u)
    for n in range(1, n_steps + 1):
        u = stepper.step(u)
        if callback is not None and (n % stride == 0 or n == n_steps):
            callback(n, n * params.tau, u)
    return u
