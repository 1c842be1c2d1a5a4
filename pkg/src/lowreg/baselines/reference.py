# -*- coding: utf-8 -*-
"""
Fine-step reference solutions
"""

from loguru import logger

from lowreg.integrator.params import SchemeParams
from lowreg.integrator.stepper import integrate, step_count
from lowreg.spectral.field import Field

# reference step at most this fraction of the smallest step under study
REFERENCE_FRACTION = 0.01


def reference_solve(u0: Field, T: float, p: SchemeParams, refinement: int) -> Field:
    """Integrate u0 to T with step p.tau / refinement using p.method."""
    if not isinstance(refinement, int) or refinement < 1:
        raise ValueError(f"Invalid refinement {refinement}, must be an integer >= 1")
    fine = p.with_tau(p.tau / refinement)
    step_count(T, fine.tau)
    logger.debug(f"reference solve with {fine.method.value} at tau={fine.tau:g}")
    return integrate(u0, T, fine)


def default_refinement(tau: float, tau_min: float) -> int:
    """Smallest power of two m with tau/m <= tau_min * REFERENCE_FRACTION."""
    refinement = 1
    while tau / refinement > tau_min * REFERENCE_FRACTION:
        refinement *= 2
    return refinement
