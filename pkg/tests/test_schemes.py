# -*- coding: utf-8 -*-
"""
Unit tests for the low regularity schemes, Strang splitting and the
generic time loop
"""

import unittest
from unittest.mock import MagicMock

import numpy as np

from lowreg.baselines.plane_wave import plane_wave
from lowreg.baselines.strang import strang_map, strang_step
from lowreg.experiment.convergence import local_error_study
from lowreg.experiment.data import band_limited_data, random_hr_data
from lowreg.experiment.order import estimate_order
from lowreg.integrator.lowreg import lowreg_1d_map, lowreg_dd_map, step_lowreg_1d, step_lowreg_dd
from lowreg.integrator.params import Method, SchemeParams
from lowreg.integrator.stepper import (
    LowReg1DStepper,
    get_stepper,
    integrate,
    step,
    step_count,
)
from lowreg.spectral.field import Field, from_physical
from lowreg.spectral.grid import TorusGrid
from lowreg.spectral.norms import DiscreteL2, norm
from lowreg.spectral.operators import free_propagate

ALL_METHODS = (Method.LOWREG_1D, Method.LOWREG_DD, Method.STRANG)


def _shift(u: Field) -> Field:
    """Translate by one grid cell along every axis."""
    values = u.physical()
    for axis in range(u.grid.dim):
        values = np.roll(values, 1, axis=axis)
    return from_physical(values, u.grid)


class SchemeParamsTest(unittest.TestCase):
    """
    Test cases for SchemeParams and Method
    """

    def test_validation(self) -> None:
        with self.assertRaises(ValueError):
            SchemeParams(tau=0.0)
        with self.assertRaises(ValueError):
            SchemeParams(tau=0.1, method="rk4")
        with self.assertRaises(ValueError):
            SchemeParams(tau=0.1, phi1_target="both")
        self.assertIs(SchemeParams(tau=0.1, method="Strang").method, Method.STRANG)

    def test_dict(self) -> None:
        p = SchemeParams(tau=0.05, mu=-1.0, method=Method.LOWREG_DD, phi1_target="cubic")
        self.assertEqual(SchemeParams.from_dict(p.to_dict()), p)
        self.assertEqual(p.with_tau(0.1).tau, 0.1)
        self.assertIs(p.with_method(Method.STRANG).method, Method.STRANG)


class LinearLimitTest(unittest.TestCase):
    """
    Test cases for μ = 0 and τ = 0
    """

    def test_free_flow_when_linear(self) -> None:
        grid = TorusGrid(1, 256)
        u = random_hr_data(grid, 1.0, seed=0)
        exact = free_propagate(u, 0.01)
        for method in ALL_METHODS:
            out = step(u, SchemeParams(tau=0.01, mu=0.0, method=method))
            self.assertLessEqual(out.max_abs_diff(exact), 1e-12, method)

    def test_free_flow_when_linear_2d(self) -> None:
        grid = TorusGrid(2, 16)
        u = random_hr_data(grid, 1.0, seed=0)
        out = step(u, SchemeParams(tau=0.05, mu=0.0, method=Method.LOWREG_DD))
        self.assertLessEqual(out.max_abs_diff(free_propagate(u, 0.05)), 1e-12)

    def test_zero_step(self) -> None:
        u = random_hr_data(TorusGrid(1, 32), 1.0, seed=1)
        self.assertIs(lowreg_1d_map(u, 0.0, 1.0), u)
        self.assertIs(lowreg_dd_map(u, 0.0, 1.0), u)


class LowRegSchemeTest(unittest.TestCase):
    """
    Test cases for the one dimensional and d dimensional Fourier integrators
    """

    def setUp(self) -> None:
        self.grid = TorusGrid(1, 32)
        self.u = random_hr_data(self.grid, 1.0, seed=7)

    def test_constant(self) -> None:
        c, tau, mu = 0.8 + 0.3j, 0.1, 1.5
        rho = abs(c) ** 2
        expected = np.exp(1j * mu * tau * rho) * c - 2j * mu * tau * rho * c
        u = Field.constant(self.grid, c)
        one = lowreg_1d_map(u, tau, mu)
        self.assertAlmostEqual(one.coefficient((0,)), expected, places=14)
        for grid in (self.grid, TorusGrid(2, 8), TorusGrid(3, 4)):
            dd = lowreg_dd_map(Field.constant(grid, c), tau, mu)
            self.assertAlmostEqual(dd.coefficient((0,) * grid.dim), expected, places=14)
        # third order agreement with the exact constant solution
        exact = np.exp(-1j * mu * tau * rho) * c
        self.assertLess(abs(expected - exact), mu ** 3 * rho ** 3 * abs(c) * tau ** 3)

    def test_gauge_equivariance(self) -> None:
        phase = np.exp(0.9j)
        for method in (Method.LOWREG_1D, Method.LOWREG_DD):
            p = SchemeParams(tau=0.05, method=method)
            self.assertLess(step(self.u * phase, p).max_abs_diff(step(self.u, p) * phase), 1e-12)

    def test_translation_equivariance(self) -> None:
        u2 = random_hr_data(TorusGrid(2, 16), 1.0, seed=3)
        cases = [
            (self.u, SchemeParams(tau=0.05, method=Method.LOWREG_1D)),
            (self.u, SchemeParams(tau=0.05, method=Method.LOWREG_DD)),
            (u2, SchemeParams(tau=0.05, method=Method.LOWREG_DD)),
        ]
        for u, p in cases:
            self.assertLess(step(_shift(u), p).max_abs_diff(_shift(step(u, p))), 1e-12)

    def test_consistency(self) -> None:
        # distance to the free flow shrinks linearly with τ
        for method in (Method.LOWREG_1D, Method.LOWREG_DD):
            gaps = [
                norm(step(self.u, SchemeParams(tau=tau, method=method)) - free_propagate(self.u, tau), DiscreteL2)
                for tau in (1e-3, 5e-4)
            ]
            self.assertGreater(gaps[0] / gaps[1], 1.8)
            self.assertLess(gaps[0] / gaps[1], 2.2)

    def test_plane_wave_second_order(self) -> None:
        taus = [2.0 ** -j for j in range(5, 10)]
        cases = [
            (TorusGrid(1, 16), (2,), Method.LOWREG_1D),
            (TorusGrid(1, 16), (2,), Method.LOWREG_DD),
            (TorusGrid(2, 8), (1, 1), Method.LOWREG_DD),
        ]
        for grid, mode, method in cases:
            u0 = plane_wave(1.0, mode, 1.0, 0.0, grid)
            exact = plane_wave(1.0, mode, 1.0, 1.0, grid)
            table = [
                (tau, norm(integrate(u0, 1.0, SchemeParams(tau=tau, method=method)) - exact, DiscreteL2))
                for tau in taus
            ]
            fit = estimate_order(table)
            self.assertTrue(fit.reliable, method)
            self.assertGreater(fit.order, 1.8, method)
            self.assertLess(fit.order, 2.2, method)

    def test_local_third_order(self) -> None:
        u0 = band_limited_data(self.grid, seed=5, kmax=2) * 0.5
        taus = [2.0 ** -j for j in range(5, 10)]
        for method in (Method.LOWREG_1D, Method.LOWREG_DD):
            table = local_error_study(u0, SchemeParams(tau=taus[0], method=method), taus, 64)
            fit = estimate_order(table)
            self.assertGreater(fit.order, 2.6, method)
            self.assertLess(fit.order, 3.4, method)

    def test_cubic_phi1_target_loses_local_order(self) -> None:
        u0 = band_limited_data(self.grid, seed=5, kmax=2) * 0.5
        taus = [2.0 ** -j for j in range(5, 10)]
        p = SchemeParams(tau=taus[0], method=Method.LOWREG_DD, phi1_target="cubic")
        fit = estimate_order(local_error_study(u0, p, taus, 64))
        self.assertGreater(fit.order, 1.6)
        self.assertLess(fit.order, 2.4)

    def test_method_guards(self) -> None:
        with self.assertRaises(ValueError):
            step_lowreg_1d(self.u, SchemeParams(tau=0.1, method=Method.STRANG))
        with self.assertRaises(ValueError):
            step_lowreg_dd(self.u, SchemeParams(tau=0.1, method=Method.LOWREG_1D))
        with self.assertRaises(ValueError):
            step(Field.zeros(TorusGrid(2, 8)), SchemeParams(tau=0.1, method=Method.LOWREG_1D))


class StrangTest(unittest.TestCase):
    """
    Test cases for Strang splitting
    """

    def test_constant(self) -> None:
        grid = TorusGrid(1, 16)
        c = 1.2 - 0.5j
        out = strang_map(Field.constant(grid, c), 0.1, 2.0)
        self.assertAlmostEqual(out.coefficient((0,)), np.exp(-0.2j * abs(c) ** 2) * c, places=14)

    def test_plane_wave_exact(self) -> None:
        grid = TorusGrid(2, 16)
        u = plane_wave(0.7j, (3, -2), 1.3, 0.0, grid)
        out = strang_step(u, SchemeParams(tau=0.25, mu=1.3, method=Method.STRANG))
        self.assertLess(out.max_abs_diff(plane_wave(0.7j, (3, -2), 1.3, 0.25, grid)), 1e-14)

    def test_mass_preserved(self) -> None:
        u = random_hr_data(TorusGrid(1, 64), 0.5, seed=9)
        before = norm(u, DiscreteL2)
        after = norm(strang_map(u, 0.1, 1.0), DiscreteL2)
        self.assertLess(abs(after - before) / before, 1e-13)

    def test_method_guard(self) -> None:
        with self.assertRaises(ValueError):
            strang_step(Field.zeros(TorusGrid(1, 8)), SchemeParams(tau=0.1))


class TimeLoopTest(unittest.TestCase):
    """
    Test cases for steppers and integrate
    """

    def test_step_count(self) -> None:
        self.assertEqual(step_count(1.0, 0.125), 8)
        self.assertEqual(step_count(1.0, 2e-2 / 2 ** 9), 25600)
        self.assertEqual(step_count(0.0, 0.1), 0)
        with self.assertRaises(ValueError):
            step_count(1.0, 0.3)
        with self.assertRaises(ValueError):
            step_count(-1.0, 0.1)

    def test_stepper_method_mismatch(self) -> None:
        with self.assertRaises(ValueError):
            LowReg1DStepper(SchemeParams(tau=0.1, method=Method.STRANG))
        self.assertIsInstance(get_stepper(SchemeParams(tau=0.1)), LowReg1DStepper)

    def test_callback_stride(self) -> None:
        u0 = random_hr_data(TorusGrid(1, 16), 1.0, seed=0)
        callback = MagicMock()
        integrate(u0, 1.0, SchemeParams(tau=0.125, method=Method.STRANG), callback=callback, stride=3)
        steps = [call.args[0] for call in callback.call_args_list]
        self.assertEqual(steps, [0, 3, 6, 8])
        self.assertAlmostEqual(callback.call_args_list[-1].args[1], 1.0)
        with self.assertRaises(ValueError):
            integrate(u0, 1.0, SchemeParams(tau=0.125), stride=0)

    def test_integrate_matches_repeated_steps(self) -> None:
        u0 = random_hr_data(TorusGrid(1, 16), 1.0, seed=0)
        p = SchemeParams(tau=0.25)
        manual = u0
        for _ in range(4):
            manual = step(manual, p)
        self.assertEqual(integrate(u0, 1.0, p).max_abs_diff(manual), 0.0)


if __name__ == "__main__":
    unittest.main()
