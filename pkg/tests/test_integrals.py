# -*- coding: utf-8 -*-
"""
Unit tests for the closed-form oscillatory integrals
"""

import unittest

import numpy as np

from lowreg.baselines.duhamel import j1_direct, j2_direct, kj_direct
from lowreg.experiment.data import band_limited_data, random_hr_data
from lowreg.integrator.integrals import j1_1d, j2_1d, kj
from lowreg.spectral.field import Field
from lowreg.spectral.grid import TorusGrid


class OneDimensionalIntegralTest(unittest.TestCase):
    """
    Test cases for J₁ and J₂
    """

    def setUp(self) -> None:
        self.grid = TorusGrid(1, 16)
        self.tau = 0.3

    def test_zero(self) -> None:
        zero = Field.zeros(self.grid)
        self.assertEqual(np.max(np.abs(j1_1d(zero, self.tau).coeffs)), 0.0)
        self.assertEqual(np.max(np.abs(j2_1d(zero, self.tau).coeffs)), 0.0)

    def test_constant(self) -> None:
        c = 0.7 - 0.4j
        expected = Field.constant(self.grid, self.tau * abs(c) ** 2 * c)
        u = Field.constant(self.grid, c)
        self.assertLess(j1_1d(u, self.tau).max_abs_diff(expected), 1e-15)
        self.assertLess(j2_1d(u, self.tau).max_abs_diff(expected), 1e-15)

    def test_single_mode(self) -> None:
        u = Field.from_modes(self.grid, {(1,): 1.0})
        tau = self.tau
        j1 = Field.from_modes(self.grid, {(1,): (1 - np.exp(-2j * tau)) / 2j})
        j2 = Field.from_modes(self.grid, {(1,): (np.exp(2j * tau) - 1) / 2j})
        self.assertLess(j1_1d(u, tau).max_abs_diff(j1), 1e-14)
        self.assertLess(j2_1d(u, tau).max_abs_diff(j2), 1e-14)

    def test_vanish_at_zero_step(self) -> None:
        u = random_hr_data(self.grid, 1.0, seed=4)
        self.assertLess(np.max(np.abs(j1_1d(u, 0.0).coeffs)), 1e-15)
        self.assertLess(np.max(np.abs(j2_1d(u, 0.0).coeffs)), 1e-15)

    def test_match_direct_sums(self) -> None:
        for n in (8, 16, 32):
            grid = TorusGrid(1, n)
            for seed in range(5):
                v = band_limited_data(grid, seed)
                self.assertLessEqual(j1_1d(v, 0.4).max_abs_diff(j1_direct(v, 0.4)), 1e-12)
                self.assertLessEqual(j2_1d(v, 0.4).max_abs_diff(j2_direct(v, 0.4)), 1e-12)

    def test_rejects_2d(self) -> None:
        u = Field.zeros(TorusGrid(2, 8))
        with self.assertRaises(ValueError):
            j1_1d(u, 0.1)
        with self.assertRaises(ValueError):
            j2_1d(u, 0.1)


class KjTest(unittest.TestCase):
    """
    Test cases for K_j
    """

    def test_constants(self) -> None:
        grid = TorusGrid(2, 8)
        w = Field.constant(grid, 2.0 + 1j)
        v = Field.constant(grid, -0.5j)
        expected = Field.constant(grid, 0.2 * (2.0 + 1j) * (-0.5j))
        for axis in (1, 2):
            self.assertLess(kj(w, v, 0.2, axis).max_abs_diff(expected), 1e-15)

    def test_single_mode(self) -> None:
        grid = TorusGrid(1, 16)
        u = Field.from_modes(grid, {(1,): 1.0})
        tau = 0.25
        expected = Field.from_modes(grid, {(2,): (np.exp(2j * tau) - 1) / 2j})
        self.assertLess(kj(u, u, tau, 1).max_abs_diff(expected), 1e-14)

    def test_symmetric(self) -> None:
        grid = TorusGrid(2, 16)
        w = random_hr_data(grid, 0.5, seed=1)
        v = random_hr_data(grid, 0.5, seed=2)
        for axis in (1, 2):
            self.assertLess(kj(w, v, 0.1, axis).max_abs_diff(kj(v, w, 0.1, axis)), 1e-13)

    def test_match_direct_sums(self) -> None:
        cases = [TorusGrid(1, 8), TorusGrid(1, 16), TorusGrid(1, 32), TorusGrid(2, 8)]
        for grid in cases:
            for seed in range(3):
                v = band_limited_data(grid, seed)
                w = band_limited_data(grid, seed + 10)
                for axis in range(1, grid.dim + 1):
                    for a, b in ((v, v), (v.conj(), v), (w, v)):
                        self.assertLessEqual(
                            kj(a, b, 0.7, axis).max_abs_diff(kj_direct(a, b, 0.7, axis)),
                            1e-12,
                        )

    def test_rejects_bad_input(self) -> None:
        grid = TorusGrid(2, 8)
        u = Field.zeros(grid)
        with self.assertRaises(ValueError):
            kj(u, u, 0.1, 3)
        with self.assertRaises(ValueError):
            kj(u, Field.zeros(TorusGrid(2, 16)), 0.1, 1)


if __name__ == "__main__":
    unittest.main()
