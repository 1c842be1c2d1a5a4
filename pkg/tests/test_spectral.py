# -*- coding: utf-8 -*-
"""
Unit tests for the torus grid, fields, multipliers and norms
"""

import unittest

import numpy as np

from lowreg.experiment.data import random_hr_data
from lowreg.spectral.field import Field, from_physical, resample, to_physical
from lowreg.spectral.grid import TorusGrid
from lowreg.spectral.norms import DiscreteH1, DiscreteL2, NormKind, SobolevR, norm
from lowreg.spectral.operators import (
    free_propagate,
    inv_derivative,
    laplacian,
    partial_propagate,
    phi1,
    phi1_apply,
    spectral_derivative,
    zero_mode_slice,
)


class TorusGridTest(unittest.TestCase):
    """
    Test cases for TorusGrid
    """

    def test_lattice(self) -> None:
        grid = TorusGrid(1, 8)
        self.assertEqual(list(grid.wavenumbers), [0, 1, 2, 3, -4, -3, -2, -1])
        self.assertAlmostEqual(grid.mesh_width, 2 * np.pi / 8)
        self.assertEqual(TorusGrid(3, 4).shape, (4, 4, 4))
        self.assertEqual(TorusGrid(2, 4).size, 16)

    def test_k_squared(self) -> None:
        grid = TorusGrid(2, 8)
        self.assertEqual(grid.k_squared[grid.index_of((1, -2))], 5.0)

    def test_invalid(self) -> None:
        with self.assertRaises(ValueError):
            TorusGrid(0, 8)
        with self.assertRaises(ValueError):
            TorusGrid(1, 7)
        with self.assertRaises(ValueError):
            TorusGrid(1, 0)

    def test_axis_and_modes(self) -> None:
        grid = TorusGrid(2, 8)
        self.assertEqual(grid.check_axis(2), 1)
        with self.assertRaises(ValueError):
            grid.check_axis(3)
        with self.assertRaises(ValueError):
            grid.check_axis(0)
        self.assertEqual(grid.index_of((-4, 3)), (4, 3))
        with self.assertRaises(ValueError):
            grid.index_of((4, 0))
        with self.assertRaises(ValueError):
            grid.index_of((1,))


class FieldTest(unittest.TestCase):
    """
    Test cases for Field and the transforms
    """

    def setUp(self) -> None:
        self.grid = TorusGrid(1, 32)

    def test_constant_physical(self) -> None:
        f = from_physical(np.full(self.grid.shape, 2.5 - 1j), self.grid)
        self.assertAlmostEqual(f.coefficient((0,)), 2.5 - 1j, places=14)
        self.assertLess(np.max(np.abs(f.coeffs[1:])), 1e-15)

    def test_single_mode(self) -> None:
        f = Field.from_modes(self.grid, {(1,): 1.0})
        x = self.grid.points[0]
        self.assertLess(np.max(np.abs(to_physical(f) - np.exp(1j * x))), 1e-14)

    def test_round_trip(self) -> None:
        f = random_hr_data(self.grid, 0.0, seed=3)
        back = from_physical(to_physical(f), self.grid)
        self.assertLessEqual(back.max_abs_diff(f), 1e-12)

    def test_shape_mismatch(self) -> None:
        with self.assertRaises(ValueError):
            from_physical(np.zeros(16), self.grid)
        with self.assertRaises(ValueError):
            Field(self.grid, np.zeros(16))

    def test_immutable(self) -> None:
        f = Field.zeros(self.grid)
        with self.assertRaises(ValueError):
            f.coeffs[0] = 1.0

    def test_arithmetic(self) -> None:
        f = Field.constant(self.grid, 1.0)
        g = Field.from_modes(self.grid, {(2,): 1j})
        h = 2 * f - g + (-f)
        self.assertEqual(h.coefficient((0,)), 1.0)
        self.assertEqual(h.coefficient((2,)), -1j)
        with self.assertRaises(ValueError):
            f + Field.zeros(TorusGrid(1, 16))
        with self.assertRaises(TypeError):
            f.same_grid(np.zeros(32))

    def test_conj(self) -> None:
        f = Field.from_modes(self.grid, {(3,): 1 + 2j})
        self.assertAlmostEqual(f.conj().coefficient((-3,)), 1 - 2j, places=14)

    def test_resample(self) -> None:
        f = Field.from_modes(self.grid, {(3,): 1.0, (-5,): 0.5j})
        fine = resample(f, 64)
        self.assertEqual(fine.grid, TorusGrid(1, 64))
        self.assertEqual(fine.coefficient((-5,)), 0.5j)
        self.assertLessEqual(resample(fine, 32).max_abs_diff(f), 0.0)
        coarse = resample(f, 8)
        self.assertEqual(coarse.coefficient((3,)), 1.0)
        self.assertEqual(np.count_nonzero(coarse.coeffs), 1)


class OperatorTest(unittest.TestCase):
    """
    Test cases for the Fourier multipliers
    """

    def setUp(self) -> None:
        self.grid = TorusGrid(1, 32)
        self.f = random_hr_data(self.grid, 1.0, seed=11)

    def test_free_propagate(self) -> None:
        self.assertIs(free_propagate(self.f, 0.0), self.f)
        single = Field.from_modes(self.grid, {(1,): 1.0})
        self.assertAlmostEqual(free_propagate(single, np.pi).coefficient((1,)), -1.0, places=14)
        for t in (0.3, -1.7, 12.0):
            moved = free_propagate(self.f, t)
            self.assertAlmostEqual(norm(moved, SobolevR(2.0)), norm(self.f, SobolevR(2.0)), delta=1e-13)

    def test_group_property(self) -> None:
        a = free_propagate(free_propagate(self.f, 0.4), 0.7)
        self.assertLess(a.max_abs_diff(free_propagate(self.f, 1.1)), 1e-13)
        self.assertLess(free_propagate(a, -1.1).max_abs_diff(self.f), 1e-13)

    def test_partial_propagate(self) -> None:
        grid = TorusGrid(2, 8)
        f = random_hr_data(grid, 0.0, seed=2)
        both = partial_propagate(partial_propagate(f, 0.5, 1), 0.5, 2)
        self.assertLess(both.max_abs_diff(free_propagate(f, 0.5)), 1e-14)

    def test_inv_derivative(self) -> None:
        self.assertAlmostEqual(
            inv_derivative(Field.from_modes(self.grid, {(2,): 1.0}), 1).coefficient((2,)),
            -0.5j,
        )
        self.assertEqual(inv_derivative(Field.constant(self.grid, 3.0), 1).max_abs_diff(Field.zeros(self.grid)), 0.0)
        # ∂∂⁻¹ removes exactly the mean
        mean_free = self.f - Field.constant(self.grid, self.f.coefficient((0,)))
        back = spectral_derivative(inv_derivative(self.f, 1), 1)
        self.assertLess(back.max_abs_diff(mean_free), 1e-14)

    def test_inv_derivative_2d_slice(self) -> None:
        grid = TorusGrid(2, 8)
        f = Field.from_modes(grid, {(0, 2): 1.0, (1, 2): 1.0})
        out = inv_derivative(f, 1)
        self.assertEqual(out.coefficient((0, 2)), 0.0)
        self.assertAlmostEqual(out.coefficient((1, 2)), -1j)

    def test_laplacian(self) -> None:
        f = Field.from_modes(self.grid, {(3,): 1.0})
        self.assertEqual(laplacian(f).coefficient((3,)), -9.0)

    def test_phi1(self) -> None:
        self.assertEqual(phi1(0.0), 1.0)
        z = np.array([1e-6j, 1e-3, 2j, -4.0])
        expected = np.expm1(z) / z
        self.assertLess(np.max(np.abs(phi1(z) - expected)), 1e-12)
        for z in (0.99e-4j, 1.01e-4j, -0.5e-4):
            self.assertLess(abs(phi1(z) - np.expm1(z) / z), 1e-13)

    def test_phi1_apply(self) -> None:
        self.assertLess(phi1_apply(self.f, 0.0).max_abs_diff(self.f), 1e-15)
        single = Field.from_modes(self.grid, {(2,): 1.0})
        tau = 0.1
        z = 2j * tau * 4
        self.assertAlmostEqual(phi1_apply(single, tau).coefficient((2,)), (np.exp(z) - 1) / z, places=14)
        with self.assertRaises(ValueError):
            phi1_apply(self.f, -0.1)

    def test_zero_mode_slice(self) -> None:
        grid = TorusGrid(2, 8)
        f = Field.from_modes(grid, {(0, 1): 1.0, (2, 0): 2.0, (1, 1): 3.0})
        second = zero_mode_slice(f, 2)
        self.assertEqual(second.coefficient((2, 0)), 2.0)
        self.assertEqual(second.coefficient((0, 1)), 0.0)
        self.assertEqual(zero_mode_slice(f, 1).coefficient((0, 1)), 1.0)


class NormTest(unittest.TestCase):
    """
    Test cases for the norms
    """

    def test_l2_matches_sobolev_zero(self) -> None:
        grid = TorusGrid(2, 16)
        f = random_hr_data(grid, 1.0, seed=5)
        scale = (2 * np.pi) ** (grid.dim / 2)
        self.assertAlmostEqual(norm(f, DiscreteL2), scale * norm(f, SobolevR(0)), delta=1e-12)

    def test_plane_wave_norms(self) -> None:
        grid = TorusGrid(1, 16)
        f = Field.from_modes(grid, {(3,): 2.0})
        self.assertAlmostEqual(norm(f, DiscreteL2), 2.0 * np.sqrt(2 * np.pi), places=12)
        self.assertAlmostEqual(norm(f, DiscreteH1), 2.0 * np.sqrt(2 * np.pi * 10), places=12)
        self.assertAlmostEqual(norm(f, SobolevR(1)), 8.0, places=12)

    def test_parse(self) -> None:
        self.assertEqual(NormKind.parse("L2"), DiscreteL2)
        self.assertEqual(NormKind.parse("sobolev:1.5"), SobolevR(1.5))
        self.assertEqual(str(SobolevR(2)), "sobolev:2")
        with self.assertRaises(ValueError):
            NormKind.parse("sobolev")
        with self.assertRaises(ValueError):
            NormKind.parse("h2")


if __name__ == "__main__":
    unittest.main()
