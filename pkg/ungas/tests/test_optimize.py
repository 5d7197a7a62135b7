# coding: utf-8
import numpy as np
from django.test import SimpleTestCase

from ungas.dynamics import amplitudes, amplitudes_from_phases
from ungas.logger import OptimizationError
from ungas.optimize import (
    SQP,
    bound_conservation,
    bound_product,
    bounds_table,
    cross_strata_optimize,
    grid_search,
    optimal_amplitude,
    optimal_concurrence_same_stratum,
    optimize_same_stratum,
    recover_couplings,
    saturation_gaps,
    synthesize_couplings,
)
from ungas.tests import BUILTINS, NumericAssertions, context

# Optimum D6 entre les strates 0 et 2 : (2/9)·sin(u)·(cos(u) + 2) avec cos(u) = (√3 - 1)/2
COS_U = (np.sqrt(3) - 1) / 2
D6_CROSS_02 = 2 / 9 * np.sqrt(1 - COS_U**2) * (COS_U + 2)


class SameStratumTestCase(NumericAssertions, SimpleTestCase):
    def test_dihedral_6(self):
        zeta = context("D", 6).zeta
        self.assertAllClose([optimal_amplitude(zeta, m) for m in range(3)], [1, 2 / 3, 1 / 3], atol=1e-12)
        self.assertAlmostEqual(optimal_concurrence_same_stratum(zeta, 1), 8 / 9, places=12)
        self.assertAlmostEqual(optimal_concurrence_same_stratum(zeta, 2), 2 / 9, places=12)

    def test_single_vertex_stratum(self):
        zeta = context("D", 6).zeta
        with self.assertRaises(OptimizationError):
            optimal_concurrence_same_stratum(zeta, 0)
        with self.assertRaises(OptimizationError):
            optimal_amplitude(zeta, 3)

    def test_sl23(self):
        zeta = context("SL2", 3).zeta
        for m in range(zeta.d_prime_plus_1):
            with self.subTest(stratum=m):
                expected = 1.0 if zeta.merged_kappa[m] == 1 else 0.25
                self.assertAlmostEqual(optimal_amplitude(zeta, m), expected, places=12)
                if zeta.merged_kappa[m] >= 2:
                    self.assertAlmostEqual(optimal_concurrence_same_stratum(zeta, m), 0.125, places=12)

    def test_cyclic_even(self):
        for k in range(2, 7):
            zeta = context("Z", 2 * k).zeta
            for m in range(k + 1):
                with self.subTest(k=k, stratum=m):
                    total = 1 + sum(abs(np.cos(m * l * np.pi / k)) for l in range(1, k))
                    self.assertAlmostEqual(optimal_amplitude(zeta, m), total / k, places=12)

    def test_optimize_same_stratum(self):
        zeta = context("D", 6).zeta
        result = optimize_same_stratum(zeta, 1, t_star=2.0)
        self.assertEqual(result.stratum, 1)
        self.assertAlmostEqual(result.concurrence_opt, 8 / 9, places=12)
        self.assertEqual(result.branch_integers, [0, 0, 0])
        self.assertEqual(len(result.couplings.J), 3)


class SynthesisTestCase(NumericAssertions, SimpleTestCase):
    def test_reaches_optimum(self):
        for family, parameter in BUILTINS:
            ctx = context(family, parameter)
            for class_index in range(ctx.partition.count):
                m = ctx.zeta.stratum_of(class_index)
                with self.subTest(family=family, parameter=parameter, stratum=m):
                    couplings = synthesize_couplings(ctx.zeta, m, t_star=1.3)
                    couplings.check_dual(ctx.partition.dual)
                    alpha = amplitudes(ctx.eigen, couplings, 1.3).alpha
                    self.assertAlmostEqual(abs(alpha[class_index]), optimal_amplitude(ctx.zeta, m), delta=1e-9)

    def test_branches_and_scaling(self):
        ctx = context("SL2", 3)
        m = 3
        base = synthesize_couplings(ctx.zeta, m, t_star=1.0)
        self.assertAllClose(synthesize_couplings(ctx.zeta, m, t_star=2.0).J, base.J / 2)
        shifted = synthesize_couplings(ctx.zeta, m, branch_integers=[0, 1, -2, 3, 1], phi=0.4)
        self.assertFalse(np.allclose(shifted.J, base.J))
        class_index = ctx.zeta.col_members[m][0]
        self.assertAlmostEqual(
            abs(amplitudes(ctx.eigen, shifted, 1.0).alpha[class_index]), optimal_amplitude(ctx.zeta, m), delta=1e-9
        )

    def test_phase_recovery(self):
        zeta = context("Z", 6).zeta
        theta = np.array([0.0, 0.5, -1.2, 2.0])
        couplings = recover_couplings(zeta, theta, t=0.7)
        self.assertAllClose(-2 * 0.7 * zeta.P @ couplings.merged(zeta), theta, atol=1e-12)

    def test_invalid_parameters(self):
        zeta = context("D", 6).zeta
        with self.assertRaises(OptimizationError):
            synthesize_couplings(zeta, 1, branch_integers=[0, 1])
        with self.assertRaises(OptimizationError):
            recover_couplings(zeta, [0, 0, 0], t=0.0)


class CrossStrataTestCase(NumericAssertions, SimpleTestCase):
    def test_dihedral_6(self):
        zeta = context("D", 6).zeta
        expected = {(0, 1): 1 / np.sqrt(2), (0, 2): D6_CROSS_02, (1, 2): np.sqrt(3) / 6}
        for (i, j), value in expected.items():
            with self.subTest(pair=(i, j)):
                result = cross_strata_optimize(zeta, i, j, starts=16, seed=1)
                self.assertAlmostEqual(result.concurrence, value, delta=1e-6)
                self.assertTrue(result.converged)
                self.assertEqual(result.phases[0], 0.0)
                alpha = amplitudes_from_phases(zeta, result.phases)
                self.assertAlmostEqual(2 * abs(alpha[i]) * abs(alpha[j]), result.concurrence, delta=1e-9)

    def test_couplings_realize_phases(self):
        ctx = context("D", 6)
        result = cross_strata_optimize(ctx.zeta, 1, 2, starts=8)
        alpha = amplitudes(ctx.eigen, result.couplings, 1.0).alpha
        self.assertAlmostEqual(2 * abs(alpha[1]) * abs(alpha[2]), result.concurrence, delta=1e-9)

    def test_grid_search(self):
        zeta = context("D", 6).zeta
        best, phases = grid_search(zeta, 1, 2, steps=2000)
        self.assertAlmostEqual(best, np.sqrt(3) / 6, delta=2e-3)
        self.assertLessEqual(best, np.sqrt(3) / 6 + 1e-12)
        self.assertEqual(len(phases), 3)

    def test_sqp_agrees(self):
        zeta = context("D", 6).zeta
        torus = cross_strata_optimize(zeta, 0, 2, starts=16)
        sqp = cross_strata_optimize(zeta, 0, 2, starts=16, method=SQP)
        self.assertEqual(sqp.method, SQP)
        self.assertAlmostEqual(sqp.concurrence, torus.concurrence, delta=5e-3)

    def test_workers_deterministic(self):
        zeta = context("Z", 6).zeta
        serial = cross_strata_optimize(zeta, 1, 3, starts=12, seed=4)
        threaded = cross_strata_optimize(zeta, 1, 3, starts=12, seed=4, workers=4)
        self.assertEqual(serial.concurrence, threaded.concurrence)
        self.assertAllClose(serial.phases, threaded.phases, atol=0)

    def test_invalid(self):
        zeta = context("D", 6).zeta
        with self.assertRaises(OptimizationError):
            cross_strata_optimize(zeta, 1, 1)
        with self.assertRaises(OptimizationError):
            cross_strata_optimize(zeta, 0, 1, method="newton")
        with self.assertRaises(OptimizationError):
            cross_strata_optimize(zeta, 0, 5)


class BoundsTestCase(NumericAssertions, SimpleTestCase):
    def test_dihedral_6(self):
        zeta = context("D", 6).zeta
        rows = bounds_table(zeta)
        self.assertEqual([row["pair"] for row in rows], [(0, 1), (0, 2), (1, 2)])
        self.assertAllClose([row["product"] for row in rows], [4 / 3, 2 / 3, 4 / 9], atol=1e-12)
        self.assertAllClose(
            [row["conservation"] for row in rows], [1 / np.sqrt(2), 1 / np.sqrt(3), 1 / np.sqrt(6)], atol=1e-12
        )
        self.assertAlmostEqual(bound_product(zeta, 1, 2), 4 / 9, places=12)

    def test_bounds_dominate_every_builtin(self):
        for family, parameter in BUILTINS:
            zeta = context(family, parameter).zeta
            for row in bounds_table(zeta):
                i, j = row["pair"]
                with self.subTest(family=family, parameter=parameter, pair=(i, j)):
                    result = cross_strata_optimize(zeta, i, j, starts=8, seed=0)
                    self.assertLessEqual(result.concurrence, row["product"] + 1e-9)
                    self.assertLessEqual(result.concurrence, row["conservation"] + 1e-9)
                    alpha = amplitudes_from_phases(zeta, result.phases)
                    kappa = zeta.merged_kappa
                    self.assertLessEqual(kappa[i] * abs(alpha[i]) ** 2 + kappa[j] * abs(alpha[j]) ** 2, 1 + 1e-12)

    def test_conservation_invalid(self):
        with self.assertRaises(OptimizationError):
            bound_conservation(0, 2)

    def test_saturation_gaps(self):
        rows = saturation_gaps(context("D", 6).zeta, starts=8)
        self.assertEqual(len(rows), 3)
        for row in rows:
            self.assertGreaterEqual(row["gap"], -1e-9)
            self.assertLessEqual(row["concurrence"], row["product"] + 1e-9)
        self.assertAlmostEqual(rows[0]["gap"], 0.0, delta=1e-6)
