# coding: utf-8
import numpy as np
from django.test import SimpleTestCase

from ungas.dynamics import (
    OPTIMAL_STATE,
    CouplingVector,
    InitialState,
    TwoQubitState,
    amplitudes,
    amplitudes_from_phases,
    concurrence_pair,
    concurrence_wootters,
    evolve_dense,
    reduced_density,
    reduced_hamiltonian,
    resolve_cos_exponent,
    stratum_amplitudes,
    time_series,
)
from ungas.logger import DynamicsError
from ungas.tests import BUILTINS, NumericAssertions, context


def random_couplings(zeta, rng):
    return CouplingVector.from_merged(zeta, rng.normal(size=zeta.d_prime_plus_1))


class HamiltonianTestCase(NumericAssertions, SimpleTestCase):
    def test_dihedral_6_spectrum(self):
        scheme = context("D", 6).scheme
        H = reduced_hamiltonian(scheme.A, CouplingVector([0.0, 1.0, 0.0]))
        self.assertAllClose(H, 2 * scheme.A[1])
        self.assertAllClose(np.linalg.eigvalsh(H), [-2, -2, -2, -2, 4, 4])

    def test_identity_coupling_only_shifts(self):
        scheme = context("Z", 4).scheme
        H = reduced_hamiltonian(scheme.A, CouplingVector([0.5, 0.0, 0.0, 0.0]))
        self.assertAllClose(H, np.eye(4))

    def test_dual_violation(self):
        ctx = context("Z", 6)
        couplings = CouplingVector([0.0, 1.0, 0.0, 0.0, 0.0, 0.0])
        with self.assertRaises(DynamicsError):
            reduced_hamiltonian(ctx.scheme.A, couplings)
        with self.assertRaises(DynamicsError):
            couplings.check_dual(ctx.partition.dual)
        with self.assertRaises(DynamicsError):
            reduced_hamiltonian(ctx.scheme.A, couplings, dual=ctx.partition.dual)

    def test_merged_couplings(self):
        zeta = context("Z", 6).zeta
        couplings = CouplingVector.from_merged(zeta, [0.0, 1.0, 2.0, 3.0])
        self.assertEqual(couplings.J.tolist(), [0.0, 1.0, 2.0, 3.0, 2.0, 1.0])
        self.assertEqual(couplings.merged(zeta).tolist(), [0.0, 1.0, 2.0, 3.0])


class AmplitudesTestCase(NumericAssertions, SimpleTestCase):
    def test_matches_dense_evolution(self):
        rng = np.random.default_rng(2024)
        for family, parameter in BUILTINS:
            ctx = context(family, parameter)
            for _draw in range(20):
                couplings = random_couplings(ctx.zeta, rng)
                t = float(rng.uniform(0.0, 5.0))
                with self.subTest(family=family, parameter=parameter, t=t):
                    U = evolve_dense(reduced_hamiltonian(ctx.scheme.A, couplings), t)
                    expected = stratum_amplitudes(U, ctx.scheme.strata, reference=ctx.group.identity)
                    self.assertAllClose(amplitudes(ctx.eigen, couplings, t).alpha, expected, atol=1e-10)

    def test_normalization_and_dual_strata(self):
        rng = np.random.default_rng(5)
        ctx = context("Z", 6)
        for _draw in range(10):
            couplings = random_couplings(ctx.zeta, rng)
            profile = amplitudes(ctx.eigen, couplings, float(rng.uniform(0.0, 10.0)))
            self.assertLess(profile.residual(ctx.partition.sizes), 1e-12)
            for index, dual in enumerate(ctx.partition.dual):
                self.assertAlmostEqual(profile.alpha[index], profile.alpha[dual], places=12)

    def test_normalization_on_time_grid_every_builtin(self):
        rng = np.random.default_rng(17)
        for family, parameter in BUILTINS:
            with self.subTest(family=family, parameter=parameter):
                ctx = context(family, parameter)
                couplings = random_couplings(ctx.zeta, rng)
                rows = time_series(ctx.eigen, couplings, t_max=10.0, steps=100)
                self.assertEqual(len(rows), 100)
                self.assertLess(max(row["residual"] for row in rows), 1e-12)
                for row in rows[::9]:
                    alpha = amplitudes(ctx.eigen, couplings, row["t"]).alpha
                    self.assertAllClose(alpha, alpha[list(ctx.partition.dual)], atol=1e-12)

    def test_initial_time(self):
        ctx = context("SL2", 3)
        profile = amplitudes(ctx.eigen, random_couplings(ctx.zeta, np.random.default_rng(0)), 0.0)
        self.assertAllClose(profile.alpha, np.eye(ctx.partition.count)[0])

    def test_from_phases(self):
        zeta = context("D", 6).zeta
        self.assertAllClose(amplitudes_from_phases(zeta, [0, 0, np.pi]), [-1 / 3, 2 / 3, 0])
        self.assertAllClose(amplitudes_from_phases(zeta, [0, 0, 0]), [1, 0, 0])

    def test_from_phases_normalized(self):
        rng = np.random.default_rng(11)
        for family, parameter in BUILTINS:
            with self.subTest(family=family, parameter=parameter):
                zeta = context(family, parameter).zeta
                alpha = amplitudes_from_phases(zeta, rng.uniform(0, 2 * np.pi, size=zeta.d_prime_plus_1))
                self.assertAlmostEqual(float(np.sum(zeta.merged_kappa * np.abs(alpha) ** 2)), 1.0, places=12)


class EvolutionTestCase(NumericAssertions, SimpleTestCase):
    def test_properties(self):
        ctx = context("D", 6)
        H = reduced_hamiltonian(ctx.scheme.A, CouplingVector([0.0, 0.3, -0.7]))
        self.assertAllClose(evolve_dense(H, 0.0), np.eye(6))
        U = evolve_dense(H, 1.3)
        self.assertAllClose(U @ U.conj().T, np.eye(6))
        self.assertAllClose(evolve_dense(H, 0.5) @ evolve_dense(H, 0.8), U)

    def test_non_uniform_stratum(self):
        U = np.eye(3, dtype=complex)
        with self.assertRaises(DynamicsError):
            stratum_amplitudes(U, [0, 0, 1])

    def test_time_series(self):
        ctx = context("D", 6)
        couplings = CouplingVector([0.0, 0.4, 0.1])
        rows = time_series(ctx.eigen, couplings, t_max=2.0, steps=5, pairs=[(1, 2)])
        self.assertEqual(len(rows), 5)
        self.assertEqual(sorted(rows[0]), ["C1_2", "p0", "p1", "p2", "residual", "t"])
        self.assertAlmostEqual(rows[0]["p0"], 1.0, places=12)
        self.assertEqual(rows[-1]["t"], 2.0)
        for row in rows:
            self.assertLess(row["residual"], 1e-12)
        self.assertEqual(len(time_series(ctx.eigen, couplings, t_max=0.0, steps=5)), 1)


class ConcurrenceTestCase(NumericAssertions, SimpleTestCase):
    def test_examples(self):
        f = 1 / np.sqrt(2)
        self.assertAlmostEqual(concurrence_wootters(reduced_density(OPTIMAL_STATE, f, f)), 1.0, places=10)
        self.assertAlmostEqual(concurrence_wootters(reduced_density(OPTIMAL_STATE, 0.0, 1.0)), 0.0, places=10)
        product = InitialState(theta=np.pi / 2, phi=0.0)
        self.assertAlmostEqual(concurrence_wootters(reduced_density(product, 0.5, 0.5)), 0.0, places=10)
        self.assertAlmostEqual(concurrence_wootters(reduced_density(OPTIMAL_STATE, 0.5, 0.5j)), 0.5, places=10)

    def test_density_matrix(self):
        state = reduced_density(InitialState(theta=0.4, phi=1.0), 0.3, 0.2j)
        self.assertAlmostEqual(np.trace(state.rho).real, 1.0, places=12)
        self.assertAllClose(state.rho, state.rho.conj().T)
        self.assertEqual(state.rho[3, 3], 0)

    def test_invalid_inputs(self):
        with self.assertRaises(DynamicsError):
            reduced_density(OPTIMAL_STATE, 0.9, 0.9)
        with self.assertRaises(DynamicsError):
            reduced_density(InitialState(theta=2.0, phi=0.0), 0.1, 0.1)
        with self.assertRaises(DynamicsError):
            TwoQubitState(rho=np.triu(np.ones((4, 4))) / 4).validate()
        with self.assertRaises(DynamicsError):
            TwoQubitState(rho=np.diag([1.5, -0.5, 0.0, 0.0])).validate()

    def test_theta_sweep(self):
        f, f_prime = 0.6 * np.exp(0.3j), 0.5
        for theta in np.linspace(0.0, np.pi / 2, 7):
            with self.subTest(theta=theta):
                state = InitialState(theta=float(theta), phi=0.7)
                expected = 2 * np.cos(theta) ** 2 * abs(f) * abs(f_prime)
                self.assertAlmostEqual(concurrence_wootters(reduced_density(state, f, f_prime)), expected, places=10)

    def test_closed_form_matches_wootters(self):
        rng = np.random.default_rng(42)
        for _draw in range(100):
            f, f_prime = complex(*rng.normal(size=2)), complex(*rng.normal(size=2))
            scale = np.sqrt(abs(f) ** 2 + abs(f_prime) ** 2) / rng.uniform(0.1, 1.0)
            f, f_prime = f / scale, f_prime / scale
            state = InitialState(theta=float(rng.uniform(0, np.pi / 2)), phi=float(rng.uniform(0, 2 * np.pi)))
            reference = concurrence_wootters(reduced_density(state, f, f_prime))
            self.assertLess(abs(concurrence_pair(state, f, f_prime) - reference), 1e-10)

    def test_cos_exponent(self):
        self.assertEqual(resolve_cos_exponent(), 2)
