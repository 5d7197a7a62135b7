# coding: utf-8
import numpy as np
from django.test import SimpleTestCase

from ungas.characters import (
    CharacterTable,
    character_table,
    character_table_numeric,
    eigenmatrices,
    family_character_table,
    intersection_numbers_by_characters,
    intersection_numbers_by_counting,
    raw_optimal_amplitude,
    verify_character_table,
    zeta_table,
)
from ungas.groups import FamilySpec, build_family, conjugacy_classes, load_table, published_class_order
from ungas.logger import CharacterTableError
from ungas.optimize import optimal_amplitude
from ungas.tests import BUILTINS, NumericAssertions, context


class CharacterTableTestCase(NumericAssertions, SimpleTestCase):
    def test_dihedral_6(self):
        table = context("D", 6).table
        self.assertEqual(table.source, "analytic")
        self.assertAllClose(table.chi, [[1, 1, 1], [1, 1, -1], [2, -1, 0]])
        self.assertEqual(table.dims.tolist(), [1, 1, 2])
        self.assertTrue(table.real)

    def test_cyclic_4(self):
        table = context("Z", 4).table
        self.assertAllClose(table.chi[2, :3], [1, 1j, -1])
        self.assertEqual(table.row_dual, (0, 1, 3, 2))
        self.assertFalse(table.real)

    def test_sl23_dimensions(self):
        table = context("SL2", 3).table
        self.assertEqual(table.dims.tolist(), [1, 1, 1, 3, 2, 2, 2])
        self.assertEqual(table.d_plus_1, 7)

    def test_numeric_matches_analytic(self):
        for family, parameter in BUILTINS:
            with self.subTest(family=family, parameter=parameter):
                ctx = context(family, parameter)
                tensor = intersection_numbers_by_counting(ctx.group, ctx.partition)
                numeric = character_table_numeric(tensor, ctx.partition.sizes, ctx.group.n, seed=7)
                self.assertEqual(numeric.source, "numeric")
                self.assertEqual(numeric.col_dual, ctx.partition.dual)
                self.assertRowsMatch(numeric.chi, ctx.table.chi, atol=1e-8)

    def test_dihedral_6_numeric_first_draw(self):
        ctx = context("D", 6)
        tensor = intersection_numbers_by_counting(ctx.group, ctx.partition)
        for seed in range(5):
            with self.subTest(seed=seed):
                numeric = character_table_numeric(tensor, ctx.partition.sizes, 6, seed=seed, attempts=1)
                self.assertEqual(sorted(numeric.dims.tolist()), [1, 1, 2])
                self.assertRowsMatch(numeric.chi, ctx.table.chi, atol=1e-8)

    def test_small_dihedral_orders(self):
        for order, classes in ((2, 2), (4, 4)):
            with self.subTest(order=order):
                spec = FamilySpec.parse("D", order)
                group = build_family(spec)
                partition = conjugacy_classes(group)
                self.assertEqual(partition.count, classes)
                table = family_character_table(spec, group, partition)
                verify_character_table(table)
                self.assertEqual(table.dims.tolist(), [1] * classes)

    def test_trivial_group(self):
        group = load_table([[0]])
        table = character_table(group, conjugacy_classes(group))
        self.assertAllClose(table.chi, [[1]])
        self.assertEqual(table.col_dual, (0,))

    def test_sl2_5_numeric(self):
        table = family_character_table(FamilySpec.parse("SL2", 5))
        self.assertEqual(table.source, "numeric")
        self.assertEqual(int(np.sum(table.dims**2)), 120)
        self.assertEqual(sorted(table.dims.tolist()), [1, 2, 2, 3, 3, 4, 4, 5, 6])

    def test_inconsistent_table(self):
        table = context("D", 6).table
        chi = table.chi.copy()
        chi[2, 1] += 0.1
        broken = table._replace(chi=chi)
        with self.assertRaises(CharacterTableError):
            verify_character_table(broken)
        wrong_dims = CharacterTable(6, table.chi, np.array([1, 1, 1]), table.kappa, (0, 1, 2), (0, 1, 2), "")
        with self.assertRaises(CharacterTableError):
            verify_character_table(wrong_dims)

    def test_inseparable_eigenvalues(self):
        ctx = context("Z", 4)
        tensor = intersection_numbers_by_counting(ctx.group, ctx.partition)
        with self.assertRaises(CharacterTableError):
            character_table_numeric(np.zeros_like(tensor), ctx.partition.sizes, 4, attempts=2)


class IntersectionNumbersTestCase(NumericAssertions, SimpleTestCase):
    def test_characters_match_counting(self):
        for family, parameter in BUILTINS:
            with self.subTest(family=family, parameter=parameter):
                ctx = context(family, parameter)
                counted = intersection_numbers_by_counting(ctx.group, ctx.partition, checks=5, seed=3)
                self.assertTrue(np.array_equal(intersection_numbers_by_characters(ctx.table), counted))

    def test_dihedral_6_values(self):
        tensor = intersection_numbers_by_characters(context("D", 6).table)
        self.assertEqual(tensor[1, 1, 0], 2)
        self.assertEqual(tensor[2, 2, 0], 3)
        self.assertEqual(tensor[1, 2, 0], 0)
        # p_ij^0 = κ_i·δ_(j, ī)
        self.assertEqual(tensor[:, :, 0].tolist(), np.diag([1, 2, 3]).tolist())

    def test_eigenmatrices(self):
        eigen = context("D", 6).eigen
        self.assertAllClose(eigen.P, [[1, 2, 3], [1, 2, -3], [1, -1, 0]])
        self.assertAllClose(eigen.Q[:, 0], np.ones(3))
        self.assertAllClose(eigen.Q[0], [1, 1, 4])
        for family, parameter in BUILTINS:
            with self.subTest(family=family, parameter=parameter):
                ctx = context(family, parameter)
                self.assertAllClose(ctx.eigen.P @ ctx.eigen.Q, ctx.group.n * np.eye(ctx.partition.count))


class ZetaTableTestCase(NumericAssertions, SimpleTestCase):
    def test_cyclic_6(self):
        zeta = context("Z", 6).zeta
        self.assertEqual(zeta.col_members, ((0,), (1, 5), (2, 4), (3,)))
        self.assertEqual(zeta.merged_kappa.tolist(), [1, 2, 2, 1])
        self.assertAllClose(zeta.zeta[2], [2, 1, -1, -2])
        self.assertAlmostEqual(zeta.zeta[2, 1], 1.0, places=12)
        self.assertEqual(zeta.real_rows, 2)
        self.assertEqual(zeta.complex_columns, 4)
        self.assertEqual(zeta.d_prime, 3)
        self.assertAllClose(zeta.xi[3], [0, np.pi / 2, np.pi / 2, 0])

    def test_sl23(self):
        ctx = context("SL2", 3)
        zeta = ctx.zeta
        order = published_class_order(ctx.spec, ctx.group, ctx.partition)
        g3 = zeta.stratum_of(order[3])
        self.assertEqual(zeta.stratum_of(order[4]), g3)
        self.assertAlmostEqual(zeta.zeta[zeta.row_members.index((4, 5)), g3], 1.0, places=12)
        self.assertAlmostEqual(zeta.zeta[zeta.row_members.index((1, 2)), g3], -1.0, places=12)
        self.assertEqual(zeta.d_prime_plus_1, 5)

    def test_real_group_unchanged(self):
        ctx = context("D", 6)
        self.assertAllClose(ctx.zeta.zeta, ctx.table.chi.real)
        self.assertAllClose(ctx.zeta.P, ctx.eigen.P.real)

    def test_merged_duality(self):
        for family, parameter in BUILTINS:
            with self.subTest(family=family, parameter=parameter):
                zeta = context(family, parameter).zeta
                self.assertAllClose(zeta.P @ zeta.Q, zeta.n * np.eye(zeta.d_prime_plus_1))
                self.assertEqual(int(zeta.merged_kappa.sum()), zeta.n)

    def test_stratum_of_unknown(self):
        with self.assertRaises(CharacterTableError):
            context("D", 6).zeta.stratum_of(9)

    def test_raw_optimal_amplitude(self):
        for family, parameter in BUILTINS:
            with self.subTest(family=family, parameter=parameter):
                ctx = context(family, parameter)
                for class_index in range(ctx.partition.count):
                    stratum = ctx.zeta.stratum_of(class_index)
                    self.assertAlmostEqual(
                        raw_optimal_amplitude(ctx.table, class_index), optimal_amplitude(ctx.zeta, stratum), places=12
                    )

    def test_sl2_5_zeta(self):
        spec = FamilySpec.parse("SL2", 5)
        group = build_family(spec)
        table = family_character_table(spec, group)
        zeta = zeta_table(table)
        self.assertAllClose(eigenmatrices(table).P[0], conjugacy_classes(group).sizes)
        self.assertEqual(int(zeta.merged_kappa.sum()), 120)
