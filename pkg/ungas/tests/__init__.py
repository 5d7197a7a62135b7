# coding: utf-8
from collections import namedtuple
from functools import lru_cache

import numpy as np

from ungas.characters import eigenmatrices
from ungas.reproduce import family_context
from ungas.scheme import build_scheme

# Groupes intégrés couverts par les tests transverses
BUILTINS = (("D", 6), ("Z", 4), ("Z", 6), ("SL2", 3), ("V", 3))

Context = namedtuple("Context", ["spec", "group", "partition", "table", "zeta", "eigen", "scheme", "report"])


@lru_cache(maxsize=None)
def context(family, parameter):
    """
    Groupe intégré, tables et schéma vérifié (mis en cache entre les tests)
    """
    base = family_context(family, parameter)
    scheme, report = build_scheme(base.group, base.partition, table=base.table)
    return Context(*base, eigen=eigenmatrices(base.table), scheme=scheme, report=report)


class NumericAssertions:
    """
    Assertions sur tableaux numpy
    """

    def assertAllClose(self, actual, expected, atol=1e-9, msg=None):
        actual, expected = np.asarray(actual), np.asarray(expected)
        self.assertEqual(actual.shape, expected.shape, msg)
        difference = float(np.abs(actual - expected).max()) if actual.size else 0.0
        self.assertLessEqual(difference, atol, msg or "écart {:.3e} > {:.1e}".format(difference, atol))

    def assertRowsMatch(self, actual, expected, atol=1e-9):
        # Égalité à permutation des lignes près
        remaining = list(range(len(expected)))
        for row in actual:
            distances = [np.abs(row - expected[index]).max() for index in remaining]
            best = int(np.argmin(distances))
            self.assertLessEqual(distances[best], atol)
            remaining.pop(best)
