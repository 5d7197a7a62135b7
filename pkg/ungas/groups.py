# coding: utf-8
"""
Groupes finis donnés par leur table de multiplication explicite : familles intégrées
(cyclique, diédrale, V8k, SL(2,p)), chargement d'une table quelconque, classes de conjugaison
et structure duale (classe des inverses).
"""
import itertools
import logging
from collections import namedtuple

import numpy as np
from django.utils.translation import gettext_lazy as _

from ungas.logger import GroupTableError
from ungas.settings import settings
from ungas.utils import _assert, timeit

# Logging
logger = logging.getLogger(__name__)

# Familles intégrées
CYCLIC = "cyclic"
DIHEDRAL = "dihedral"
V8K = "v8k"
SL2 = "sl2"
FAMILIES = (CYCLIC, DIHEDRAL, V8K, SL2)
FAMILY_ALIASES = {
    "z": CYCLIC,
    "c": CYCLIC,
    "cyclic": CYCLIC,
    "d": DIHEDRAL,
    "dihedral": DIHEDRAL,
    "v": V8K,
    "v8k": V8K,
    "sl2": SL2,
    "sl": SL2,
}


def is_prime(value):
    """
    Test de primalité par divisions successives (suffisant aux ordres manipulés)
    :param value: Entier
    :return: Vrai si premier
    """
    if value < 2:
        return False
    return all(value % divisor for divisor in range(2, int(value**0.5) + 1))


def _freeze(array):
    array.setflags(write=False)
    return array


class FamilySpec(namedtuple("FamilySpec", ["family", "parameter"])):
    """
    Famille de groupes intégrée et son paramètre :
    Cyclic(n), Dihedral(2s) (paramètre = ordre), V8k(k impair), SL2(p premier)
    """

    __slots__ = ()

    @classmethod
    def parse(cls, family, parameter):
        """
        Construit la spécification depuis un nom de famille (ou un alias) et un paramètre
        :param family: Nom ou alias ("Z", "D", "V", "SL2"...)
        :param parameter: Paramètre entier
        :return: FamilySpec validée
        """
        key = str(family).strip().lower().replace("(", "").replace(")", "").replace("_", "")
        _assert(
            key in FAMILY_ALIASES,
            _("Famille de groupes inconnue : {} (familles : {}).").format(family, ", ".join(FAMILIES)),
            GroupTableError,
            family=family,
        )
        try:
            parameter = int(parameter)
        except (TypeError, ValueError):
            raise GroupTableError(_("Le paramètre de famille doit être entier : {}.").format(parameter))
        spec = cls(FAMILY_ALIASES[key], parameter)
        spec.validate()
        return spec

    def validate(self):
        family, value = self
        if family == CYCLIC:
            _assert(value >= 1, _("Z(n) exige n >= 1 (reçu {}).").format(value), GroupTableError, spec=self)
        elif family == DIHEDRAL:
            _assert(
                value >= 2 and value % 2 == 0,
                _("D(2s) attend l'ordre pair du groupe, au moins 2 (reçu {}).").format(value),
                GroupTableError,
                spec=self,
            )
        elif family == V8K:
            _assert(
                value >= 1 and value % 2 == 1,
                _("V8k n'est défini que pour k impair (reçu k = {}).").format(value),
                GroupTableError,
                spec=self,
            )
        elif family == SL2:
            _assert(
                is_prime(value), _("SL(2,p) exige p premier (reçu p = {}).").format(value), GroupTableError, spec=self
            )
        else:
            raise GroupTableError(_("Famille de groupes inconnue : {}.").format(family), spec=self)
        _assert(
            self.order <= settings.UNGAS_MAX_ORDER,
            _("Ordre {} au-delà de la limite de {} éléments.").format(self.order, settings.UNGAS_MAX_ORDER),
            GroupTableError,
            spec=self,
        )

    @property
    def order(self):
        family, value = self
        if family == V8K:
            return 8 * value
        if family == SL2:
            return value * (value * value - 1)
        return value

    @property
    def label(self):
        family, value = self
        return {
            CYCLIC: "Z{}".format(value),
            DIHEDRAL: "D{}".format(value),
            V8K: "V{}".format(8 * value),
            SL2: "SL(2,{})".format(value),
        }[family]


class GroupTable(namedtuple("GroupTable", ["n", "mul", "identity", "inv", "labels", "name"])):
    """
    Groupe fini sous forme de table de multiplication : mul[x][y] = x·y
    """

    __slots__ = ()

    def order_of(self, element):
        """
        Ordre d'un élément
        """
        order, current = 1, element
        while current != self.identity:
            current = int(self.mul[current, element])
            order += 1
        return order

    def index(self, label):
        """
        Indice d'un élément d'après son libellé
        """
        try:
            return self.labels.index(label)
        except ValueError:
            raise GroupTableError(_("Élément inconnu dans {} : {}.").format(self.name, label))

    def as_dict(self):
        """
        Document {n, table, labels, name} relu par load_table et le fichier --table
        """
        return dict(n=self.n, table=self.mul.tolist(), labels=list(self.labels), name=self.name)


class ConjugacyPartition(
    namedtuple("ConjugacyPartition", ["classes", "class_of", "representatives", "sizes", "dual"])
):
    """
    Partition d'un groupe en classes de conjugaison, classe 0 = {identité}
    """

    __slots__ = ()

    @property
    def count(self):
        return len(self.classes)

    @property
    def ambivalent(self):
        return all(index == dual for index, dual in enumerate(self.dual))


# Constructions des familles, chacune renvoie (table, libellés)


def _cyclic(n):
    elements = np.arange(n)
    labels = ["e"] + ["a" if j == 1 else "a^{}".format(j) for j in range(1, n)]
    return np.add.outer(elements, elements) % n, labels


def _dihedral(order):
    # Ordre canonique : a^0..a^(s-1), puis b·a^0..b·a^(s-1) ; indice = f·s + j pour b^f·a^j
    s = order // 2
    elements = np.arange(order)
    f, j = np.divmod(elements, s)
    f1, f2 = f[:, None], f[None, :]
    j1, j2 = j[:, None], j[None, :]
    # a^j·b = b·a^-j
    rotation = (np.where(f2 == 1, -j1, j1) + j2) % s
    reflection = (f1 + f2) % 2
    labels = [_word(("b", fb), ("a", ja)) for fb, ja in zip(f, j)]
    return reflection * s + rotation, labels


def _v8k(k):
    # Ordre canonique a^r·b^s avec indice = s·2k + r ; b·a^r = a^-r·b^(1+2r) et b^2 central
    m = 2 * k
    elements = np.arange(8 * k)
    s, r = np.divmod(elements, m)
    s1, s2 = s[:, None], s[None, :]
    r1, r2 = r[:, None], r[None, :]
    odd = s1 % 2 == 1
    rotation = np.where(odd, r1 - r2, r1 + r2) % m
    power = np.where(odd, s1 + 2 * r2 + s2, s1 + s2) % 4
    labels = [_word(("a", ra), ("b", sb)) for sb, ra in zip(s, r)]
    return power * m + rotation, labels


def v8k_index(k, rotation, power):
    return (power % 4) * 2 * k + rotation % (2 * k)


def _sl2_elements(p):
    # Identité en tête, puis ordre lexicographique (a, b, c, d) des matrices de déterminant 1
    identity = (1, 0, 0, 1)
    others = [
        matrix
        for matrix in itertools.product(range(p), repeat=4)
        if (matrix[0] * matrix[3] - matrix[1] * matrix[2]) % p == 1 and matrix != identity
    ]
    return [identity] + others


def _sl2(p):
    elements = np.array(_sl2_elements(p), dtype=np.int64)
    a, b, c, d = (elements[:, i] for i in range(4))
    lookup = np.full(p**4, -1, dtype=np.int64)
    lookup[((a * p + b) * p + c) * p + d] = np.arange(len(elements))
    pa = (a[:, None] * a[None, :] + b[:, None] * c[None, :]) % p
    pb = (a[:, None] * b[None, :] + b[:, None] * d[None, :]) % p
    pc = (c[:, None] * a[None, :] + d[:, None] * c[None, :]) % p
    pd = (c[:, None] * b[None, :] + d[:, None] * d[None, :]) % p
    labels = ["[[{},{}],[{},{}]]".format(*matrix) for matrix in elements.tolist()]
    return lookup[((pa * p + pb) * p + pc) * p + pd], labels


def sl2_index(p, matrix):
    return _sl2_elements(p).index(tuple(value % p for value in matrix))


def _word(*factors):
    word = "".join(
        symbol if exponent == 1 else "{}^{}".format(symbol, exponent) for symbol, exponent in factors if exponent
    )
    return word or "e"


@timeit("build_family", log=logger.debug)
def build_family(spec):
    """
    Construit un groupe d'une famille intégrée, l'élément 0 est l'identité
    :param spec: FamilySpec (ou couple (famille, paramètre))
    :return: GroupTable vérifiée
    """
    if not isinstance(spec, FamilySpec):
        spec = FamilySpec.parse(*spec)
    spec.validate()
    builder = {CYCLIC: _cyclic, DIHEDRAL: _dihedral, V8K: _v8k, SL2: _sl2}[spec.family]
    mul, labels = builder(spec.parameter)
    group = _make_group(np.asarray(mul, dtype=np.int64), labels=labels, name=spec.label)
    logger.debug(_("Groupe {} construit ({} éléments).").format(spec.label, group.n))
    return group


def load_table(raw, name="table", labels=None):
    """
    Charge une table de multiplication quelconque et vérifie les axiomes de groupe
    :param raw: Table carrée n×n d'indices dans [0, n)
    :param name: Nom du groupe
    :param labels: Libellés des éléments (indices par défaut)
    :return: GroupTable vérifiée
    """
    try:
        mul = np.array(raw, dtype=np.int64)
    except (TypeError, ValueError):
        raise GroupTableError(_("La table n'est pas une matrice d'entiers."))
    _assert(
        mul.ndim == 2 and mul.shape[0] == mul.shape[1] and mul.shape[0] > 0,
        _("La table n'est pas carrée (dimensions {}).").format(mul.shape),
        GroupTableError,
        shape=mul.shape,
    )
    return _make_group(mul, labels=labels, name=name)


def _make_group(mul, labels=None, name="table"):
    n = mul.shape[0]
    elements = np.arange(n)
    bad = np.argwhere((mul < 0) | (mul >= n))
    _assert(
        not len(bad),
        _("Entrée hors de [0, {}) en position {}.").format(n, bad[0].tolist() if len(bad) else None),
        GroupTableError,
    )
    for axis, kind in ((1, _("ligne")), (0, _("colonne"))):
        expected = elements if axis else elements[:, None]
        invalid = np.flatnonzero(np.any(np.sort(mul, axis=axis) != expected, axis=axis))
        _assert(
            not len(invalid),
            _("Pas un carré latin : la {} {} n'est pas une permutation.").format(
                kind, invalid[0] if len(invalid) else None
            ),
            GroupTableError,
        )
    identities = [e for e in range(n) if np.array_equal(mul[e], elements) and np.array_equal(mul[:, e], elements)]
    _assert(identities, _("Aucun élément neutre dans la table."), GroupTableError)
    identity = identities[0]
    inv = np.argmax(mul == identity, axis=1)
    missing = np.flatnonzero(mul[inv, elements] != identity)
    _assert(
        not len(missing),
        _("L'élément {} n'a pas d'inverse bilatère.").format(missing[0] if len(missing) else None),
        GroupTableError,
    )
    _check_associativity(mul)
    labels = list(labels) if labels is not None else [str(x) for x in range(n)]
    return GroupTable(n=n, mul=_freeze(mul), identity=identity, inv=_freeze(inv), labels=labels, name=name)


def _check_associativity(mul, seed=0):
    # Exhaustif jusqu'à la limite configurée, par tirage de triplets au-delà
    n = mul.shape[0]
    if n <= settings.UNGAS_ASSOCIATIVITY_EXHAUSTIVE_LIMIT:
        elements = np.arange(n)
        left = mul[mul[:, :, None], elements[None, None, :]]
        right = mul[elements[:, None, None], mul[None, :, :]]
        failures = np.argwhere(left != right)
        triple = failures[0].tolist() if len(failures) else None
    else:
        rng = np.random.default_rng(seed)
        a, b, c = rng.integers(0, n, size=(3, settings.UNGAS_ASSOCIATIVITY_SAMPLES_FACTOR * n * n))
        failures = np.flatnonzero(mul[mul[a, b], c] != mul[a, mul[b, c]])
        triple = [int(a[failures[0]]), int(b[failures[0]]), int(c[failures[0]])] if len(failures) else None
    _assert(
        triple is None,
        _("Associativité violée pour le triplet (a, b, c) = {}.").format(triple),
        GroupTableError,
        triple=triple,
    )


def conjugacy_classes(group):
    """
    Classes de conjugaison : identité en premier, puis par (taille, plus petit représentant)
    :param group: GroupTable
    :return: ConjugacyPartition
    """
    n = group.n
    seen = np.zeros(n, dtype=bool)
    orbits = []
    for x in range(n):
        if seen[x]:
            continue
        # h·x·h^-1 pour tout h
        orbit = np.unique(group.mul[group.mul[:, x], group.inv])
        seen[orbit] = True
        orbits.append(tuple(int(element) for element in orbit))
    orbits.sort(key=lambda orbit: (group.identity not in orbit, len(orbit), orbit[0]))
    class_of = np.empty(n, dtype=np.int64)
    for index, orbit in enumerate(orbits):
        class_of[list(orbit)] = index
    partition = ConjugacyPartition(
        classes=tuple(orbits),
        class_of=_freeze(class_of),
        representatives=tuple(orbit[0] for orbit in orbits),
        sizes=tuple(len(orbit) for orbit in orbits),
        dual=(),
    )
    partition = partition._replace(dual=inverse_class_map(group, partition))
    _assert(sum(partition.sizes) == n, _("Équation des classes violée."), GroupTableError)
    return partition


def inverse_class_map(group, partition):
    """
    Classe duale : i ↦ ī où ī contient les inverses des éléments de la classe i
    :param group: GroupTable
    :param partition: ConjugacyPartition
    :return: Tuple des indices de classes duales
    """
    dual = tuple(int(partition.class_of[group.inv[rep]]) for rep in partition.representatives)
    _assert(
        all(dual[dual[i]] == i for i in range(len(dual))) and dual[0] == 0,
        _("L'application duale n'est pas une involution."),
        GroupTableError,
        dual=dual,
    )
    return dual


def published_class_order(spec, group, partition):
    """
    Indices des classes dans l'ordre des colonnes des tables publiées pour chaque famille
    (e, b^2, a^(2r+1), a^(2s), a^(2s)b^2, b, ab pour V8k ; e, -I, g2..g6 pour SL(2,3) ;
    ordre de la bibliothèque pour les familles cyclique et diédrale)
    :param spec: FamilySpec du groupe
    :param group: GroupTable construit depuis spec
    :param partition: ConjugacyPartition du groupe
    :return: Liste d'indices de classes
    """
    class_of = partition.class_of
    if spec.family == V8K:
        k = spec.parameter
        words = [(0, 0), (0, 2)]
        words += [(2 * r + 1, 0) for r in range(k)]
        words += [(2 * s, 0) for s in range(1, (k + 1) // 2)]
        words += [(2 * s, 2) for s in range(1, (k + 1) // 2)]
        words += [(0, 1), (1, 1)]
        return [int(class_of[v8k_index(k, r, s)]) for r, s in words]
    if spec.family == SL2 and spec.parameter == 3:
        unipotent = int(class_of[sl2_index(3, (1, 1, 0, 1))])
        shifted = int(class_of[sl2_index(3, (2, 2, 0, 2))])
        central = int(class_of[sl2_index(3, (2, 0, 0, 2))])
        order_four = partition.sizes.index(6)
        return [0, central, order_four, unipotent, partition.dual[unipotent], partition.dual[shifted], shifted]
    return list(range(partition.count))
