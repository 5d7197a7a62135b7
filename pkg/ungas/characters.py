# coding: utf-8
"""
Tables de caractères (analytiques pour les familles intégrées, numériques par la méthode de Burnside),
nombres d'intersection, matrices propres P et Q, et table ζ réelle obtenue par fusion des lignes et
colonnes conjuguées.
"""
import logging
from collections import namedtuple

import numpy as np
from django.utils.translation import gettext_lazy as _

from ungas.groups import CYCLIC, DIHEDRAL, SL2, V8K, build_family, conjugacy_classes, published_class_order
from ungas.logger import CharacterTableError
from ungas.settings import settings
from ungas.utils import _assert, timeit

# Logging
logger = logging.getLogger(__name__)


class CharacterTable(namedtuple("CharacterTable", ["n", "chi", "dims", "kappa", "row_dual", "col_dual", "source"])):
    """
    Table de caractères : chi[l, m] = χ_l(g_m), ligne = irréductible, colonne = classe
    """

    __slots__ = ()

    @property
    def d_plus_1(self):
        return len(self.kappa)

    @property
    def real(self):
        return all(index == dual for index, dual in enumerate(self.row_dual))


EigenMatrices = namedtuple("EigenMatrices", ["P", "Q"])


class ZetaTable(
    namedtuple(
        "ZetaTable",
        ["n", "zeta", "dims", "merged_kappa", "col_members", "row_members", "xi", "P", "real_rows", "complex_columns"],
    )
):
    """
    Table ζ réelle et carrée : zeta[l, m] = ζ_l(m) sur les lignes conservées et les colonnes fusionnées,
    xi[m, l] = ξ_ml ∈ {0, π/2} et P[l, k] = matrice propre fusionnée (θ = -2t·P·J)
    """

    __slots__ = ()

    @property
    def d_prime_plus_1(self):
        return len(self.merged_kappa)

    @property
    def d_prime(self):
        return self.d_prime_plus_1 - 1

    @property
    def Q(self):
        # Q'[m, l] = d_l·ζ_l(m), avec P'·Q' = n·I
        return (self.zeta * self.dims[:, None]).T

    def stratum_of(self, class_index):
        """
        Indice de la strate fusionnée contenant une classe de conjugaison
        """
        for index, members in enumerate(self.col_members):
            if class_index in members:
                return index
        raise CharacterTableError(_("Classe inconnue : {}.").format(class_index))


def intersection_numbers_by_counting(group, partition, checks=None, seed=0):
    """
    Nombres d'intersection p_ij^k par dénombrement direct sur les relations R_i = {(α, β) : αβ⁻¹ ∈ C_i}
    :param group: GroupTable
    :param partition: ConjugacyPartition
    :param checks: Nombre de couples (α, β) supplémentaires tirés par classe k pour vérifier l'indépendance
    :param seed: Graine du tirage
    :return: Tenseur entier p[i, j, k]
    """
    checks = settings.UNGAS_COUNTING_CHECKS if checks is None else checks
    size = partition.count
    class_of = np.asarray(partition.class_of)
    gammas = np.arange(group.n)
    rng = np.random.default_rng(seed)

    def count(alpha, beta):
        counts = np.zeros((size, size), dtype=np.int64)
        np.add.at(counts, (class_of[group.mul[alpha, group.inv]], class_of[group.mul[gammas, group.inv[beta]]]), 1)
        return counts

    tensor = np.zeros((size, size, size), dtype=np.int64)
    for k, members in enumerate(partition.classes):
        tensor[:, :, k] = count(partition.representatives[k], group.identity)
        for _check in range(checks):
            beta = int(rng.integers(group.n))
            alpha = int(group.mul[members[int(rng.integers(len(members)))], beta])
            _assert(
                np.array_equal(count(alpha, beta), tensor[:, :, k]),
                _("Les nombres d'intersection dépendent du couple (α, β) = ({}, {}) pour k = {}.").format(
                    alpha, beta, k
                ),
                CharacterTableError,
                pair=(alpha, beta),
                k=k,
            )
    return tensor


def _cyclic_characters(n, representatives):
    # Lignes : triviale, signe (n pair), puis couples conjugués (h, n - h)
    rows = [0] + ([n // 2] if n % 2 == 0 else [])
    for h in range(1, (n + 1) // 2):
        rows += [h, n - h]
    elements = np.array(representatives)
    return np.exp(2j * np.pi * np.outer(rows, elements) / n)


def _dihedral_characters(order, representatives):
    s = order // 2
    reflection, rotation = np.divmod(np.array(representatives), s)
    signs = [(1, 1), (1, -1)] if s % 2 else [(1, 1), (1, -1), (-1, 1), (-1, -1)]
    rows = [np.power(float(sa), rotation) * np.power(float(sb), reflection) for sa, sb in signs]
    for h in range(1, (s + 1) // 2):
        rows.append(np.where(reflection == 0, 2 * np.cos(2 * np.pi * h * rotation / s), 0.0))
    return np.array(rows, dtype=complex)


def _v8k_characters(k, representatives):
    # a^r·b^s = c^x·q^e·b^s avec c = a^2 (ordre k), q = a^k, x = r(k+1)/2 mod k, e = r mod 2
    power, rotation = np.divmod(np.array(representatives), 2 * k)
    parity = rotation % 2
    x = (rotation * ((k + 1) // 2)) % k
    even = power % 2 == 0
    sign = np.where(power == 2, -1.0, 1.0)
    root = np.exp(2j * np.pi * x / k)
    rows = [np.power(float(e1), parity) * np.power(float(e2), power) for e1, e2 in ((1, 1), (1, -1), (-1, 1), (-1, -1))]
    rows.append(np.where(even & (parity == 0), 2 * sign, 0.0))
    half = (k - 1) // 2
    # Induites depuis <c>×<q, b^2> avec b^2 ↦ -1 (couples conjugués η, -η)
    for j in range(1, half + 1):
        for eta in (1.0, -1.0):
            value = np.power(eta, parity) * sign * (root**j + np.power(-1.0, parity) * root ** (-j))
            rows.append(np.where(even, value, 0.0))
    # Induites avec b^2 ↦ 1 (réelles)
    for j in range(1, half + 1):
        for eta in (1.0, -1.0):
            rows.append(np.where(even, np.power(eta, parity) * (root**j + root ** (-j)), 0.0))
    return np.array(rows, dtype=complex)


def _sl23_characters(order):
    # Table publiée, colonnes e, -I, g2 (ordre 4), g3, g4 (ordre 3), g5, g6 (ordre 6)
    w = np.exp(2j * np.pi / 3)
    w2 = w * w
    table = np.array(
        [
            [1, 1, 1, 1, 1, 1, 1],
            [1, 1, 1, w, w2, w2, w],
            [1, 1, 1, w2, w, w, w2],
            [3, 3, -1, 0, 0, 0, 0],
            [2, -2, 0, -w2, -w, w, w2],
            [2, -2, 0, -w, -w2, w2, w],
            [2, -2, 0, -1, -1, 1, 1],
        ],
        dtype=complex,
    )
    chi = np.empty_like(table)
    chi[:, order] = table
    return chi


def _row_duals(chi, tolerance):
    duals = []
    for row in chi:
        matches = np.flatnonzero(np.all(np.abs(chi - np.conj(row)) <= tolerance, axis=1))
        _assert(len(matches) == 1, _("Caractère conjugué introuvable."), CharacterTableError, row=row.tolist())
        duals.append(int(matches[0]))
    return tuple(duals)


def _make_table(n, chi, kappa, col_dual, source):
    tolerance = settings.UNGAS_VERIFY_TOLERANCE
    chi = np.asarray(chi, dtype=complex)
    dims = np.rint(chi[:, 0].real).astype(np.int64)
    table = CharacterTable(
        n=n,
        chi=chi,
        dims=dims,
        kappa=np.asarray(kappa, dtype=np.int64),
        row_dual=_row_duals(chi, 1e3 * tolerance),
        col_dual=tuple(col_dual),
        source=source,
    )
    verify_character_table(table)
    return table


def verify_character_table(table):
    """
    Vérifie les relations d'orthogonalité, la somme des carrés des dimensions et la dualité des colonnes
    :param table: CharacterTable
    :return: Résidu maximal
    """
    tolerance = settings.UNGAS_VERIFY_TOLERANCE
    chi, kappa, n = table.chi, table.kappa, table.n
    columns = chi.T @ np.conj(chi) - np.diag(n / kappa)
    rows = (chi * kappa[None, :]) @ np.conj(chi).T - n * np.eye(table.d_plus_1)
    duality = chi[:, list(table.col_dual)] - np.conj(chi)
    residual = max(np.abs(columns).max(), np.abs(rows).max(), np.abs(duality).max())
    _assert(
        residual <= tolerance,
        _("Table de caractères incohérente (résidu {:.3e}).").format(residual),
        CharacterTableError,
        residual=residual,
    )
    _assert(
        int(np.sum(table.dims**2)) == n,
        _("La somme des carrés des dimensions vaut {} au lieu de {}.").format(int(np.sum(table.dims**2)), n),
        CharacterTableError,
    )
    return residual


def family_character_table(spec, group=None, partition=None):
    """
    Table de caractères analytique d'une famille intégrée, colonnes dans l'ordre des classes de la bibliothèque
    :param spec: FamilySpec
    :param group: GroupTable (construit depuis spec si absent)
    :param partition: ConjugacyPartition (calculée si absente)
    :return: CharacterTable
    """
    group = group or build_family(spec)
    partition = partition or conjugacy_classes(group)
    representatives = partition.representatives
    if spec.family == CYCLIC:
        chi = _cyclic_characters(spec.parameter, representatives)
    elif spec.family == DIHEDRAL:
        chi = _dihedral_characters(spec.parameter, representatives)
    elif spec.family == V8K:
        chi = _v8k_characters(spec.parameter, representatives)
    elif spec.family == SL2 and spec.parameter == 3:
        chi = _sl23_characters(published_class_order(spec, group, partition))
    else:
        logger.info(_("Pas de table analytique pour {}, calcul numérique.").format(spec.label))
        tensor = intersection_numbers_by_counting(group, partition)
        return character_table_numeric(tensor, partition.sizes, group.n)
    return _make_table(group.n, chi, partition.sizes, partition.dual, source="analytic")


@timeit("character_table_numeric", log=logger.debug)
def character_table_numeric(tensor, kappa, n, seed=None, attempts=None):
    """
    Table de caractères par la méthode de Burnside : vecteurs propres communs des matrices de classes
    (M_i)[j, k] = p_ij^k, séparés par une combinaison linéaire aléatoire
    :param tensor: Tenseur des nombres d'intersection
    :param kappa: Tailles des classes
    :param n: Ordre du groupe
    :param seed: Graine de la combinaison aléatoire
    :param attempts: Nombre maximal de tirages
    :return: CharacterTable
    """
    seed = settings.UNGAS_EIGEN_SEED if seed is None else seed
    attempts = attempts or settings.UNGAS_EIGEN_ATTEMPTS
    tensor = np.asarray(tensor, dtype=float)
    kappa = np.asarray(kappa, dtype=float)
    size = len(kappa)
    rng = np.random.default_rng(seed)
    for attempt in range(attempts):
        values, vectors = np.linalg.eig(np.tensordot(rng.standard_normal(size), tensor, axes=1))
        gaps = np.abs(values[:, None] - values[None, :])
        np.fill_diagonal(gaps, np.inf)
        if size == 1 or gaps.min() > settings.UNGAS_EIGEN_SEPARATION:
            break
        logger.debug(_("Valeurs propres confondues (tentative {}), nouveau tirage.").format(attempt + 1))
    else:
        raise CharacterTableError(
            _("Impossible de séparer les valeurs propres après {} tirages.").format(attempts), attempts=attempts
        )
    # Caractères centraux ω_l(K_m) normalisés par ω_l(K_0) = 1
    omegas = (vectors / vectors[0, :]).T
    dims = np.sqrt(n / np.sum(np.abs(omegas) ** 2 / kappa[None, :], axis=1))
    rounded = np.rint(dims)
    _assert(
        np.abs(dims - rounded).max() <= settings.UNGAS_INTEGRALITY_TOLERANCE,
        _("Dimension non entière : {}.").format(dims.tolist()),
        CharacterTableError,
        dims=dims.tolist(),
    )
    chi = rounded[:, None] * omegas / kappa[None, :]
    order = sorted(
        range(size),
        key=lambda l: (rounded[l], tuple(np.round(-chi[l].real, 9)), tuple(np.round(-chi[l].imag, 9))),
    )
    # Classe duale : p_ij^0 > 0 si et seulement si j = ī
    col_dual = [int(np.flatnonzero(tensor[i, :, 0])[0]) for i in range(size)]
    return _make_table(n, chi[order], kappa.astype(np.int64), col_dual, source="numeric")


def character_table(group, partition, spec=None):
    """
    Table de caractères d'un groupe : analytique si la famille est connue, numérique sinon
    """
    if spec is not None:
        return family_character_table(spec, group, partition)
    tensor = intersection_numbers_by_counting(group, partition)
    return character_table_numeric(tensor, partition.sizes, group.n)


def eigenmatrices(table):
    """
    Matrices propres : P_ij = κ_j·χ_i(g_j)/d_i et Q_ij = d_j·conj(χ_j(g_i)), avec PQ = QP = nI
    :param table: CharacterTable
    :return: EigenMatrices
    """
    P = table.kappa[None, :] * table.chi / table.dims[:, None]
    Q = (np.conj(table.chi) * table.dims[:, None]).T
    identity = table.n * np.eye(table.d_plus_1)
    residuals = np.maximum(np.abs(P @ Q - identity), np.abs(Q @ P - identity))
    worst = np.unravel_index(np.argmax(residuals), residuals.shape)
    _assert(
        residuals[worst] <= settings.UNGAS_VERIFY_TOLERANCE,
        _("Dualité PQ = nI violée en {} (résidu {:.3e}).").format(tuple(int(i) for i in worst), residuals[worst]),
        CharacterTableError,
        entry=worst,
        residual=float(residuals[worst]),
    )
    return EigenMatrices(P=P, Q=Q)


def intersection_numbers_by_characters(table):
    """
    Nombres d'intersection depuis les caractères :
    p_ij^k = (κ_i·κ_j/n)·Σ_m χ_m(g_i)·χ_m(g_j)·conj(χ_m(g_k))/d_m
    :param table: CharacterTable
    :return: Tenseur entier p[i, j, k]
    """
    chi, kappa = table.chi, table.kappa.astype(float)
    values = np.einsum("mi,mj,mk,m->ijk", chi, chi, np.conj(chi), 1.0 / table.dims)
    values *= (kappa[:, None, None] * kappa[None, :, None]) / table.n
    rounded = np.rint(values.real)
    residual = np.abs(values - rounded).max()
    _assert(
        residual <= settings.UNGAS_INTEGRALITY_TOLERANCE and rounded.min() >= 0,
        _("Nombres d'intersection non entiers ou négatifs (résidu {:.3e}).").format(residual),
        CharacterTableError,
        residual=float(residual),
    )
    return rounded.astype(np.int64)


def zeta_table(table):
    """
    Table ζ : les lignes conjuguées sont sommées (ζ_l = χ_l + χ_l̄), les colonnes duales fusionnées,
    le plus petit indice de chaque paire représentant la paire
    :param table: CharacterTable
    :return: ZetaTable
    """
    tolerance = settings.UNGAS_VERIFY_TOLERANCE
    chi, kappa = table.chi, table.kappa
    rows = [l for l in range(table.d_plus_1) if table.row_dual[l] >= l]
    columns = [m for m in range(table.d_plus_1) if table.col_dual[m] >= m]
    row_members = tuple(tuple(sorted({l, table.row_dual[l]})) for l in rows)
    col_members = tuple(tuple(sorted({m, table.col_dual[m]})) for m in columns)
    raw = np.array([chi[list(members)].sum(axis=0)[columns] for members in row_members])
    dims = table.dims[rows]
    # P'[l, k] = Σ_{k' ∈ k} κ_k'·χ_l(g_k')/d_l
    eigen = np.array(
        [[sum(kappa[m] * chi[l, m] for m in members) for members in col_members] for l in rows]
    ) / dims[:, None]
    residual = max(np.abs(raw.imag).max(), np.abs(eigen.imag).max())
    _assert(
        residual <= tolerance,
        _("Table ζ non réelle (partie imaginaire {:.3e}).").format(residual),
        CharacterTableError,
        residual=float(residual),
    )
    _assert(
        len(rows) == len(columns),
        _("Table ζ non carrée ({} lignes, {} colonnes).").format(len(rows), len(columns)),
        CharacterTableError,
    )
    zeta = raw.real
    result = ZetaTable(
        n=table.n,
        zeta=zeta,
        dims=dims,
        merged_kappa=np.array([sum(kappa[m] for m in members) for members in col_members], dtype=np.int64),
        col_members=col_members,
        row_members=row_members,
        xi=np.where(zeta.T < 0, np.pi / 2, 0.0),
        P=eigen.real,
        real_rows=sum(1 for members in row_members if len(members) == 1),
        complex_columns=sum(len(members) for members in col_members if len(members) == 2),
    )
    duality = np.abs(result.P @ result.Q - table.n * np.eye(len(rows))).max()
    _assert(
        duality <= tolerance * table.n,
        _("Dualité de la table ζ violée (résidu {:.3e}).").format(duality),
        CharacterTableError,
        residual=float(duality),
    )
    if result.complex_columns:
        logger.debug(
            _("Table ζ : d' = {} ({} colonnes complexes, d + 1 - I/2 = {}).").format(
                result.d_prime, result.complex_columns, table.d_plus_1 - result.complex_columns // 2
            )
        )
    return result


def raw_optimal_amplitude(table, m):
    """
    Optimum |α_m| évalué directement sur la table brute : d·|χ| par ligne réelle,
    d·|χ + conj(χ)| une fois par couple de lignes conjuguées
    :param table: CharacterTable
    :param m: Indice de classe
    :return: |α_m|_opt
    """
    total = 0.0
    for l in range(table.d_plus_1):
        dual = table.row_dual[l]
        if dual == l:
            total += table.dims[l] * abs(table.chi[l, m])
        elif l < dual:
            total += table.dims[l] * abs(table.chi[l, m] + np.conj(table.chi[l, m]))
    return total / table.n
