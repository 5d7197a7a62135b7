# coding: utf-8
"""
Schéma d'association d'un groupe : matrices d'adjacence des relations R_i = {(α, β) : αβ⁻¹ ∈ C_i},
idempotents primitifs, stratification depuis l'identité et vérification des axiomes.
"""
import logging
from collections import namedtuple

import numpy as np
from django.utils.translation import gettext_lazy as _

from ungas.characters import character_table, eigenmatrices, intersection_numbers_by_characters
from ungas.characters import intersection_numbers_by_counting
from ungas.groups import conjugacy_classes
from ungas.logger import SchemeError
from ungas.settings import settings
from ungas.utils import _assert

# Logging
logger = logging.getLogger(__name__)


SchemeData = namedtuple(
    "SchemeData", ["n", "d_plus_1", "A", "E", "strata", "P", "Q", "intersections", "table", "partition"]
)

AxiomReport = namedtuple(
    "AxiomReport", ["partition", "diagonal", "transpose_closed", "symmetric", "constant_counts", "residuals"]
)


def adjacency_matrices(group, partition):
    """
    Matrices d'adjacence : (A_i)[α, β] = 1 si et seulement si α·β⁻¹ ∈ C_i
    :param group: GroupTable
    :param partition: ConjugacyPartition
    :return: Tableau entier de forme (d + 1, n, n)
    """
    relation = np.asarray(partition.class_of)[group.mul[:, group.inv]]
    return (relation[None, :, :] == np.arange(partition.count)[:, None, None]).astype(np.int64)


def bose_mesner_check(A, tensor):
    """
    Vérifie A_i·A_j = Σ_k p_ij^k·A_k en arithmétique entière
    :param A: Matrices d'adjacence
    :param tensor: Nombres d'intersection
    :return: Résidu maximal (nul)
    """
    worst = 0
    for i in range(len(A)):
        for j in range(len(A)):
            residual = int(np.abs(A[i] @ A[j] - np.tensordot(tensor[i, j], A, axes=1)).max())
            _assert(
                residual == 0,
                _("Algèbre de Bose-Mesner violée pour (i, j) = ({}, {}), résidu {}.").format(i, j, residual),
                SchemeError,
                pair=(i, j),
                residual=residual,
            )
            worst = max(worst, residual)
    return worst


def idempotents(A, eigen):
    """
    Idempotents primitifs E_i = (1/n)·Σ_j Q_ji·A_j,
    vérifiés par E_i·E_j = δ_ij·E_i, Σ E_i = I et A_j = Σ_i P_ij·E_i
    :param A: Matrices d'adjacence
    :param eigen: EigenMatrices
    :return: Tableau complexe de forme (d + 1, n, n)
    """
    tolerance = settings.UNGAS_VERIFY_TOLERANCE
    n = A.shape[1]
    E = np.einsum("ji,jab->iab", eigen.Q, A.astype(complex)) / n
    residual = max(
        max(np.abs(E[i] @ E[i] - E[i]).max() for i in range(len(E))),
        np.abs(E.sum(axis=0) - np.eye(n)).max(),
        np.abs(np.einsum("ij,iab->jab", eigen.P, E) - A).max(),
    )
    # Des projecteurs de somme I sont deux à deux orthogonaux : contrôle explicite sur les petits ordres seulement
    if n <= settings.UNGAS_ASSOCIATIVITY_EXHAUSTIVE_LIMIT:
        for i in range(len(E)):
            for j in range(i + 1, len(E)):
                residual = max(residual, np.abs(E[i] @ E[j]).max())
    _assert(
        residual <= tolerance,
        _("Idempotents incohérents (résidu {:.3e}).").format(residual),
        SchemeError,
        residual=float(residual),
    )
    return E


def stratify(group, partition):
    """
    Strates depuis le sommet de référence o = identité : β est dans la strate i si et seulement si β ∈ C_i
    """
    strata = np.array(partition.class_of, dtype=np.int64)
    _assert(strata[group.identity] == 0, _("L'identité doit être dans la strate 0."), SchemeError)
    return strata


def _spectral_residual(A, P, dims):
    # Valeurs propres de A_j : P_ij avec multiplicité d_i^2
    worst = 0.0
    for j in range(len(A)):
        computed = list(np.linalg.eigvals(A[j].astype(float)))
        for value in np.repeat(P[:, j], dims**2):
            index = int(np.argmin(np.abs(np.array(computed) - value)))
            worst = max(worst, abs(computed.pop(index) - value))
    return worst


def verify_axioms(A, tensor, eigen, dims, dual, counted=None):
    """
    Vérification des axiomes du schéma : partition (AS1), diagonale (AS2), fermeture par transposition (AS3),
    indépendance des nombres d'intersection (AS4) ; la symétrie (AS3') est seulement constatée
    :param A: Matrices d'adjacence
    :param tensor: Nombres d'intersection calculés depuis les caractères
    :param eigen: EigenMatrices
    :param dims: Dimensions des irréductibles
    :param dual: Application duale des classes
    :param counted: Nombres d'intersection obtenus par dénombrement (optionnel)
    :return: AxiomReport
    """
    n = A.shape[1]
    size = len(A)
    partition = bool(np.array_equal(A.sum(axis=0), np.ones((n, n), dtype=np.int64)))
    diagonal = bool(np.array_equal(A[0], np.eye(n, dtype=np.int64)))
    transpose_closed = all(np.array_equal(A[i].T, A[dual[i]]) for i in range(size))
    symmetric = all(np.array_equal(A[i].T, A[i]) for i in range(size))
    constant_counts = counted is None or bool(np.array_equal(counted, tensor))
    residuals = dict(
        bose_mesner=bose_mesner_check(A, tensor),
        spectral=_spectral_residual(A, eigen.P, dims),
    )
    for name, holds in (
        ("AS1", partition),
        ("AS2", diagonal),
        ("AS3", transpose_closed),
        ("AS4", constant_counts),
    ):
        _assert(holds, _("Axiome {} violé.").format(name), SchemeError, axiom=name)
    _assert(
        residuals["spectral"] <= settings.UNGAS_VERIFY_TOLERANCE * max(1, n),
        _("Spectre de A incohérent avec P (résidu {:.3e}).").format(residuals["spectral"]),
        SchemeError,
        residual=residuals["spectral"],
    )
    if not symmetric:
        logger.info(_("Schéma non symétrique : AS3' ne tient pas (groupe non ambivalent)."))
    return AxiomReport(
        partition=partition,
        diagonal=diagonal,
        transpose_closed=transpose_closed,
        symmetric=symmetric,
        constant_counts=constant_counts,
        residuals=residuals,
    )


def build_scheme(group, partition=None, table=None, spec=None):
    """
    Construit et vérifie entièrement le schéma d'association d'un groupe
    :param group: GroupTable
    :param partition: ConjugacyPartition (calculée si absente)
    :param table: CharacterTable (calculée si absente)
    :param spec: FamilySpec, pour utiliser la table analytique
    :return: (SchemeData, AxiomReport)
    """
    partition = partition or conjugacy_classes(group)
    table = table or character_table(group, partition, spec)
    eigen = eigenmatrices(table)
    tensor = intersection_numbers_by_characters(table)
    counted = intersection_numbers_by_counting(group, partition)
    A = adjacency_matrices(group, partition)
    report = verify_axioms(A, tensor, eigen, table.dims, partition.dual, counted=counted)
    scheme = SchemeData(
        n=group.n,
        d_plus_1=partition.count,
        A=A,
        E=idempotents(A, eigen),
        strata=stratify(group, partition),
        P=eigen.P,
        Q=eigen.Q,
        intersections=tensor,
        table=table,
        partition=partition,
    )
    return scheme, report


def edge_list(scheme, labels=None):
    """
    Arêtes du réseau sous-jacent étiquetées par relation (la relation R_0 est omise)
    :param scheme: SchemeData
    :param labels: Libellés des éléments (indices si absents)
    :return: Liste de dictionnaires {source, target, relation}
    """
    edges = []
    for relation in range(1, scheme.d_plus_1):
        for source, target in zip(*np.nonzero(scheme.A[relation])):
            edges.append(
                dict(
                    source=labels[source] if labels else int(source),
                    target=labels[target] if labels else int(target),
                    relation=relation,
                )
            )
    return edges
