# coding: utf-8
"""
Dynamique de Heisenberg à une excitation sur le réseau sous-jacent : hamiltonien réduit, amplitudes de
transition par strate, évolution dense de contrôle, matrice densité à deux qubits et concurrence.
"""
import logging
from collections import namedtuple
from functools import lru_cache

import numpy as np
from django.utils.translation import gettext_lazy as _
from scipy import linalg

from ungas.logger import DynamicsError
from ungas.settings import settings
from ungas.utils import _assert

# Logging
logger = logging.getLogger(__name__)

# σ_y ⊗ σ_y (réelle)
SPIN_FLIP = np.kron(np.array([[0, -1j], [1j, 0]]), np.array([[0, -1j], [1j, 0]])).real


class CouplingVector(namedtuple("CouplingVector", ["J"])):
    """
    Couplages J_l, un par classe ; J_0 ne fait que déphaser et peut être ignoré
    """

    __slots__ = ()

    def __new__(cls, J):
        return super().__new__(cls, np.asarray(J, dtype=float))

    def check_dual(self, dual):
        """
        Contrainte d'hermiticité J_i = J_ī
        """
        tolerance = settings.UNGAS_VERIFY_TOLERANCE
        for i, j in enumerate(dual):
            _assert(
                abs(self.J[i] - self.J[j]) <= tolerance,
                _("Couplages non hermitiques : J_{} = {} et J_{} = {}.").format(i, self.J[i], j, self.J[j]),
                DynamicsError,
                classes=(i, j),
            )
        return self

    @classmethod
    def from_merged(cls, zeta, values):
        """
        Couplages bruts depuis les couplages par strate fusionnée
        """
        J = np.zeros(sum(len(members) for members in zeta.col_members))
        for value, members in zip(values, zeta.col_members):
            J[list(members)] = value
        return cls(J)

    def merged(self, zeta):
        return np.array([self.J[members[0]] for members in zeta.col_members])


class InitialState(namedtuple("InitialState", ["theta", "phi"])):
    """
    État initial sin(θ)e^{-iφ}|0⟩ + cos(θ)|1⟩ sur le sommet de référence
    """

    __slots__ = ()

    def validate(self):
        _assert(
            0.0 <= self.theta <= np.pi / 2 and 0.0 <= self.phi < 2 * np.pi,
            _("État initial hors domaine : θ = {}, φ = {}.").format(self.theta, self.phi),
            DynamicsError,
        )
        return self


# État optimal (excitation locale)
OPTIMAL_STATE = InitialState(theta=0.0, phi=0.0)


class AmplitudeProfile(namedtuple("AmplitudeProfile", ["t", "alpha"])):
    """
    Amplitudes de transition α_m(t), égales sur toute une strate
    """

    __slots__ = ()

    def probabilities(self, kappa):
        return np.asarray(kappa) * np.abs(self.alpha) ** 2

    def residual(self, kappa):
        return abs(self.probabilities(kappa).sum() - 1.0)


class TwoQubitState(namedtuple("TwoQubitState", ["rho"])):
    """
    Matrice densité réduite 4×4 dans la base (|00⟩, |01⟩, |10⟩, |11⟩)
    """

    __slots__ = ()

    def validate(self):
        rho = self.rho
        tolerance = settings.UNGAS_DENSITY_TOLERANCE
        _assert(
            np.abs(rho - rho.conj().T).max() <= tolerance,
            _("Matrice densité non hermitienne."),
            DynamicsError,
        )
        trace = np.trace(rho).real
        _assert(abs(trace - 1.0) <= tolerance, _("Trace de ρ égale à {}.").format(trace), DynamicsError)
        lowest = np.linalg.eigvalsh(rho).min()
        _assert(
            lowest >= settings.UNGAS_PSD_FLOOR,
            _("Matrice densité non positive (valeur propre {:.3e}).").format(lowest),
            DynamicsError,
        )
        return self


def _dual_from_adjacency(A):
    dual = []
    for matrix in A:
        matches = [j for j in range(len(A)) if np.array_equal(matrix.T, A[j])]
        _assert(matches, _("Relation transposée introuvable."), DynamicsError)
        dual.append(matches[0])
    return dual


def reduced_hamiltonian(A, couplings, dual=None):
    """
    Hamiltonien du secteur à une excitation H = 2·Σ_l J_l·A_l (le terme identité est omis)
    :param A: Matrices d'adjacence
    :param couplings: CouplingVector
    :param dual: Application duale des classes (déduite des transposées si absente)
    :return: Matrice réelle symétrique n×n
    """
    couplings.check_dual(_dual_from_adjacency(A) if dual is None else dual)
    H = 2.0 * np.tensordot(couplings.J, A.astype(float), axes=1)
    _assert(
        np.abs(H - H.T).max() <= settings.UNGAS_VERIFY_TOLERANCE, _("Hamiltonien non symétrique."), DynamicsError
    )
    return H


def amplitudes(eigen, couplings, t):
    """
    Amplitudes de transition α_m(t) = (1/n)·Σ_l exp(-2it·Σ_k J_k·P_lk)·Q_ml
    :param eigen: EigenMatrices
    :param couplings: CouplingVector
    :param t: Temps
    :return: AmplitudeProfile
    """
    kappa = eigen.P[0].real
    n = kappa.sum()
    theta = -2.0 * t * (eigen.P @ couplings.J)
    profile = AmplitudeProfile(t=t, alpha=eigen.Q @ np.exp(1j * theta) / n)
    residual = profile.residual(kappa)
    _assert(
        residual <= settings.UNGAS_NORMALIZATION_TOLERANCE,
        _("Normalisation violée à t = {} (résidu {:.3e}) : phases complexes, couplages non hermitiques ?").format(
            t, residual
        ),
        DynamicsError,
        residual=residual,
    )
    return profile


def amplitudes_from_phases(zeta, theta):
    """
    Amplitudes par strate fusionnée pour des phases libres : α_m = (1/n)·Σ_l d_l·ζ_l(m)·e^{iθ_l}
    :param zeta: ZetaTable
    :param theta: Phases θ_l, une par ligne conservée
    :return: Amplitudes complexes
    """
    return zeta.Q @ np.exp(1j * np.asarray(theta, dtype=float)) / zeta.n


def evolve_dense(H, t):
    """
    Opérateur d'évolution U = exp(-iHt) par décomposition spectrale réelle symétrique
    :param H: Hamiltonien
    :param t: Temps
    :return: Matrice unitaire n×n
    """
    try:
        values, vectors = linalg.eigh(H)
    except linalg.LinAlgError as error:
        raise DynamicsError(_("Échec de la diagonalisation : {}.").format(error))
    U = (vectors * np.exp(-1j * values * t)[None, :]) @ vectors.T
    residual = np.abs(U @ U.conj().T - np.eye(len(H))).max()
    _assert(
        residual <= settings.UNGAS_UNITARITY_TOLERANCE,
        _("Évolution non unitaire (résidu {:.3e}).").format(residual),
        DynamicsError,
        residual=residual,
    )
    return U


def stratum_amplitudes(U, strata, reference=0):
    """
    Colonne du sommet de référence regroupée par strate (valeur commune à tous les sommets d'une strate)
    :param U: Opérateur d'évolution
    :param strata: Strate de chaque sommet
    :param reference: Sommet de référence
    :return: Amplitudes par strate
    """
    column = U[:, reference]
    strata = np.asarray(strata)
    values = []
    for stratum in range(strata.max() + 1):
        members = column[strata == stratum]
        _assert(
            np.abs(members - members[0]).max() <= settings.UNGAS_VERIFY_TOLERANCE,
            _("Amplitudes non uniformes sur la strate {}.").format(stratum),
            DynamicsError,
        )
        values.append(members[0])
    return np.array(values)


def reduced_density(state, f, f_prime):
    """
    Matrice densité réduite des deux qubits ρ = |a⟩⟨a| + r·|00⟩⟨00| avec
    |a⟩ = sin(θ)e^{-iφ}|00⟩ + cos(θ)·f'|01⟩ + cos(θ)·f|10⟩ et r = cos²(θ)(1 - |f|² - |f'|²)
    :param state: InitialState
    :param f: Amplitude vers le premier sommet
    :param f_prime: Amplitude vers le second sommet
    :return: TwoQubitState
    """
    weight = abs(f) ** 2 + abs(f_prime) ** 2
    _assert(
        weight <= 1.0 + 1e-12,
        _("Amplitudes incompatibles : |f|² + |f'|² = {}.").format(weight),
        DynamicsError,
    )
    state.validate()
    cos, sin = np.cos(state.theta), np.sin(state.theta)
    vector = np.array([sin * np.exp(-1j * state.phi), cos * f_prime, cos * f, 0.0], dtype=complex)
    rho = np.outer(vector, vector.conj())
    rho[0, 0] += cos**2 * max(0.0, 1.0 - weight)
    return TwoQubitState(rho=rho).validate()


def concurrence_wootters(state):
    """
    Concurrence de Wootters max(0, λ1 - λ2 - λ3 - λ4), les λ_i étant les racines des valeurs propres de
    R = ρ(σy⊗σy)ρ*(σy⊗σy), obtenues comme valeurs singulières de τ = Wᵀ(σy⊗σy)W avec ρ = W·W†
    :param state: TwoQubitState
    :return: Concurrence dans [0, 1]
    """
    try:
        values, vectors = linalg.eigh(state.rho)
    except linalg.LinAlgError as error:
        raise DynamicsError(_("Échec de la diagonalisation : {}.").format(error))
    _assert(
        values.min() >= settings.UNGAS_PSD_FLOOR,
        _("Matrice densité non positive (valeur propre {:.3e}).").format(values.min()),
        DynamicsError,
    )
    W = vectors * np.sqrt(np.clip(values, 0.0, None))[None, :]
    lambdas = linalg.svdvals(W.T @ SPIN_FLIP @ W)
    return float(max(0.0, lambdas[0] - lambdas[1:].sum()))


@lru_cache(maxsize=None)
def resolve_cos_exponent(candidates=(1, 2), seed=0):
    """
    Détermine l'exposant p de la forme close C = 2·cos^p(θ)·|f|·|f'| par confrontation à la concurrence
    de Wootters sur des états tirés au hasard (θ > 0 discrimine les candidats)
    :param candidates: Exposants candidats
    :param seed: Graine du tirage
    :return: Exposant retenu
    """
    rng = np.random.default_rng(seed)
    errors = dict.fromkeys(candidates, 0.0)
    for theta in (0.3, 0.7, 1.1):
        amplitudes = rng.normal(size=4)
        f, f_prime = complex(*amplitudes[:2]), complex(*amplitudes[2:])
        scale = np.sqrt(abs(f) ** 2 + abs(f_prime) ** 2) * 1.25
        f, f_prime = f / scale, f_prime / scale
        state = InitialState(theta=theta, phi=float(rng.uniform(0, 2 * np.pi)))
        reference = concurrence_wootters(reduced_density(state, f, f_prime))
        for power in candidates:
            closed = 2 * np.cos(theta) ** power * abs(f) * abs(f_prime)
            errors[power] = max(errors[power], abs(closed - reference))
    exponent = min(candidates, key=lambda power: errors[power])
    logger.info(
        _("Exposant de cos(θ) dans la concurrence résolu à {} (écarts : {}).").format(
            exponent, ", ".join("{} → {:.3e}".format(power, error) for power, error in errors.items())
        )
    )
    return exponent


def concurrence_pair(state, f, f_prime):
    """
    Forme close de la concurrence entre deux sommets : 2·cos^p(θ)·|f|·|f'|
    """
    return 2 * np.cos(state.theta) ** resolve_cos_exponent() * abs(f) * abs(f_prime)


def time_series(eigen, couplings, t_max, steps, pairs=()):
    """
    Série temporelle des probabilités par strate κ_m·|α_m(t)|², du résidu de normalisation
    et des cibles 2|α_i||α_j| des couples demandés
    :param eigen: EigenMatrices
    :param couplings: CouplingVector
    :param t_max: Temps final
    :param steps: Nombre de points
    :param pairs: Couples de strates (i, j)
    :return: Liste d'enregistrements
    """
    kappa = eigen.P[0].real
    times = np.zeros(1) if t_max == 0 else np.linspace(0.0, t_max, steps)
    rows = []
    for t in times:
        profile = amplitudes(eigen, couplings, t)
        row = dict(t=float(t))
        for m, probability in enumerate(profile.probabilities(kappa)):
            row["p{}".format(m)] = float(probability)
        for i, j in pairs:
            row["C{}_{}".format(i, j)] = float(2 * abs(profile.alpha[i]) * abs(profile.alpha[j]))
        row["residual"] = float(profile.residual(kappa))
        rows.append(row)
    return rows
