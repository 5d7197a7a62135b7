# coding: utf-8
"""
Optimisation de l'intrication : optimum analytique dans une strate avec synthèse des couplages,
optimum numérique entre deux strates sur le tore des phases, et bornes supérieures.
"""
import itertools
import logging
from collections import namedtuple
from concurrent.futures import ThreadPoolExecutor

import numpy as np
from django.utils.translation import gettext_lazy as _
from scipy import optimize

from ungas.dynamics import CouplingVector, amplitudes_from_phases
from ungas.logger import OptimizationError
from ungas.settings import settings
from ungas.utils import _assert, timeit

# Logging
logger = logging.getLogger(__name__)

# Méthodes d'optimisation entre strates
TORUS = "torus"
SQP = "sqp"
METHODS = (TORUS, SQP)


SameStratumResult = namedtuple(
    "SameStratumResult",
    ["stratum", "alpha_opt", "concurrence_opt", "t_star", "branch_integers", "global_phase", "couplings"],
)

CrossStrataResult = namedtuple(
    "CrossStrataResult", ["strata", "concurrence", "phases", "couplings", "starts_used", "converged", "method"]
)

# Résultat d'un départ de l'optimisation multi-départs
StartOutcome = namedtuple("StartOutcome", ["index", "value", "phases", "converged"])


def _check_stratum(zeta, m):
    _assert(
        0 <= m < zeta.d_prime_plus_1,
        _("Strate inconnue : {} (strates 0 à {}).").format(m, zeta.d_prime),
        OptimizationError,
        stratum=m,
    )


def optimal_amplitude(zeta, m):
    """
    Amplitude optimale dans une strate : |α_m|_opt = (1/n)·Σ_l d_l·|ζ_l(m)|
    :param zeta: ZetaTable
    :param m: Strate fusionnée
    :return: |α_m|_opt
    """
    _check_stratum(zeta, m)
    return float(np.dot(zeta.dims, np.abs(zeta.zeta[:, m])) / zeta.n)


def optimal_concurrence_same_stratum(zeta, m):
    """
    Concurrence optimale entre deux sommets d'une même strate : 2·|α_m|²_opt
    """
    _check_stratum(zeta, m)
    _assert(
        zeta.merged_kappa[m] >= 2,
        _("La strate {} ne contient qu'un sommet, aucune paire n'y est possible.").format(m),
        OptimizationError,
        stratum=m,
    )
    return 2 * optimal_amplitude(zeta, m) ** 2


def recover_couplings(zeta, theta, t=1.0):
    """
    Couplages réalisant des phases données au temps t : θ = -2t·P'·J résolu en J puis étendu aux classes brutes
    :param zeta: ZetaTable
    :param theta: Phases θ_l par ligne conservée
    :param t: Temps (strictement positif)
    :return: CouplingVector
    """
    _assert(t > 0, _("Le temps d'optimisation doit être strictement positif."), OptimizationError)
    try:
        merged = -np.linalg.solve(zeta.P, np.asarray(theta, dtype=float)) / (2.0 * t)
    except np.linalg.LinAlgError as error:
        raise OptimizationError(_("Système fusionné singulier : {}.").format(error))
    return CouplingVector.from_merged(zeta, merged)


def synthesize_couplings(zeta, m, t_star=1.0, branch_integers=None, phi=0.0):
    """
    Couplages alignant tous les termes de α_m au temps t* :
    θ_l = 2(n_ml·π + ξ_ml + Φ), puis résolution du système linéaire des phases
    :param zeta: ZetaTable
    :param m: Strate fusionnée
    :param t_star: Temps d'optimisation
    :param branch_integers: Entiers n_ml par ligne conservée (nuls par défaut)
    :param phi: Phase globale Φ
    :return: CouplingVector
    """
    _check_stratum(zeta, m)
    branches = np.zeros(zeta.d_prime_plus_1) if branch_integers is None else np.asarray(branch_integers, dtype=float)
    _assert(
        len(branches) == zeta.d_prime_plus_1,
        _("{} entiers de branche attendus.").format(zeta.d_prime_plus_1),
        OptimizationError,
    )
    theta = 2 * (branches * np.pi + zeta.xi[m] + phi)
    return recover_couplings(zeta, theta, t_star)


def optimize_same_stratum(zeta, m, t_star=1.0, branch_integers=None, phi=0.0):
    """
    Optimum analytique dans une strate et couplages correspondants
    :return: SameStratumResult
    """
    concurrence = optimal_concurrence_same_stratum(zeta, m)
    branches = [0] * zeta.d_prime_plus_1 if branch_integers is None else list(branch_integers)
    return SameStratumResult(
        stratum=m,
        alpha_opt=optimal_amplitude(zeta, m),
        concurrence_opt=concurrence,
        t_star=t_star,
        branch_integers=branches,
        global_phase=phi,
        couplings=synthesize_couplings(zeta, m, t_star, branches, phi),
    )


def _torus_objective(matrix, i, j):
    # Opposé de T² = 4|α_i|²|α_j|² et son gradient en θ_1..θ_d' (jauge θ_0 = 0)
    def objective(free):
        phases = np.exp(1j * np.concatenate(([0.0], free)))
        alpha = matrix @ phases
        weight_i, weight_j = abs(alpha[i]) ** 2, abs(alpha[j]) ** 2
        grad_i = 2 * np.real(np.conj(alpha[i]) * 1j * matrix[i] * phases)
        grad_j = 2 * np.real(np.conj(alpha[j]) * 1j * matrix[j] * phases)
        gradient = 4 * (weight_j * grad_i + weight_i * grad_j)
        return -4 * weight_i * weight_j, -gradient[1:]

    return objective


def _run_torus(zeta, i, j, start, index, tol, max_iter):
    result = optimize.minimize(
        _torus_objective(zeta.Q / zeta.n, i, j),
        start,
        jac=True,
        method="BFGS",
        options=dict(gtol=tol, maxiter=max_iter),
    )
    converged = bool(result.success) or np.linalg.norm(result.jac) <= settings.UNGAS_OPTIMIZE_ACCEPT_GRADIENT
    return StartOutcome(
        index=index,
        value=-float(result.fun),
        phases=np.concatenate(([0.0], result.x)),
        converged=converged,
    )


def _run_sqp(zeta, i, j, start, index, tol, max_iter):
    # Variables : parties réelles et imaginaires de α, contraintes |(P'α)_k|² = 1
    size = zeta.d_prime_plus_1
    P = zeta.P

    def split(x):
        return x[:size], x[size:]

    def objective(x):
        real, imag = split(x)
        weight_i, weight_j = real[i] ** 2 + imag[i] ** 2, real[j] ** 2 + imag[j] ** 2
        gradient = np.zeros_like(x)
        gradient[[i, size + i]] += 8 * weight_j * np.array([real[i], imag[i]])
        gradient[[j, size + j]] += 8 * weight_i * np.array([real[j], imag[j]])
        return -4 * weight_i * weight_j, -gradient

    def constraint(x):
        real, imag = split(x)
        return (P @ real) ** 2 + (P @ imag) ** 2 - 1.0

    def jacobian(x):
        real, imag = split(x)
        return np.hstack((2 * (P @ real)[:, None] * P, 2 * (P @ imag)[:, None] * P))

    alpha = amplitudes_from_phases(zeta, np.concatenate(([0.0], start)))
    result = optimize.minimize(
        objective,
        np.concatenate((alpha.real, alpha.imag)),
        jac=True,
        method="SLSQP",
        constraints=[dict(type="eq", fun=constraint, jac=jacobian)],
        options=dict(ftol=tol, maxiter=max_iter),
    )
    real, imag = split(result.x)
    phases = np.angle(P @ (real + 1j * imag))
    phases = phases - phases[0]
    alpha = amplitudes_from_phases(zeta, phases)
    return StartOutcome(
        index=index,
        value=float(4 * abs(alpha[i]) ** 2 * abs(alpha[j]) ** 2),
        phases=phases,
        converged=bool(result.success),
    )


@timeit("cross_strata_optimize", log=logger.debug)
def cross_strata_optimize(zeta, i, j, starts=None, seed=None, tol=None, max_iter=None, method=None, workers=None):
    """
    Maximise T(θ) = 2|α_i(θ)|·|α_j(θ)| sur le tore des phases (jauge θ_0 = 0) par montées locales
    multi-départs ; la réduction est déterministe (meilleure valeur, plus petit indice de départ en cas d'égalité)
    :param zeta: ZetaTable
    :param i: Première strate fusionnée
    :param j: Seconde strate fusionnée
    :param starts: Nombre de départs aléatoires
    :param seed: Graine des départs
    :param tol: Tolérance sur la norme du gradient
    :param max_iter: Nombre maximal d'itérations par départ
    :param method: "torus" (quasi-Newton sur les phases) ou "sqp" (SLSQP sur les amplitudes contraintes)
    :param workers: Nombre de fils d'exécution
    :return: CrossStrataResult
    """
    starts = starts or settings.UNGAS_OPTIMIZE_STARTS
    seed = settings.UNGAS_OPTIMIZE_SEED if seed is None else seed
    tol = tol or settings.UNGAS_OPTIMIZE_TOLERANCE
    max_iter = max_iter or settings.UNGAS_OPTIMIZE_MAX_ITER
    method = method or settings.UNGAS_OPTIMIZE_METHOD
    workers = workers or settings.UNGAS_OPTIMIZE_WORKERS
    _check_stratum(zeta, i)
    _check_stratum(zeta, j)
    _assert(i != j, _("Strates identiques : utiliser l'optimum analytique."), OptimizationError, strata=(i, j))
    _assert(method in METHODS, _("Méthode inconnue : {}.").format(method), OptimizationError)

    runner = _run_torus if method == TORUS else _run_sqp
    points = np.random.default_rng(seed).uniform(0.0, 2 * np.pi, size=(starts, zeta.d_prime))

    def run(index):
        return runner(zeta, i, j, points[index], index, tol, max_iter)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            outcomes = list(executor.map(run, range(starts)))
    else:
        outcomes = [run(index) for index in range(starts)]

    best = outcomes[0]
    for outcome in outcomes[1:]:
        if outcome.value > best.value:
            best = outcome
    converged = any(outcome.converged for outcome in outcomes)
    if not converged:
        logger.warning(_("Aucun départ n'a convergé pour les strates ({}, {}).").format(i, j))
    phases = np.mod(best.phases, 2 * np.pi)
    return CrossStrataResult(
        strata=(i, j),
        concurrence=float(np.sqrt(max(best.value, 0.0))),
        phases=phases,
        couplings=recover_couplings(zeta, phases, t=1.0),
        starts_used=starts,
        converged=converged,
        method=method,
    )


def grid_search(zeta, i, j, steps):
    """
    Recherche exhaustive sur une grille régulière du tore (jauge θ_0 = 0), vectorisée sur le dernier axe
    :param zeta: ZetaTable
    :param i: Première strate
    :param j: Seconde strate
    :param steps: Nombre de points par phase libre
    :return: (concurrence maximale, phases correspondantes)
    """
    _assert(zeta.d_prime >= 1, _("Aucune phase libre."), OptimizationError)
    matrix = zeta.Q / zeta.n
    grid = np.linspace(0.0, 2 * np.pi, steps, endpoint=False)
    last = np.exp(1j * grid)
    best, best_phases = -1.0, None
    for prefix in itertools.product(grid, repeat=zeta.d_prime - 1):
        fixed = np.exp(1j * np.array((0.0,) + prefix))
        head_i, head_j = matrix[i, :-1] @ fixed, matrix[j, :-1] @ fixed
        values = 2 * np.abs(head_i + matrix[i, -1] * last) * np.abs(head_j + matrix[j, -1] * last)
        index = int(np.argmax(values))
        if values[index] > best:
            best, best_phases = float(values[index]), np.array((0.0,) + prefix + (grid[index],))
    return best, best_phases


def bound_product(zeta, i, j):
    """
    Première borne : 2·|α_i|_opt·|α_j|_opt
    """
    return 2 * optimal_amplitude(zeta, i) * optimal_amplitude(zeta, j)


def bound_conservation(kappa_i, kappa_j):
    """
    Seconde borne (conservation de la probabilité) : 1/√(κ_i·κ_j)
    """
    _assert(kappa_i >= 1 and kappa_j >= 1, _("Tailles de strates invalides."), OptimizationError)
    return 1.0 / np.sqrt(kappa_i * kappa_j)


def bounds_table(zeta):
    """
    Les deux bornes pour chaque couple de strates fusionnées
    :param zeta: ZetaTable
    :return: Liste d'enregistrements
    """
    return [
        dict(
            pair=(i, j),
            product=bound_product(zeta, i, j),
            conservation=bound_conservation(zeta.merged_kappa[i], zeta.merged_kappa[j]),
        )
        for i, j in itertools.combinations(range(zeta.d_prime_plus_1), 2)
    ]


def saturation_gaps(zeta, **options):
    """
    Écart entre la seconde borne et l'optimum numérique pour chaque couple de strates
    :param zeta: ZetaTable
    :param options: Options transmises à cross_strata_optimize
    :return: Liste d'enregistrements
    """
    rows = []
    for bounds in bounds_table(zeta):
        result = cross_strata_optimize(zeta, *bounds["pair"], **options)
        rows.append(dict(bounds, concurrence=result.concurrence, gap=bounds["conservation"] - result.concurrence))
    return rows
