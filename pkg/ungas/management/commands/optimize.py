# coding: utf-8
import logging
from collections import OrderedDict

from django.utils.translation import gettext as _

from ungas.commands import BaseUngasCommand, Report
from ungas.optimize import METHODS, bound_conservation, bound_product, cross_strata_optimize, optimize_same_stratum
from ungas.serializers import OptimizeSerializer

# Logging
logger = logging.getLogger(__name__)


class Command(BaseUngasCommand):
    help = _("Optimise l'intrication dans une strate (forme close) ou entre deux strates (numérique)")

    def add_command_arguments(self, parser):
        target = parser.add_mutually_exclusive_group(required=True)
        target.add_argument("--stratum", type=int, help=_("Strate fusionnée"))
        target.add_argument("--pair", nargs=2, type=int, metavar=("I", "J"), help=_("Couple de strates fusionnées"))
        parser.add_argument("--t-star", dest="t_star", type=float, default=1.0, help=_("Temps d'optimisation"))
        parser.add_argument("--branches", nargs="+", type=int, help=_("Entiers de branche n_ml par ligne"))
        parser.add_argument("--phi", type=float, default=0.0, help=_("Phase globale"))
        parser.add_argument("--starts", type=int, help=_("Nombre de départs aléatoires"))
        parser.add_argument("--method", choices=METHODS, help=_("Méthode entre strates"))
        parser.add_argument("--workers", type=int, help=_("Fils d'exécution"))

    def run(self, source, seed=None, **options):
        _table, zeta = self.characters(source)
        fields = ("stratum", "pair", "t_star", "branches", "phi", "starts", "method", "workers")
        data = self.validate(OptimizeSerializer, {key: options.get(key) for key in fields}).validated_data
        meta = OrderedDict(groupe=source.group.name)
        if data.get("stratum") is not None:
            result = optimize_same_stratum(zeta, data["stratum"], data["t_star"], data.get("branches"), data["phi"])
            meta.update(
                strate=result.stratum,
                alpha_opt=result.alpha_opt,
                concurrence=result.concurrence_opt,
                t_star=result.t_star,
                branches=result.branch_integers,
                phi=result.global_phase,
                couplages=result.couplings.J,
            )
        else:
            i, j = data["pair"]
            result = cross_strata_optimize(
                zeta, i, j, starts=data.get("starts"), seed=seed, method=data.get("method"), workers=data.get("workers")
            )
            meta.update(
                couple=result.strata,
                concurrence=result.concurrence,
                borne_produit=bound_product(zeta, i, j),
                borne_conservation=bound_conservation(zeta.merged_kappa[i], zeta.merged_kappa[j]),
                phases=result.phases,
                couplages=result.couplings.J,
                t_star=1.0,
                methode=result.method,
                departs=result.starts_used,
                converge=result.converged,
            )
        return Report(meta=meta, tables=OrderedDict()), True
