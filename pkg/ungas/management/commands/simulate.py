# coding: utf-8
import logging
from collections import OrderedDict

from django.core.management.base import CommandError
from django.utils.translation import gettext as _

from ungas.characters import eigenmatrices
from ungas.commands import BaseUngasCommand, Report
from ungas.dynamics import CouplingVector, time_series
from ungas.optimize import synthesize_couplings
from ungas.serializers import SimulateSerializer
from ungas.utils import str_to_list

# Logging
logger = logging.getLogger(__name__)


class Command(BaseUngasCommand):
    help = _("Simule la dynamique à une excitation et émet la série temporelle des probabilités par strate")

    def add_command_arguments(self, parser):
        couplings = parser.add_mutually_exclusive_group(required=True)
        couplings.add_argument("--couplings", help=_("Couplages J_0..J_d par classe, séparés par des virgules"))
        couplings.add_argument(
            "--synthesize", type=int, metavar="M", help=_("Couplages synthétisés pour la strate fusionnée M")
        )
        parser.add_argument("--t-star", dest="t_star", type=float, default=1.0, help=_("Temps de synthèse"))
        parser.add_argument("--t-max", dest="t_max", type=float, required=True, help=_("Temps final"))
        parser.add_argument("--steps", type=int, default=101, help=_("Nombre de points de la grille"))
        parser.add_argument(
            "--pair",
            dest="pairs",
            nargs=2,
            type=int,
            action="append",
            metavar=("I", "J"),
            help=_(
                "Couple de classes de conjugaison (indices bruts, non fusionnés, contrairement à optimize et bounds) "
                "dont la cible 2|α_i||α_j| est émise"
            ),
        )

    def run(self, source, couplings=None, synthesize=None, t_star=1.0, t_max=0.0, steps=101, pairs=None, **options):
        table, zeta = self.characters(source)
        if synthesize is not None:
            vector = synthesize_couplings(zeta, synthesize, t_star)
        else:
            values = str_to_list(couplings)
            if None in values:
                raise CommandError(_("Couplages non numériques : {}").format(couplings))
            vector = CouplingVector(values)
        data = self.validate(
            SimulateSerializer, dict(couplings=list(vector.J), t_max=t_max, steps=steps, pairs=pairs or [])
        ).validated_data
        if len(data["couplings"]) != table.d_plus_1:
            raise CommandError(_("{} couplages attendus (un par classe).").format(table.d_plus_1))
        for pair in data["pairs"]:
            if max(pair) >= table.d_plus_1:
                raise CommandError(_("Classe inconnue dans le couple {}.").format(tuple(pair)))
        vector = CouplingVector(data["couplings"]).check_dual(source.partition.dual)
        rows = time_series(
            eigenmatrices(table), vector, data["t_max"], data["steps"], pairs=[tuple(pair) for pair in data["pairs"]]
        )
        meta = OrderedDict(
            groupe=source.group.name,
            couplages=vector.J,
            residu_max=max(row["residual"] for row in rows),
        )
        logger.info(_("{} points simulés jusqu'à t = {}.").format(len(rows), data["t_max"]))
        return Report(meta=meta, tables=OrderedDict(serie=rows)), True
