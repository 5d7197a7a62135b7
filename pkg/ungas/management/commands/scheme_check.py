# coding: utf-8
import logging
from collections import OrderedDict

import numpy as np
from django.utils.translation import gettext as _

from ungas.commands import BaseUngasCommand, Report
from ungas.scheme import build_scheme, edge_list

# Logging
logger = logging.getLogger(__name__)


class Command(BaseUngasCommand):
    help = _("Construit le schéma d'association du groupe et vérifie ses axiomes")

    def add_command_arguments(self, parser):
        parser.add_argument("--edges", action="store_true", help=_("Ajoute la liste des arêtes étiquetées"))

    def run(self, source, edges=False, **options):
        table, _zeta = self.characters(source)
        scheme, report = build_scheme(source.group, source.partition, table=table)
        traces = np.trace(scheme.E, axis1=1, axis2=2).real
        strata = [
            OrderedDict(strate=index, taille=int(np.sum(scheme.strata == index)), trace_E=traces[index])
            for index in range(scheme.d_plus_1)
        ]
        meta = OrderedDict(
            groupe=source.group.name,
            n=scheme.n,
            AS1=report.partition,
            AS2=report.diagonal,
            AS3=report.transpose_closed,
            AS3_symetrique=report.symmetric,
            AS4=report.constant_counts,
            residu_bose_mesner=report.residuals["bose_mesner"],
            residu_spectral=report.residuals["spectral"],
        )
        tables = OrderedDict(strates=strata)
        if edges:
            tables["aretes"] = edge_list(scheme, source.group.labels)
        return Report(meta=meta, tables=tables), True
