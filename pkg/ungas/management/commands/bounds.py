# coding: utf-8
import logging
from collections import OrderedDict

from django.utils.translation import gettext as _

from ungas.commands import BaseUngasCommand, Report
from ungas.logger import Logger
from ungas.optimize import bounds_table, saturation_gaps

# Logging
logger = logging.getLogger(__name__)


class Command(BaseUngasCommand):
    help = _("Calcule les deux bornes supérieures pour chaque couple de strates fusionnées")

    def add_command_arguments(self, parser):
        parser.add_argument(
            "--numeric", action="store_true", help=_("Ajoute l'optimum numérique et l'écart à la seconde borne")
        )

    def run(self, source, numeric=False, seed=None, **options):
        _table, zeta = self.characters(source)
        log = Logger(__name__, keep_messages=True)
        rows = saturation_gaps(zeta, seed=seed) if numeric else bounds_table(zeta)
        for row in rows:
            if numeric and row["gap"] <= 1e-6:
                log.context_info(row, _("Seconde borne atteinte."))
        meta = OrderedDict(groupe=source.group.name, strates=zeta.col_members, kappa=zeta.merged_kappa)
        if log.messages:
            meta.update(constats=log.messages)
        return Report(meta=meta, tables=OrderedDict(bornes=rows)), True
