# coding: utf-8
import logging
from collections import OrderedDict

from django.utils.translation import gettext as _

from ungas.commands import BaseUngasCommand, Report
from ungas.reproduce import TABLES, reproduce
from ungas.serializers import ReproduceSerializer

# Logging
logger = logging.getLogger(__name__)


class Command(BaseUngasCommand):
    help = _("Compare les valeurs publiées aux valeurs calculées ({})").format(", ".join(TABLES))
    requires_group = False

    def add_command_arguments(self, parser):
        parser.add_argument("name", help=_("Identifiant de la table"))
        parser.add_argument("--k", type=int, help=_("Paramètre k des familles Z_2k et V_8k"))

    def run(self, source, name=None, k=None, seed=None, **options):
        data = self.validate(ReproduceSerializer, dict(table=name, k=k)).validated_data
        rows, success, messages = reproduce(data["table"], k=data.get("k"), seed=seed)
        meta = OrderedDict(table=data["table"], succes=success)
        if messages:
            meta.update(constats=messages)
        return Report(meta=meta, tables=OrderedDict(entrees=rows)), success
