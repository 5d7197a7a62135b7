# coding: utf-8
import logging
from collections import OrderedDict

from django.core.management.base import CommandError
from django.utils.translation import gettext as _

from ungas.commands import BaseUngasCommand, Report
from ungas.utils import dump_document

# Logging
logger = logging.getLogger(__name__)


class Command(BaseUngasCommand):
    help = _("Affiche l'ordre, les classes de conjugaison et la structure duale d'un groupe")

    def add_command_arguments(self, parser):
        parser.add_argument(
            "--export",
            metavar="PATH",
            help=_("Écrit la table de multiplication dans un fichier relisible par --table (JSON ou YAML)"),
        )

    def run(self, source, export=None, **options):
        group, partition = source.group, source.partition
        rows = [
            OrderedDict(
                classe=index,
                taille=size,
                representant=group.labels[representative],
                ordre=group.order_of(representative),
                duale=partition.dual[index],
            )
            for index, (size, representative) in enumerate(zip(partition.sizes, partition.representatives))
        ]
        meta = OrderedDict(
            groupe=group.name,
            n=group.n,
            nombre_classes=partition.count,
            tailles=partition.sizes,
            duales=partition.dual,
            ambivalent=partition.ambivalent,
        )
        if export:
            try:
                dump_document(group.as_dict(), export)
            except OSError as error:
                raise CommandError(_("Écriture impossible de {} : {}").format(export, error))
            meta.update(export=export)
            logger.info(_("Table de {} écrite dans {}.").format(group.name, export))
        logger.info(_("{} : {} classes de conjugaison.").format(group.name, partition.count))
        return Report(meta=meta, tables=OrderedDict(classes=rows)), True
