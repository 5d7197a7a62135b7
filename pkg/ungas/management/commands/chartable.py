# coding: utf-8
import logging
from collections import OrderedDict

from django.utils.translation import gettext as _

from ungas.commands import BaseUngasCommand, Report

# Logging
logger = logging.getLogger(__name__)


class Command(BaseUngasCommand):
    help = _("Affiche la table de caractères et la table ζ fusionnée d'un groupe")

    def run(self, source, **options):
        table, zeta = self.characters(source)
        characters = []
        for l, row in enumerate(table.chi):
            record = OrderedDict(chi=l, d=table.dims[l], conjugue=table.row_dual[l])
            record.update(("g{}".format(m), value) for m, value in enumerate(row))
            characters.append(record)
        merged = []
        for index, row in enumerate(zeta.zeta):
            record = OrderedDict(zeta=index, lignes=zeta.row_members[index], d=zeta.dims[index])
            record.update(("s{}".format(m), value) for m, value in enumerate(row))
            merged.append(record)
        meta = OrderedDict(
            groupe=source.group.name,
            n=table.n,
            source=table.source,
            d=table.d_plus_1 - 1,
            d_prime=zeta.d_prime,
            kappa=table.kappa,
            dims=table.dims,
            lignes_reelles=zeta.real_rows,
            colonnes_complexes=zeta.complex_columns,
            strates=zeta.col_members,
            kappa_fusionnes=zeta.merged_kappa,
        )
        return Report(meta=meta, tables=OrderedDict(caracteres=characters, zeta=merged)), True
