# coding: utf-8
import csv
import io
import logging
from collections import namedtuple

import yaml
from django.core.management.base import BaseCommand, CommandError
from django.utils.translation import gettext as _
from rest_framework import serializers
from rest_framework.renderers import JSONRenderer

from ungas.characters import character_table, zeta_table
from ungas.groups import build_family, conjugacy_classes
from ungas.logger import InternalError
from ungas.serializers import FamilySerializer, GroupTableSerializer
from ungas.settings import settings
from ungas.utils import format_number, load_document

# Logging
logger = logging.getLogger(__name__)

# Rapport d'une commande : métadonnées et tables d'enregistrements nommées
Report = namedtuple("Report", ["meta", "tables"])

# Groupe chargé depuis la ligne de commande
GroupSource = namedtuple("GroupSource", ["spec", "group", "partition"])


class BaseUngasCommand(BaseCommand):
    """
    Commande Django de base : source du groupe (--family ou --table), graine et formats de sortie
    """

    leave_locale_alone = True
    requires_group = True

    def add_arguments(self, parser):
        if self.requires_group:
            source = parser.add_mutually_exclusive_group(required=True)
            source.add_argument(
                "--family", nargs=2, metavar=("NAME", "PARAM"), help=_("Famille intégrée (Z n, D 2s, V k, SL2 p)")
            )
            source.add_argument("--table", metavar="PATH", help=_("Fichier de table de groupe (JSON ou YAML)"))
        parser.add_argument("--seed", type=int, default=None, help=_("Graine des tirages aléatoires"))
        output = parser.add_mutually_exclusive_group()
        output.add_argument("--json", action="store_true", help=_("Sortie JSON"))
        output.add_argument("--csv", action="store_true", help=_("Sortie CSV"))
        parser.add_argument("--out", metavar="PATH", help=_("Fichier de sortie"))
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        pass

    def run(self, source, **options):
        """
        Calcul propre à la commande
        :param source: GroupSource (None si la commande ne requiert pas de groupe)
        :return: (Report, succès)
        """
        raise NotImplementedError()

    def handle(self, *args, **options):
        try:
            source = self.load_group(options) if self.requires_group else None
            report, success = self.run(source, **options)
        except serializers.ValidationError as error:
            raise CommandError(_("Options invalides : {}").format(self.format_errors(error.detail)))
        except InternalError as error:
            raise CommandError(str(error))
        self.emit(report, options)
        if not success:
            raise CommandError(_("Résultats hors tolérance."))

    @staticmethod
    def format_errors(detail):
        if isinstance(detail, dict):
            return "; ".join(
                "{}: {}".format(key, BaseUngasCommand.format_errors(value)) for key, value in detail.items()
            )
        if isinstance(detail, (list, tuple)):
            return " ".join(BaseUngasCommand.format_errors(value) for value in detail)
        return str(detail)

    def validate(self, serializer_class, data):
        serializer = serializer_class(data=data)
        serializer.is_valid(raise_exception=True)
        return serializer

    def load_group(self, options):
        """
        Construit le groupe depuis une famille intégrée ou un fichier de table
        """
        if options.get("family"):
            family, parameter = options["family"]
            spec = self.validate(FamilySerializer, dict(family=family, parameter=parameter)).validated_data["spec"]
            group = build_family(spec)
        else:
            path = options["table"]
            try:
                document = load_document(path)
            except OSError as error:
                raise CommandError(_("Lecture impossible de {} : {}").format(path, error))
            except (ValueError, yaml.YAMLError) as error:
                raise CommandError(_("Fichier mal formé {} : {}").format(path, error))
            if not isinstance(document, dict):
                raise CommandError(_("Fichier mal formé {} : objet {{n, table}} attendu.").format(path))
            spec, group = None, self.validate(GroupTableSerializer, document).save()
        logger.debug(_("Groupe {} chargé ({} éléments).").format(group.name, group.n))
        return GroupSource(spec=spec, group=group, partition=conjugacy_classes(group))

    def characters(self, source):
        """
        Table de caractères (analytique si famille intégrée) et table ζ
        """
        table = character_table(source.group, source.partition, source.spec)
        return table, zeta_table(table)

    def emit(self, report, options):
        if options.get("json"):
            content = self.render_json(report)
        elif options.get("csv"):
            content = self.render_csv(report)
        else:
            content = self.render_text(report)
        if options.get("out"):
            with open(options["out"], "w", encoding="utf-8", newline="") as file:
                file.write(content)
            logger.info(_("Résultats écrits dans {}.").format(options["out"]))
        else:
            self.stdout.write(content, ending="")

    @staticmethod
    def _columns(rows):
        columns = []
        for row in rows:
            columns += [key for key in row if key not in columns]
        return columns

    @staticmethod
    def _cell(value):
        digits = settings.UNGAS_SIGNIFICANT_DIGITS
        if isinstance(value, (list, tuple)):
            return "(" + " ".join(BaseUngasCommand._cell(item) for item in value) + ")"
        if hasattr(value, "tolist"):
            return BaseUngasCommand._cell(value.tolist())
        return format_number(value, digits)

    def render_text(self, report):
        lines = ["{}: {}".format(key, self._cell(value)) for key, value in report.meta.items()]
        for name, rows in report.tables.items():
            if not rows:
                continue
            columns = self._columns(rows)
            cells = [[self._cell(row.get(column, "")) for column in columns] for row in rows]
            widths = [max(len(column), *(len(line[index]) for line in cells)) for index, column in enumerate(columns)]
            lines += ["", "[{}]".format(name), "  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip()]
            lines += ["  ".join(c.ljust(w) for c, w in zip(line, widths)).rstrip() for line in cells]
        return "\n".join(lines) + "\n"

    def render_json(self, report):
        data = dict(report.meta, **report.tables)
        return JSONRenderer().render(data).decode("utf-8") + "\n"

    def render_csv(self, report):
        buffer = io.StringIO()
        for index, (name, rows) in enumerate(report.tables.items()):
            if len(report.tables) > 1:
                buffer.write("{}# {}\n".format("\n" if index else "", name))
            columns = self._columns(rows)
            writer = csv.DictWriter(buffer, fieldnames=columns, lineterminator="\n")
            writer.writeheader()
            for row in rows:
                writer.writerow({column: self._cell(row.get(column, "")) for column in columns})
        return buffer.getvalue()
