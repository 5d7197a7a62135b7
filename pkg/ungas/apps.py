# coding: utf-8
from django.apps import AppConfig
from django.utils.translation import gettext_lazy as _


class UngasConfig(AppConfig):
    name = "ungas"
    verbose_name = _("Réseaux sous-jacents des schémas d'association de groupes")
    default_auto_field = "django.db.models.AutoField"

    def ready(self):
        # Surcharge l'encodeur JSON de DRF pour les types numpy et complexes
        from ungas import utils  # noqa: F401
