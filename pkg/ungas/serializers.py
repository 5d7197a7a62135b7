# coding: utf-8
from django.utils.translation import gettext_lazy as _
from rest_framework import serializers

from ungas.groups import FamilySpec, load_table
from ungas.logger import GroupTableError
from ungas.optimize import METHODS
from ungas.settings import settings


class BaseCustomSerializer(serializers.Serializer):
    """
    Serializer de base (validation seule, aucune persistance)
    """

    def create(self, validated_data):
        pass

    def update(self, instance, validated_data):
        pass


class GroupTableSerializer(BaseCustomSerializer):
    """
    Serializer du fichier de table de groupe {n, table}
    """

    n = serializers.IntegerField(min_value=1, label=_("ordre"))
    table = serializers.ListField(
        child=serializers.ListField(child=serializers.IntegerField(min_value=0)), label=_("table de multiplication")
    )
    labels = serializers.ListField(child=serializers.CharField(), required=False, label=_("libellés"))
    name = serializers.CharField(required=False, default="table", label=_("nom"))

    def validate_n(self, value):
        if value > settings.UNGAS_MAX_ORDER:
            raise serializers.ValidationError(
                _("Ordre {} au-delà de la limite de {} éléments.").format(value, settings.UNGAS_MAX_ORDER)
            )
        return value

    def validate(self, attrs):
        n, table = attrs["n"], attrs["table"]
        if len(table) != n or any(len(row) != n for row in table):
            raise serializers.ValidationError(_("La table n'est pas carrée ({} lignes attendues de {}).").format(n, n))
        labels = attrs.get("labels")
        if labels is not None and len(labels) != n:
            raise serializers.ValidationError(_("{} libellés attendus.").format(n))
        return attrs

    def create(self, validated_data):
        try:
            return load_table(validated_data["table"], name=validated_data["name"], labels=validated_data.get("labels"))
        except GroupTableError as error:
            raise serializers.ValidationError(str(error))


class FamilySerializer(BaseCustomSerializer):
    """
    Serializer d'une famille de groupes intégrée
    """

    family = serializers.CharField(label=_("famille"))
    parameter = serializers.IntegerField(label=_("paramètre"))

    def validate(self, attrs):
        try:
            attrs["spec"] = FamilySpec.parse(attrs["family"], attrs["parameter"])
        except GroupTableError as error:
            raise serializers.ValidationError(str(error))
        return attrs


class SimulateSerializer(BaseCustomSerializer):
    """
    Serializer des options de simulation
    """

    couplings = serializers.ListField(child=serializers.FloatField(), label=_("couplages"))
    t_max = serializers.FloatField(min_value=0.0, label=_("temps final"))
    steps = serializers.IntegerField(min_value=1, default=101, label=_("nombre de points"))
    pairs = serializers.ListField(
        child=serializers.ListField(child=serializers.IntegerField(min_value=0), min_length=2, max_length=2),
        required=False,
        default=list,
        label=_("couples de strates"),
    )


class OptimizeSerializer(BaseCustomSerializer):
    """
    Serializer des options d'optimisation : une strate (optimum analytique) ou un couple (optimum numérique)
    """

    stratum = serializers.IntegerField(min_value=0, required=False, allow_null=True, label=_("strate"))
    pair = serializers.ListField(
        child=serializers.IntegerField(min_value=0),
        min_length=2,
        max_length=2,
        required=False,
        allow_null=True,
        label=_("couple de strates"),
    )
    t_star = serializers.FloatField(default=1.0, label=_("temps d'optimisation"))
    branches = serializers.ListField(
        child=serializers.IntegerField(), required=False, allow_null=True, label=_("entiers de branche")
    )
    phi = serializers.FloatField(default=0.0, label=_("phase globale"))
    starts = serializers.IntegerField(min_value=1, required=False, allow_null=True, label=_("départs"))
    method = serializers.ChoiceField(choices=METHODS, required=False, allow_null=True, label=_("méthode"))
    workers = serializers.IntegerField(min_value=1, required=False, allow_null=True, label=_("fils d'exécution"))

    def validate_t_star(self, value):
        if value <= 0:
            raise serializers.ValidationError(_("Le temps d'optimisation doit être strictement positif."))
        return value

    def validate(self, attrs):
        has_stratum, has_pair = attrs.get("stratum") is not None, attrs.get("pair") is not None
        if has_stratum == has_pair:
            raise serializers.ValidationError(_("Indiquer soit une strate, soit un couple de strates."))
        if has_pair and attrs["pair"][0] == attrs["pair"][1]:
            raise serializers.ValidationError(_("Les deux strates du couple doivent être distinctes."))
        return attrs


class ReproduceSerializer(BaseCustomSerializer):
    """
    Serializer des options de reproduction des tables publiées
    """

    table = serializers.CharField(label=_("table"))
    k = serializers.IntegerField(min_value=1, required=False, allow_null=True, label=_("paramètre k"))

    def validate(self, attrs):
        from ungas.reproduce import TABLES

        if attrs["table"] not in TABLES:
            raise serializers.ValidationError(
                _("Table inconnue : {} (tables disponibles : {}).").format(attrs["table"], ", ".join(TABLES))
            )
        return attrs
