# coding: utf-8
import ast
import json
import logging
import os
from datetime import datetime
from functools import wraps
from json import JSONDecoder

import numpy as np
import yaml
from django.utils.translation import gettext_lazy as _
from rest_framework.renderers import JSONRenderer
from rest_framework.utils.encoders import JSONEncoder

# Logging
logger = logging.getLogger(__name__)


class singleton:
    """
    Décorateur pour définir une classe singleton
    """

    def __init__(self, _class):
        self._class = _class
        self.instance = None

    def __call__(self, *args, **kwargs):
        if self.instance is None:
            self.instance = self._class(*args, **kwargs)
        return self.instance


def timeit(name, log=logger.info):
    """
    Decorateur pour évaluer le temps d'exécution d'une méthode
    :param name: Nom lisible de la méthode
    :param log: Logger
    :return: Decorateur
    """

    def decorator(func):
        @wraps(func)
        def wrapped(*args, **kwargs):
            ts = datetime.now()
            log(_("[{}] démarré...").format(name))
            try:
                result = func(*args, **kwargs)
            except Exception as error:
                log(_("[{}] en échec : {}").format(name, error))
                raise
            te = datetime.now()
            log(_("[{}] terminé en {} !").format(name, te - ts))
            return result

        return wrapped

    return decorator


def _assert(condition, message=None, error=AssertionError, **context):
    """
    Remplace le mot-clé assert dans le cas où Python est exécuté avec optimisation
    :param condition: Condition à évaluer
    :param message: Message de l'exception
    :param error: Type d'exception à lever
    :param context: Contexte transmis à l'exception (exceptions internes uniquement)
    :return: Rien
    """
    if condition:
        return
    if context:
        raise error(message or "", **context)
    if message:
        raise error(message)
    raise error()


def str_to_num(value, force_int=False):
    """
    Permet de renvoyer le nombre correspondant à la valeur chaîne entrée en paramètre
    :param value: valeur à analyser
    :param force_int: Forcer le résultat en entier
    :return: valeur numérique correspondante ou None sinon
    """
    if value is None or isinstance(value, (int, float)):
        return value
    try:
        result = ast.literal_eval(str(value).strip())
        if isinstance(result, (int, float)):
            value = result
        else:
            return None
    except (SyntaxError, ValueError):
        try:
            cast = float if "." in str(value) or "e" in str(value).lower() else int
            value = cast(str(value))
        except ValueError:
            return None
    return int(value) if force_int else value


def str_to_list(value, cast=str_to_num):
    """
    Découpe une liste de valeurs séparées par des virgules
    :param value: Chaîne (ou liste déjà découpée)
    :param cast: Conversion appliquée à chaque élément
    :return: Liste de valeurs converties
    """
    if value is None:
        return []
    if isinstance(value, str):
        value = [item for item in value.replace(";", ",").split(",") if item.strip()]
    return [cast(item) for item in value]


def complex_pair(value):
    """
    Représentation sérialisable d'un nombre complexe
    :param value: Nombre complexe
    :return: Couple [partie réelle, partie imaginaire]
    """
    value = complex(value)
    return [value.real, value.imag]


def format_number(value, digits=12):
    """
    Formate un nombre avec un nombre fixe de chiffres significatifs
    :param value: Valeur (entière, réelle ou complexe)
    :param digits: Chiffres significatifs
    :return: Chaîne
    """
    if isinstance(value, (bool, np.bool_)):
        return str(bool(value))
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (complex, np.complexfloating)):
        if abs(value.imag) <= 0.0:
            return format_number(value.real, digits)
        return "{}{}{}j".format(
            format_number(value.real, digits), "+" if value.imag >= 0 else "-", format_number(abs(value.imag), digits)
        )
    if isinstance(value, (float, np.floating)):
        text = "{:.{}g}".format(float(value), digits)
        return "0" if text == "-0" else text
    return str(value)


class JsonEncoder(JSONEncoder):
    """
    Encodeur JSON spécifique (types numpy et nombres complexes)
    """

    def __init__(self, *args, **kwargs):
        if "sort_keys" not in kwargs:
            kwargs["sort_keys"] = True
        super().__init__(*args, **kwargs)

    def default(self, obj):
        if isinstance(obj, (complex, np.complexfloating)):
            return complex_pair(obj)
        if isinstance(obj, np.ndarray):
            return obj.tolist()
        if isinstance(obj, np.bool_):
            return bool(obj)
        if isinstance(obj, np.integer):
            return int(obj)
        if isinstance(obj, np.floating):
            return float(obj)
        if isinstance(obj, (set, frozenset)):
            return sorted(obj)
        return super().default(obj)


# Surcharge de l'encodeur JSON de DRF
JSONRenderer.encoder_class = JsonEncoder


# JSON serialization
def json_encode(data, cls=None, **options):
    return json.dumps(data, cls=cls or JsonEncoder, **options)


# JSON deserialization
def json_decode(data, content_encoding="utf-8", cls=None, **options):
    if isinstance(data, bytes):
        data = data.decode(content_encoding)
    return json.loads(data, cls=cls or JSONDecoder, **options)


def load_document(path):
    """
    Charge un document structuré (JSON ou YAML selon l'extension)
    :param path: Chemin du fichier
    :return: Données désérialisées
    """
    with open(path, "rb") as file:
        content = file.read()
    extension = os.path.splitext(path)[1].lower()
    if extension in (".yml", ".yaml"):
        return yaml.safe_load(content)
    return json_decode(content)


def dump_document(data, path):
    """
    Écrit un document structuré (YAML pour les extensions .yml/.yaml, JSON sinon)
    :param data: Données sérialisables
    :param path: Chemin du fichier
    :return: Rien
    """
    extension = os.path.splitext(path)[1].lower()
    with open(path, "w", encoding="utf-8") as file:
        if extension in (".yml", ".yaml"):
            yaml.safe_dump(data, file, allow_unicode=True, default_flow_style=None, sort_keys=False)
        else:
            file.write(json_encode(data, indent=2))
