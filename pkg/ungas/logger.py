# coding: utf-8
import logging
from collections import namedtuple

from django.utils.timezone import now
from django.utils.translation import gettext_lazy as _

# Constat journalisé (conservé pour les rapports des commandes)
LogEntry = namedtuple("LogEntry", ["date", "level", "message"])


class Logger(object):
    """
    Collecteur de constats : journalise et conserve les messages émis pendant un calcul
    pour les restituer dans les rapports des commandes
    """

    KEY_DEBUG = "_DEBUG"
    KEY_INFO = "_INFO"
    KEY_WARNING = "_WARNING"
    KEY_ERROR = "_ERROR"
    # Clés de contextes
    CONTEXT_KEYS = {
        logging.DEBUG: KEY_DEBUG,
        logging.INFO: KEY_INFO,
        logging.WARNING: KEY_WARNING,
        logging.ERROR: KEY_ERROR,
    }

    def __init__(self, name=None, keep_messages=False):
        self.logger = logging.getLogger(name or __name__)
        self.entries = []
        self.keep_messages = keep_messages

    def _log(self, level, message, _context=None, *args, **kwargs):
        # Si le message est une liste, les fragments sont journalisés à la suite
        if isinstance(message, (list, tuple)):
            return [self._log(level, msg, _context, *args, **kwargs) for msg in message]

        message = str(message)
        try:
            message = message.format(*args, **kwargs)
        except (IndexError, KeyError):
            self.logger.warning(_("Le message n'est pas correctement formaté."))

        if self.keep_messages:
            self.entries.append(LogEntry(date=now(), level=logging.getLevelName(level), message=message))

        # Ajout du constat dans l'enregistrement cible si demandé
        if _context is not None and isinstance(_context, dict):
            section = _context.setdefault(Logger.CONTEXT_KEYS.get(level), [])
            if message not in section:
                section.append(message)
        self.logger.log(level, message)
        return message

    @property
    def messages(self):
        return [logentry.message for logentry in self.entries]

    def warning(self, message, *args, **kwargs):
        return self._log(logging.WARNING, message, None, *args, **kwargs)

    def context_info(self, context, message, *args, **kwargs):
        return self._log(logging.INFO, message, context, *args, **kwargs)

    def context_warning(self, context, message, *args, **kwargs):
        return self._log(logging.WARNING, message, context, *args, **kwargs)


class InternalError(Exception):
    """
    Classe d'exception interne, porte un message et le contexte de l'échec
    """

    def __init__(self, message, *args, **kwargs):
        self.message = str(message)
        self.args = args
        self.kwargs = kwargs

    def __str__(self):
        return self.message

    def __repr__(self):
        return "{}({!r})".format(type(self).__name__, self.message)


class GroupTableError(InternalError):
    """
    Table de multiplication ou paramètre de famille invalide
    """


class CharacterTableError(InternalError):
    """
    Table de caractères incohérente ou non calculable
    """


class SchemeError(InternalError):
    """
    Violation des axiomes du schéma d'association
    """


class DynamicsError(InternalError):
    """
    Hamiltonien ou état quantique invalide
    """


class OptimizationError(InternalError):
    """
    Problème d'optimisation mal posé
    """
