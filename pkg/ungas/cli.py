# coding: utf-8
"""
Point d'entrée en ligne de commande `ungas` : configure un Django minimal et délègue aux commandes de gestion.
"""
import sys

# Noms publics des commandes et commandes de gestion correspondantes
COMMANDS = {
    "group-info": "group_info",
    "chartable": "chartable",
    "scheme-check": "scheme_check",
    "simulate": "simulate",
    "optimize": "optimize",
    "bounds": "bounds",
    "reproduce": "reproduce",
}

# Configuration minimale
SETTINGS_DICT = {
    "SECRET_KEY": "ungas",
    "INSTALLED_APPS": ("django.contrib.contenttypes", "django.contrib.auth", "rest_framework", "ungas"),
    "DATABASES": {},
    "USE_I18N": True,
    "LANGUAGE_CODE": "fr",
    "USE_TZ": True,
    "LOGGING": {
        "version": 1,
        "disable_existing_loggers": False,
        "handlers": {"console": {"class": "logging.StreamHandler", "stream": "ext://sys.stderr"}},
        "loggers": {"ungas": {"handlers": ["console"], "level": "WARNING"}},
    },
}


def configure():
    from django.conf import settings

    if not settings.configured:
        settings.configure(**SETTINGS_DICT)

    import django

    django.setup()


def main(argv=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    configure()

    from django.core.management import execute_from_command_line

    if argv and argv[0] in COMMANDS:
        argv[0] = COMMANDS[argv[0]]
    execute_from_command_line(["ungas"] + argv)


if __name__ == "__main__":  # pragma: no cover
    main()
