#!/usr/bin/env python
import os
import sys


def main():
    os.environ.setdefault("DJANGO_SETTINGS_MODULE", "project.settings")
    try:
        from django.core.management import execute_from_command_line
    except ImportError as exc:
        raise ImportError(
            "Django est introuvable : est-il installé et accessible dans le PYTHONPATH ? "
            "L'environnement virtuel est-il activé ?"
        ) from exc
    from ungas.cli import COMMANDS

    argv = list(sys.argv)
    # Noms publics des commandes (group-info, scheme-check...)
    if len(argv) > 1 and argv[1] in COMMANDS:
        argv[1] = COMMANDS[argv[1]]
    execute_from_command_line(argv)


if __name__ == "__main__":
    main()
