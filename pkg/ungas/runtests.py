# coding: utf-8
"""
Lanceur autonome des tests de l'application avec la configuration minimale de la ligne de commande.
"""
import os
import sys

# Rend le paquet importable depuis une copie de travail
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))


def run_tests(labels=("ungas.tests",), verbosity=1):
    from django.conf import settings
    from django.test.utils import get_runner

    from ungas.cli import configure

    configure()
    runner = get_runner(settings)(verbosity=verbosity, interactive=False)
    failures = runner.run_tests(list(labels))
    sys.exit(bool(failures))


if __name__ == "__main__":  # pragma: no cover
    run_tests(sys.argv[1:] or ("ungas.tests",))
