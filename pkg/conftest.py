# coding: utf-8
"""
Configuration Django pour pytest (identique à ungas.runtests)
"""
from ungas.cli import configure

configure()
