# coding: utf-8
__all__ = []
__version__ = "2026.10.1"

default_app_config = "ungas.apps.UngasConfig"
