import os

# Build paths inside the project like this: os.path.join(BASE_DIR, ...)
BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = "1"

DEBUG = True


# Application definition

INSTALLED_APPS = [
    "django.contrib.contenttypes",
    "django.contrib.auth",
    "rest_framework",
    "ungas",
]

# Aucun modèle : les calculs ne persistent rien
DATABASES = {}


# Internationalization

LANGUAGE_CODE = "fr"

TIME_ZONE = "UTC"

USE_I18N = True

USE_TZ = True


# Logging

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "simple": {"format": "%(asctime)s %(levelname)s [%(name)s] %(message)s"},
    },
    "handlers": {
        "console": {"class": "logging.StreamHandler", "stream": "ext://sys.stderr", "formatter": "simple"},
    },
    "loggers": {
        "ungas": {"handlers": ["console"], "level": "INFO"},
    },
}


# Ungas (valeurs par défaut dans ungas.settings)

UNGAS_OPTIMIZE_STARTS = 64
UNGAS_OPTIMIZE_WORKERS = 1
UNGAS_SIGNIFICANT_DIGITS = 12
