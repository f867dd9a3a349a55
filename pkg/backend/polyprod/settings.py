from __future__ import annotations

from pathlib import Path

BASE_DIR = Path(__file__).resolve().parent.parent

# Offline tool: nothing is signed and no request is ever served.
SECRET_KEY = "polyprod-offline"
DEBUG = False

ALLOWED_HOSTS: list[str] = []

INSTALLED_APPS = [
    "rest_framework",
    "toric",
]

# Everything is computed in memory; results only ever land in files.
DATABASES: dict = {}

LANGUAGE_CODE = "en-us"
TIME_ZONE = "UTC"
USE_I18N = False
USE_TZ = True

DEFAULT_AUTO_FIELD = "django.db.models.BigAutoField"

REST_FRAMEWORK = {
    "UNAUTHENTICATED_USER": None,
}

TORIC = {
    "MAX_VERTICES": 63,
    "FACE_SET_LIMIT": 25,
    "BRUTE_FORCE_LIMIT": 12,
    "DEFAULT_MAX_DEGREE": 40,
    "MAX_DEGREE_CAP": 200,
    "GROWTH_MIN_DEGREE": 24,
    "GROWTH_RATIO": 4,
    "VERIFY_SEED": 1,
    "VERIFY_ITERATIONS": 200,
    "VERIFY_MAX_M": 10,
}

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {"plain": {"format": "%(levelname)s %(name)s: %(message)s"}},
    "handlers": {"console": {"class": "logging.StreamHandler", "formatter": "plain"}},
    "root": {"handlers": ["console"], "level": "WARNING"},
    "loggers": {"toric": {"handlers": ["console"], "level": "INFO", "propagate": False}},
}
