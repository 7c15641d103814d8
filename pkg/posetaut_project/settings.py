"""
Django settings for posetaut_project project.

The project hosts no web surface; Django provides the management-command
CLI, configuration, logging, the DRF report schema and the optional corpus
ledger database.
"""

from pathlib import Path
import os

BASE_DIR = Path(__file__).resolve().parent.parent

SECRET_KEY = os.getenv("POSETAUT_SECRET_KEY", "posetaut-local-only-key")

DEBUG = os.getenv("POSETAUT_DEBUG", "0") == "1"

ALLOWED_HOSTS = []

POSETAUT_VERSION = "0.4.0"


# Application definition

INSTALLED_APPS = [
    "django.contrib.admin",
    "django.contrib.auth",
    "django.contrib.contenttypes",
    "django.contrib.sessions",
    "django.contrib.messages",
    'rest_framework',
    'poset_core',
    'catalog',
    'permgroup',
    'counting',
    'orbit_structure',
    'deconstruction',
    'bounds',
    'cli',
]

MIDDLEWARE = [
    "django.middleware.security.SecurityMiddleware",
    "django.contrib.sessions.middleware.SessionMiddleware",
    "django.middleware.common.CommonMiddleware",
    "django.contrib.auth.middleware.AuthenticationMiddleware",
    "django.contrib.messages.middleware.MessageMiddleware",
]

TEMPLATES = [
    {
        "BACKEND": "django.template.backends.django.DjangoTemplates",
        "DIRS": [],
        "APP_DIRS": True,
        "OPTIONS": {
            "context_processors": [
                "django.template.context_processors.request",
                "django.contrib.auth.context_processors.auth",
                "django.contrib.messages.context_processors.messages",
            ],
        },
    },
]


# Database (corpus ledger only)

DATABASES = {
    "default": {
        "ENGINE": "django.db.backends.sqlite3",
        "NAME": os.getenv("POSETAUT_DB", str(BASE_DIR / "db.sqlite3")),
    }
}

LANGUAGE_CODE = "en-us"

TIME_ZONE = "UTC"

USE_I18N = False

USE_TZ = True

MEDIA_ROOT = BASE_DIR / "media"

DEFAULT_AUTO_FIELD = "django.db.models.BigAutoField"

REST_FRAMEWORK = {
    'DEFAULT_RENDERER_CLASSES': (
        'rest_framework.renderers.JSONRenderer',
    ),
    'UNAUTHENTICATED_USER': None,
}

# Search and enumeration caps
AUT_ENUMERATION_CAP = int(os.getenv('POSETAUT_AUT_CAP', 10**6))
END_COUNT_CAP = int(os.getenv('POSETAUT_END_CAP', 16))
AUT_BRUTE_FORCE_MAX_N = int(os.getenv('POSETAUT_AUT_BRUTE_MAX_N', 7))
END_BRUTE_FORCE_MAX_N = int(os.getenv('POSETAUT_END_BRUTE_MAX_N', 6))

# Reproducibility
DEFAULT_SEED = int(os.getenv('POSETAUT_SEED', 20240601))
NONCUTVERTEX_POLICY = os.getenv('POSETAUT_POLICY', 'first')

# Exact arithmetic: lg bounds are rounded to multiples of 1/LG_PRECISION
LG_PRECISION = int(os.getenv('POSETAUT_LG_PRECISION', 10000))

EXCEPTIONAL_TABLE_PATH = BASE_DIR / 'permgroup' / 'data' / 'exceptional_groups.csv'
EXCEPTIONAL_TABLE_CHECKSUM_PATH = BASE_DIR / 'permgroup' / 'data' / 'exceptional_groups.sha256'

REPORT_ARCHIVE_PREFIX = os.getenv('POSETAUT_ARCHIVE_PREFIX', 'corpus/')

# Logging configuration
LOG_LEVEL = os.getenv('POSETAUT_LOG_LEVEL', 'WARNING')
LOG_FILE = os.getenv('POSETAUT_LOG_FILE')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '%(asctime)s %(levelname)s %(name)s: %(message)s',
        },
    },
    'handlers': {
        'console': {
            'level': 'DEBUG',
            'class': 'logging.StreamHandler',
            'formatter': 'plain',
        },
    },
    'loggers': {
        app: {
            'handlers': ['console'],
            'level': LOG_LEVEL,
            'propagate': False,
        }
        for app in (
            'poset_core', 'catalog', 'permgroup', 'counting',
            'orbit_structure', 'deconstruction', 'bounds', 'cli',
        )
    },
}

if LOG_FILE:
    LOGGING['handlers']['file'] = {
        'level': 'INFO',
        'class': 'logging.FileHandler',
        'filename': LOG_FILE,
        'formatter': 'plain',
    }
    for logger_config in LOGGING['loggers'].values():
        logger_config['handlers'].append('file')
