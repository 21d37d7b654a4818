"""
Django settings for the PORAC bench project.

The project has no web surface: Django provides configuration, logging and
the management-command CLI. Every PORAC_* value can be overridden from the
environment or a .env file.
"""

import os
from pathlib import Path
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.getenv('SECRET_KEY', 'django-insecure-default-key-for-dev')

DEBUG = os.getenv('DEBUG', 'False').lower() == 'true'

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
  "rest_framework",
  "apps.porac",
]

# No persistence: reports are written to stdout only.
DATABASES = {}


# Internationalization

LANGUAGE_CODE = "en-us"

TIME_ZONE = "UTC"

USE_I18N = False

USE_TZ = True


# PORAC settings

# Default seed of every oracle command when --seed is not given.
PORAC_DEFAULT_SEED = int(os.getenv('PORAC_SEED', '20240601'))

# Worker cap when --threads is not given.
PORAC_THREADS = int(os.getenv('PORAC_THREADS', str(os.cpu_count() or 1)))

PORAC_ANALYTIC_TOL = float(os.getenv('PORAC_ANALYTIC_TOL', '1e-9'))
PORAC_ORACLE_TOL = float(os.getenv('PORAC_ORACLE_TOL', '1e-3'))

# Exhaustive enumeration limits: d**N strings and d**N * N Born evaluations.
PORAC_MAX_STRINGS = int(os.getenv('PORAC_MAX_STRINGS', str(10**6)))
PORAC_MAX_BORN_EVALUATIONS = int(os.getenv('PORAC_MAX_BORN_EVALUATIONS', str(10**7)))


# Logging

LOG_LEVEL = os.getenv('LOG_LEVEL', 'WARNING').upper()

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '%(levelname)s %(asctime)s %(name)s %(message)s',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'verbose',
        },
    },
    'loggers': {
        'apps.porac': {
            'handlers': ['console'],
            'level': LOG_LEVEL,
            'propagate': False,
        },
    },
}
