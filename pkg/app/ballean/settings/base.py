"""
Django settings for the ballean project.

The project has no web surface: Django provides the settings layer, the app
registry and the management-command entry point for scenario runs.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.2/ref/settings/
"""

from pathlib import Path
import os

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent.parent


# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.environ.get('DJANGO_SECRET_KEY', 'django-insecure-ballean-local-only')

DEBUG = False

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'django.contrib.contenttypes',
    'django.contrib.auth',
    'rest_framework',
    'core',
    'coarse',
    'orders',
    'search',
]


# Scenario runs never touch a database; sqlite keeps Django's checks quiet.

DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': BASE_DIR / 'db.sqlite3',
    }
}


# Internationalization
# https://docs.djangoproject.com/en/5.2/topics/i18n/

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'


# Logging goes to stderr only, reports go to stdout or --output.

BALLEAN_LOG_LEVEL = os.environ.get('BALLEAN_LOG_LEVEL', 'WARNING')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '{levelname} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'plain',
            'stream': 'ext://sys.stderr',
        },
    },
    'loggers': {
        app: {
            'handlers': ['console'],
            'level': BALLEAN_LOG_LEVEL,
            'propagate': False,
        }
        for app in ('coarse', 'orders', 'search', 'core')
    },
}


# Scenario and report configuration

BALLEAN_SCENARIO_VERSION = 1

BALLEAN_REPORT_FORMAT = os.environ.get('BALLEAN_REPORT_FORMAT', 'json')
BALLEAN_REPORT_INDENT = int(os.environ.get('BALLEAN_REPORT_INDENT', 2))

# Backtracking budget counted in assumptions; empty means unlimited.
_max_steps = os.environ.get('BALLEAN_SEARCH_MAX_STEPS', '')
BALLEAN_SEARCH_MAX_STEPS = int(_max_steps) if _max_steps else None

# Fixed pair (l, r) for order_from_two_selector, e.g. "3,5". Empty means the
# canonically first pair.
_split = os.environ.get('BALLEAN_SPLIT_POINTS', '')
BALLEAN_SPLIT_POINTS = tuple(_split.split(',')) if _split else None

# n-gon vertices are rounded to this denominator; distances are compared on
# squared values with the given slack.
BALLEAN_NGON_DENOMINATOR = int(os.environ.get('BALLEAN_NGON_DENOMINATOR', 10**6))
BALLEAN_NGON_TOLERANCE = os.environ.get('BALLEAN_NGON_TOLERANCE', '1/100000')
