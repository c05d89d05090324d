from pathlib import Path
from decouple import config

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


# Quick-start development settings - unsuitable for production
# See https://docs.djangoproject.com/en/5.2/howto/deployment/checklist/

# The project serves no requests; the key only satisfies Django's startup checks.
SECRET_KEY = config(
    'SECRET_KEY',
    default='django-insecure-solvsite-lefschetz-local-only',
)

DEBUG = config('DEBUG', default=False, cast=bool)

ALLOWED_HOSTS = []

# Application definition

INSTALLED_APPS = [
    'lefschetz.apps.LefschetzConfig',
]

MIDDLEWARE = []

TEMPLATES = [
    {
        'BACKEND': 'django.template.backends.django.DjangoTemplates',
        'DIRS': [],
        'APP_DIRS': True,
        'OPTIONS': {
            'context_processors': [],
        },
    },
]


# Database
# Every computation runs on in-memory values; nothing is persisted.

DATABASES = {}


# Internationalization
# https://docs.djangoproject.com/en/5.2/topics/i18n/

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True


# --- Lefschetz computations ---

# Seed for the rational sampling used by the parametric certifier.
LEFSCHETZ_SEED = config('LEFSCHETZ_SEED', default=20130722, cast=int)

# Number of sample points and the box they are drawn from:
# numerators in [-RANGE * DENOMINATOR, RANGE * DENOMINATOR], denominators in 1..DENOMINATOR.
LEFSCHETZ_SAMPLE_COUNT = config('LEFSCHETZ_SAMPLE_COUNT', default=200, cast=int)
LEFSCHETZ_SAMPLE_RANGE = 10
LEFSCHETZ_SAMPLE_DENOMINATOR = 10

# Points used when checking that polynomial certificates specialize correctly.
LEFSCHETZ_SPECIALIZATION_POINTS = 20

LEFSCHETZ_LOG_LEVEL = config('LEFSCHETZ_LOG_LEVEL', default='WARNING')


# --- Logging ---

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'loggers': {
        'lefschetz': {
            'handlers': ['console'],
            'level': LEFSCHETZ_LOG_LEVEL,
            'propagate': False,
        },
    },
}
