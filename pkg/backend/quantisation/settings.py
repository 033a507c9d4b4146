"""
Django settings for the quantisation project.

Only settings, app loading, logging and management commands are used;
no database is configured.
"""
import os
from pathlib import Path
from dotenv import load_dotenv

load_dotenv()

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

SECRET_KEY = os.getenv(
    'DJANGO_SECRET_KEY', 'quantisation-insecure-local-key'
)

DEBUG = os.getenv('DEBUG', 'False').lower() in ('1', 'true', 'yes')

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'rest_framework',
    'lie',
    'formal',
    'hamiltonian',
    'api',
]

DATABASES = {}

USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'


QUANTISATION = {
    'DEFAULT_RADIUS': os.getenv('QUANTISATION_DEFAULT_RADIUS', '8'),
    'MAX_RADIUS': os.getenv('QUANTISATION_MAX_RADIUS', '64'),
    'MODELS_DIR': BASE_DIR / 'data' / 'models',
}


LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{asctime} {levelname} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'root': {
        'handlers': ['console'],
        'level': os.getenv('LOG_LEVEL', 'WARNING'),
    },
}
