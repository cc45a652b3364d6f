import os
from pathlib import Path
from dotenv import load_dotenv

# Charger variables d'environnement
load_dotenv()

# Build paths
BASE_DIR = Path(__file__).resolve().parent.parent

# Secret key
SECRET_KEY = os.environ.get('SECRET_KEY', 'django-insecure-default-key-for-dev')

# Debug mode
DEBUG = os.environ.get('DEBUG', 'False') == 'True'

ALLOWED_HOSTS = []

# Application definition
INSTALLED_APPS = [
    # Third party apps
    'rest_framework',

    # Project apps
    'core',
    'penta',
    'measures',
    'sets',
    'verification',
]

# Aucune persistance : les ensembles vivent dans des fichiers CSV/JSON
DATABASES = {}

# Internationalization
LANGUAGE_CODE = 'en-us'
TIME_ZONE = 'UTC'
USE_I18N = True
USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

# REST Framework settings (seuls le parseur et le rendu JSON sont utilisés)
REST_FRAMEWORK = {
    'DEFAULT_RENDERER_CLASSES': (
        'rest_framework.renderers.JSONRenderer',
    ),
    'DEFAULT_PARSER_CLASSES': (
        'rest_framework.parsers.JSONParser',
    ),
    'UNICODE_JSON': True,
    'COMPACT_JSON': True,
    'STRICT_JSON': True,
}

# === CONFIGURATION LOGIQUE BIFLOUE ===
BIFUZZY_DEFAULT_MODE = os.environ.get('BIFUZZY_DEFAULT_MODE', 'standard')
BIFUZZY_DEFAULT_COUPLE = os.environ.get('BIFUZZY_DEFAULT_COUPLE', 'min_max')
BIFUZZY_OUTPUT_DIGITS = int(os.environ.get('BIFUZZY_OUTPUT_DIGITS', '9'))

# === CONFIGURATION DU VÉRIFICATEUR ===
BIFUZZY_VERIFY_SAMPLES = int(os.environ.get('BIFUZZY_VERIFY_SAMPLES', '10000'))
BIFUZZY_VERIFY_SEED = int(os.environ.get('BIFUZZY_VERIFY_SEED', '0'))
BIFUZZY_VERIFY_COUPLES = os.environ.get('BIFUZZY_VERIFY_COUPLES', 'min_max')
BIFUZZY_VERIFY_GRID = int(os.environ.get('BIFUZZY_VERIFY_GRID', '200'))

# === LOGGING ===
# Tout part sur stderr : stdout reste réservé aux sorties des commandes
LOG_LEVEL = os.environ.get('LOG_LEVEL', 'WARNING')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {name} {message}',
            'style': '{',
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
        name: {'handlers': ['console'], 'level': LOG_LEVEL, 'propagate': False}
        for name in ('core', 'penta', 'measures', 'sets', 'verification')
    },
}
