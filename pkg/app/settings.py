import sys
from pathlib import Path

# Build paths inside the project
BASE_DIR = Path(__file__).resolve().parent.parent

# Detect if running tests
TESTING = 'test' in sys.argv or 'pytest' in sys.modules

# Import local config (optional: every key below has a default)
try:
    import config
except ImportError:
    config = None

SECRET_KEY = getattr(config, 'SECRET_KEY', 'kodaira-kit-local-only')
DEBUG = getattr(config, 'DEBUG', False)
ALLOWED_HOSTS = getattr(config, 'ALLOWED_HOSTS', [])

# Application definition
INSTALLED_APPS = [
    'django.contrib.contenttypes',
    # Third party
    'rest_framework',
    # Local apps
    'surfaces',
    'curves',
    'fibers',
    'discriminant',
    'chern',
    'deformations',
    'cli',
]

MIDDLEWARE = []

# No app persists anything; Django still wants a default database.
DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': BASE_DIR / 'db.sqlite3',
    }
}

# Internationalization
LANGUAGE_CODE = 'en-us'
TIME_ZONE = 'UTC'
USE_I18N = False
USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

# Redis and Celery
# Census sweeps fan out as tasks; eager mode keeps them in-process unless a worker is configured.
REDIS_URL = getattr(config, 'REDIS_URL', 'redis://localhost:6379/0')
CELERY_BROKER_URL = REDIS_URL
CELERY_RESULT_BACKEND = REDIS_URL
CELERY_ACCEPT_CONTENT = ['json']
CELERY_TASK_SERIALIZER = 'json'
CELERY_RESULT_SERIALIZER = 'json'
CELERY_TIMEZONE = TIME_ZONE
CELERY_TASK_ALWAYS_EAGER = getattr(config, 'CELERY_TASK_ALWAYS_EAGER', True)
CELERY_TASK_EAGER_PROPAGATES = True

# JSON documents
KODAIRA_KIT_SCHEMA = 'kodaira-kit/1'

# Kodaira census universe
CENSUS_MAX_N = getattr(config, 'CENSUS_MAX_N', 12)
CENSUS_MULTIPLE_FIBER_MULTIPLICITIES = getattr(config, 'CENSUS_MULTIPLE_FIBER_MULTIPLICITIES', [2, 3])
TREE_MAX_COMPONENTS = getattr(config, 'TREE_MAX_COMPONENTS', 8)

# Reduced curves on elliptic surfaces have multiplicity at most 3 at every point
ELLIPTIC_MAX_POINT_MULTIPLICITY = getattr(config, 'ELLIPTIC_MAX_POINT_MULTIPLICITY', 3)

# Chern ring
CHERN_TRUNCATION_DEGREE = getattr(config, 'CHERN_TRUNCATION_DEGREE', 4)
NORMAL_FORM_MAX_REWRITES = getattr(config, 'NORMAL_FORM_MAX_REWRITES', 64)

# Logging
LOG_DIR = BASE_DIR / 'logs'
LOG_DIR.mkdir(exist_ok=True)

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {name} {module}:{lineno} {message}',
            'style': '{',
        },
        'simple': {
            'format': '{levelname} {asctime} {message}',
            'style': '{',
        },
        'json': {
            'format': '{"time": "%(asctime)s", "level": "%(levelname)s", "logger": "%(name)s", "module": "%(module)s", "line": %(lineno)d, "message": "%(message)s"}',
        },
    },
    'handlers': {
        # stderr only; stdout carries command output
        'console': {
            'level': getattr(config, 'CONSOLE_LOG_LEVEL', 'WARNING'),
            'class': 'logging.StreamHandler',
            'formatter': 'simple',
        },
        'app_file': {
            'level': 'INFO',
            'class': 'logging.handlers.RotatingFileHandler',
            'filename': LOG_DIR / 'kodaira.log',
            'maxBytes': 10 * 1024 * 1024,  # 10MB
            'backupCount': 5,
            'formatter': 'verbose',
        },
        'error_file': {
            'level': 'ERROR',
            'class': 'logging.handlers.RotatingFileHandler',
            'filename': LOG_DIR / 'errors.log',
            'maxBytes': 10 * 1024 * 1024,
            'backupCount': 10,
            'formatter': 'verbose',
        },
        # Census sweeps and celery workers
        'census_file': {
            'level': 'INFO',
            'class': 'logging.handlers.RotatingFileHandler',
            'filename': LOG_DIR / 'census.log',
            'maxBytes': 10 * 1024 * 1024,
            'backupCount': 5,
            'formatter': 'json',
        },
    },
    'root': {
        'handlers': ['console', 'error_file'],
        'level': 'WARNING',
    },
    'loggers': {
        'surfaces': {
            'handlers': ['console', 'app_file', 'error_file'],
            'level': 'INFO',
            'propagate': False,
        },
        'curves': {
            'handlers': ['console', 'app_file', 'error_file'],
            'level': 'INFO',
            'propagate': False,
        },
        'fibers': {
            'handlers': ['console', 'app_file', 'census_file', 'error_file'],
            'level': 'INFO',
            'propagate': False,
        },
        'discriminant': {
            'handlers': ['console', 'app_file', 'error_file'],
            'level': 'INFO',
            'propagate': False,
        },
        'chern': {
            'handlers': ['console', 'app_file', 'error_file'],
            'level': 'INFO',
            'propagate': False,
        },
        'deformations': {
            'handlers': ['console', 'app_file', 'error_file'],
            'level': 'INFO',
            'propagate': False,
        },
        'cli': {
            'handlers': ['console', 'app_file', 'error_file'],
            'level': 'INFO',
            'propagate': False,
        },
        'celery': {
            'handlers': ['console', 'census_file', 'error_file'],
            'level': 'INFO',
            'propagate': False,
        },
    },
}

# Quieter logs when running tests
if TESTING:
    LOGGING['handlers']['console']['level'] = 'ERROR'
