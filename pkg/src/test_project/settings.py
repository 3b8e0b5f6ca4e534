# Django settings for the frackernel test project.

import os

DEBUG = True

PROJECT_DIR = os.path.dirname(__file__) + '/'

SECRET_KEY = 'frackernel-test-project-not-secret'

INSTALLED_APPS = (
    'frackernel',
)

DATABASES = {}

USE_TZ = True


# frackernel settings
FRACKERNEL_QUADRATURE = {
    'rel_tol': 1e-9,
    'max_depth': 40,
    'tail': 'analytic',
}
FRACKERNEL_DENSITY_RANGE = (1e-8, 1e12)

# Tabulation points of the 2gamma-stable profile; lower than the default
# to keep the test suite quick.
FRACKERNEL_STABLE_PROFILE_POINTS = 256


LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
        },
    },
    'loggers': {
        'frackernel': {
            'handlers': ['console'],
            'level': 'ERROR',
        },
    },
}
