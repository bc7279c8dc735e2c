from .base import *

DEBUG = True

BALLEAN_LOG_LEVEL = 'DEBUG'

for _logger in LOGGING['loggers'].values():
    _logger['level'] = BALLEAN_LOG_LEVEL
