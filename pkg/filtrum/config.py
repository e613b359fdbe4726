'''
Enumeration caps and worker settings.

Settings resolve in this order: built-in defaults, the YAML configuration file,
environment overrides, explicit keyword overrides (the command line flags).
'''

import logging
import os
from os import path

import attr
import yaml

from filtrum.errors import DocumentError

log = logging.getLogger(__name__)

DEFAULT_CONFIG_FILE = 'filtrum.yml'
ENV_CONFIG = 'FILTRUM_CONFIG'
ENV_MAX_ENUM = 'FILTRUM_MAX_ENUM'
ENV_WORKERS = 'FILTRUM_WORKERS'


@attr.s(frozen=True, auto_attribs=True)
class Settings:
    max_enum_size: int = 24
    oracle_limit: int = 16
    max_product_size: int = 576
    max_points: int = 64
    max_opens: int = 4096
    max_ring_size: int = 36
    max_subfamily_scan: int = 16
    workers: int = 1


_FIELDS = [a.name for a in attr.fields(Settings)]
_current = Settings()


def current():
    return _current


def configure(settings):
    global _current
    _current = settings
    return settings


def load_file(file_path):
    with open(file_path, 'r') as stream:
        try:
            data = yaml.safe_load(stream) or {}
        except yaml.YAMLError as exc:
            raise DocumentError('cannot parse configuration {0}: {1}'.format(file_path, exc))
    if not isinstance(data, dict):
        raise DocumentError('configuration {0} must be a mapping'.format(file_path))
    unknown = sorted(set(data) - set(_FIELDS))
    if unknown:
        raise DocumentError('unknown configuration keys: {0}'.format(', '.join(unknown)))
    return data


def resolve(config_file=None, environ=None, **overrides):
    '''Builds Settings from defaults, the config file, the environment and overrides.'''
    environ = os.environ if environ is None else environ
    values = {}

    config_file = config_file or environ.get(ENV_CONFIG)
    if config_file is None and path.isfile(DEFAULT_CONFIG_FILE):
        config_file = DEFAULT_CONFIG_FILE
    if config_file:
        log.debug("reading configuration %s", config_file)
        values.update(load_file(config_file))

    for env_name, field in ((ENV_MAX_ENUM, 'max_enum_size'), (ENV_WORKERS, 'workers')):
        if env_name in environ:
            try:
                values[field] = int(environ[env_name])
            except ValueError:
                raise DocumentError('{0} must be an integer'.format(env_name))

    values.update({k: v for k, v in overrides.items() if v is not None})
    for key, value in values.items():
        if not isinstance(value, int) or value < 1:
            raise DocumentError('configuration value {0} must be a positive integer'.format(key))
    return Settings(**values)
