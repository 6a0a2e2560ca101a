# flake8: noqa
from . import errors, mixins
