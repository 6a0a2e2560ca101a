# flake8: noqa
from .helpers import *
