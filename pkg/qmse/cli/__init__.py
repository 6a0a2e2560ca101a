# flake8: noqa
from .ingest import *
from .fixtures import *
from .main import *
