# flake8: noqa
from .ansatz import *
from .optimizer import *
from .folds import *
from .data import *
from .model import *
from .config import *
from .training import *
