# flake8: noqa
from .plan import *
from .fidelity import *
