# flake8: noqa
from .matrix import *
from .tanimoto import *
from .quantum import *
