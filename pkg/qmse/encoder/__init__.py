# flake8: noqa
from .params import *
from .structure import *
from .fingerprint import *
from .pca import *
from .angle import *
