# flake8: noqa
from .elements import *
from .graph import *
from .smiles import *
from .ordering import *
