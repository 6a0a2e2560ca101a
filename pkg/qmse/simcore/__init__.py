# flake8: noqa
from .gates import *
from .circuit import *
from .pauli import *
from .statevector import *
