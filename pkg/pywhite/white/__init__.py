"""Package for exchange sequences and the solver connecting tuples of bases of paving matroids."""

from .context import *
from .sequence import *
from .lemma import *
from .star import *
from .solver import *
