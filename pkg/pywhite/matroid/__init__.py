"""Package for explicit matroids, their minors, relaxations and the standard catalog."""

from .elements import *
from .matroid import *
from .minor import *
from .generate import *
from .relaxation import *
from .catalog import *
