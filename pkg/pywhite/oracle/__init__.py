"""Package for the brute-force oracle: fiber graphs, exhaustive verification, toric binomials and cross-checks."""

from .fiber import *
from .verify import *
from .binomial import *
from .cross import *
