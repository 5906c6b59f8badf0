"""freecurve: syzygy-based invariants of reduced plane curves.

Computes minimal Jacobian-syzygy degrees (the exponents), freeness
classification, Tjurina and Milnor numbers, complement Betti polynomials,
Bourbaki-ideal data and line-arrangement combinatorics, with every step
backed by exact rational arithmetic.
"""

__version__ = "0.1.0"

from .invariants import CurveReport, MuResult, Verdict          # noqa: F401
from .ring import HomPoly                                       # noqa: F401
from .syzygy import ExponentProfile, exponent_profile, mdr      # noqa: F401
from .arrangement import Arrangement, Line                      # noqa: F401
from .parsing import parse_curve, parse_lines_file              # noqa: F401
from .report import analyze                                     # noqa: F401
