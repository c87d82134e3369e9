"""State-space algebra with two realizations.

The same four operations (magnitude, resize, group, combine) are realized
over classical phase-space densities, where magnitude is linear, and over
quantum complex amplitude vectors, where the square root of the magnitude
is linear and combination interferes. The scalar combination law connecting
the two lives in :mod:`statealgebra.algebra`.
"""

from . import algebra, classical, quantum, scenarios
from .algebra import (
    angle_to_corr,
    combined_magnitude,
    combined_magnitude_factored,
    corr_to_angle,
)
from .errors import BasisError, GridMismatchError

__version__ = "0.1.0"

__all__ = [
    "algebra",
    "classical",
    "quantum",
    "scenarios",
    "combined_magnitude",
    "combined_magnitude_factored",
    "corr_to_angle",
    "angle_to_corr",
    "GridMismatchError",
    "BasisError",
    "__version__",
]
