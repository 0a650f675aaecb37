"""Direct construction of hat and 10-kite tilings from two real parameters.

>>> from hatgrid import FibParams, generate, verify
>>> t = generate(FibParams.from_pair("1/5", "1/7"), radius=6)
>>> verify(t).clean
True
"""

from .assemble import HatTile, Tiling, generate, verify
from .classify import HatType
from .errors import (DegenerateParameters, GenerationFailed, HatgridError, InconsistencyError,
                     MalformedRational, ResolutionError)
from .exactnum import PHI, PHI_BIG, GoldenNumber, make
from .fibline import FibParams
from .orient import Orientation

__version__ = "0.1.0"

__all__ = [
    "GoldenNumber", "make", "PHI", "PHI_BIG",
    "FibParams", "HatType", "Orientation", "HatTile", "Tiling",
    "generate", "verify",
    "HatgridError", "MalformedRational", "DegenerateParameters",
    "InconsistencyError", "ResolutionError", "GenerationFailed",
]
