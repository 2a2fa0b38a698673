"""Exact computation with finite B-modules, pairs of morphisms and
involutive modules."""
from . import bmod2, bmods, homology, lattice
from .bmods import InvModule
from .errors import BModError, LimitExceeded
from .lattice import BModule, Morphism

__version__ = "0.1.0"

__all__ = ["bmod2", "bmods", "homology", "lattice", "BModule", "InvModule", "Morphism",
           "BModError", "LimitExceeded", "__version__"]
