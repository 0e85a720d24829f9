"""Fragmentation of circle diffeomorphisms and SU(n) loops, Virasoro cocycles, exact Verma modules."""

from ._cfrag import *  # noqa: F401,F403
from ._cfrag import __doc__  # noqa: F401
