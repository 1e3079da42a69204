"""Noncommutative circle-poset lattice toolkit.

Python surface of the C++ core: Aharonov-Bohm diffraction kinematics and
modular momentum, the 2N-point circle poset, lattice Dirac/connection/Weyl
operators, and the twisted continuum oracles. Matrices are numpy arrays.
"""

from ncircle._core import *  # noqa: F401,F403
from ncircle._core import __version__  # noqa: F401
