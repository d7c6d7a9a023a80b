"""Two-proton spin pair simulator.

Thin python layer over the C++ core: named spin states, pair Hamiltonians,
density-matrix and pulse dynamics, Bell-preparation circuits, fermion-qubit
encodings with a small variational solver, and proton-transfer kinetics.
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
