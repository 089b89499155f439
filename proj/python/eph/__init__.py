"""Cycles, Moebius maps, jet spectra and phase-space mechanics in the three EPH geometries."""

from ._eph import *  # noqa: F401,F403
from ._eph import InputError, DomainError, DegenerateError, Cycle, MoebiusMap

ELLIPTIC, PARABOLIC, HYPERBOLIC = -1, 0, 1
