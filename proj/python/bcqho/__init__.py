"""Bicomplex numbers and the bicomplex quantum harmonic oscillator."""

from ._bcqho import *  # noqa: F401,F403
from ._bcqho import __version__  # noqa: F401
