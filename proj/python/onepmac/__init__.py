"""Single-particle multiple-access channels.

Thin Python layer over the C++ core: classical polytopes of K-local MACs,
Helstrom-optimal fingerprinting violations and multi-level coherence
witnesses. Parties are 0-based here.
"""

from ._onepmac import *  # noqa: F401,F403
from ._onepmac import OnepmacError

__all__ = [name for name in dir() if not name.startswith("_")]
