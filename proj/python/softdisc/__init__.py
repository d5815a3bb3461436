"""Energy decomposition and minimality certification for soft-disc crystals."""

from ._core import *  # noqa: F401,F403
from ._core import DEFAULT_DELTA  # noqa: F401

__version__ = "1.0.0"
