"""Exact supertropical matrix algebra over the extended rationals (max-plus with a ghost layer)."""

from .adjoint import *  # noqa: F401,F403
from .charpoly import *  # noqa: F401,F403
from .digraph import *  # noqa: F401,F403
from .eigen import *  # noqa: F401,F403
from .element import *  # noqa: F401,F403
from .matrix import *  # noqa: F401,F403
from .oracle import *  # noqa: F401,F403

__version__ = "0.1.0"
