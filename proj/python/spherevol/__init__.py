"""Volumes and critical configurations of polytopes inscribed in the unit sphere."""

from ._spherevol import *  # noqa: F401,F403
from ._spherevol import __version__  # noqa: F401
