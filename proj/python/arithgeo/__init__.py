"""Quadratic fields, quaternion algebras and arithmetic geodesics."""

from ._arithgeo import *  # noqa: F401,F403
from ._arithgeo import version as __version__
