"""Cluster characters, generalized Chebyshev polynomials and positivity checks."""

from ._core import *  # noqa: F401,F403
from ._core import ClusterCharError, LaurentPoly

__all__ = [name for name in dir() if not name.startswith("_")]
