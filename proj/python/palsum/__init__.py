"""Bounds and exact partial sums for reciprocal sums of base-b palindromes."""

from ._palsum import *  # noqa: F401,F403
from ._palsum import __doc__  # noqa: F401
