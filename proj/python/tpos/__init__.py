"""Exact total positivity, flags and tori for GL_n.

Matrices are lists of rows; entries may be ints, Fractions or "n/d" strings.
Results use fractions.Fraction.
"""

from ._tpos import *  # noqa: F401,F403
from ._tpos import __doc__  # noqa: F401
