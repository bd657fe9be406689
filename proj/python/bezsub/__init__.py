"""Exact Bezout-type subresultants for several univariate polynomials."""

try:
    from ._bezsub import *  # noqa: F401,F403
except ImportError:  # in-tree builds place the extension on sys.path directly
    from _bezsub import *  # noqa: F401,F403
