"""Exact dynamics of piecewise rotations over cyclotomic fields."""

from ._pwrot import *  # noqa: F401,F403
