"""Exact Legendrian and transverse invariants of iterated torus knots and their
connected sums."""

from legcable.atlas import (
    Classification,
    KnotExpr,
    MountainRange,
    NotCovered,
    Utp,
    classify,
    connected_sum,
    mountain_range,
    torus,
)
from legcable.parser import parse
from legcable.slopes import Slope, det, farey_path, reduce

__all__ = [
    "Classification",
    "KnotExpr",
    "MountainRange",
    "NotCovered",
    "Slope",
    "Utp",
    "classify",
    "connected_sum",
    "det",
    "farey_path",
    "mountain_range",
    "parse",
    "reduce",
    "torus",
]
