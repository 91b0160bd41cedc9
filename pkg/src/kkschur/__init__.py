"""Exact K-k-Schur functions: cores, weak strips, Pieri rules and rectangle quotients."""
from .cores import (
    Core,
    LevelContext,
    bounded_of_shape,
    core_shape,
    k_conjugate,
    to_bounded,
    to_core,
    word,
)
from .errors import KSchurError, NotDivisible
from .partitions import parse_partition
from .rectangles import RectangleMultiset
from .ring import (
    Basis,
    SymFunc,
    convert,
    divide_exact,
    expand_h,
    g,
    multiply,
    pieri_kk,
)

__version__ = "0.1.0"

__all__ = [
    "Basis", "Core", "KSchurError", "LevelContext", "NotDivisible", "RectangleMultiset", "SymFunc",
    "bounded_of_shape", "convert", "core_shape", "divide_exact", "expand_h", "g", "k_conjugate",
    "multiply", "parse_partition", "pieri_kk", "to_bounded", "to_core", "word",
]
