"""Combinatorics of the type A Weyl groupoid: corner moves, shuffles, the
Sergeev-Veselov action, affine simple-root sequences and pairing criteria."""
from .diagram import OddRoot, Rank, Shuffle
from .orbit import OrbitGraph, RotClass, ShuffleClass
from .sv import BlockSpec, Weight

__all__ = ["BlockSpec", "OddRoot", "OrbitGraph", "Rank", "RotClass", "Shuffle", "ShuffleClass", "Weight"]
__version__ = "0.1.0"
