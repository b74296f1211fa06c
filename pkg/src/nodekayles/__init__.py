"""Node Kayles: positions, Grundy search, strategies, and machine-simulation graphs."""

from .engine import KERNEL_BACKEND
from .graph import GroundGraph, Position

__all__ = ["GroundGraph", "Position", "KERNEL_BACKEND"]
__version__ = "0.1.0"
