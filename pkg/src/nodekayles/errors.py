"""Exception types shared across the package."""

from __future__ import annotations


class NodeKaylesError(Exception):
    """Base class for all package errors."""


class GraphFormatError(NodeKaylesError):
    """Raised when raw adjacency data violates the undirected-graph coding."""


class MoveNotAvailableError(NodeKaylesError):
    """Raised when a move names a node that is not alive in the position."""


class EmptySequenceError(NodeKaylesError):
    """Raised when an operation requires at least one move."""


class BudgetExceededError(NodeKaylesError):
    """Raised when a search exceeds its node-count or wall-clock budget."""


class MachineFormatError(NodeKaylesError):
    """Raised when a machine description fails validation."""


class OddTimeBoundError(MachineFormatError):
    """Raised when the step budget for an input is odd or below two."""


class InputTooLongError(MachineFormatError):
    """Raised when the input string does not fit on the tape."""


class HeadOutOfRangeError(NodeKaylesError):
    """Raised when a step would move the head off the tape."""


class MalformedRoundError(NodeKaylesError):
    """Raised when a set of moves does not assemble into a configuration."""


class LengthMismatchError(NodeKaylesError):
    """Raised when two move lists cannot be interleaved."""


class UnknownNodeError(NodeKaylesError):
    """Raised when a node id has no label in a simulation graph."""
