"""Exceptions shared across the compiler."""

from __future__ import annotations


class FibbraidError(Exception):
    """Base class for compiler errors."""


class InfeasibleTargetError(FibbraidError):
    """The requested target cannot be met by any weave (winding/endpoint clash)."""


class NetFormatError(FibbraidError):
    """An epsilon-net cache file has the wrong version or is corrupt."""


class NetTooCoarseError(FibbraidError):
    """The epsilon-net is too coarse for the Solovay-Kitaev contraction."""

    def __init__(self, message: str, level: int, epsilon: float):
        super().__init__(message)
        self.level = level
        self.epsilon = epsilon
