"""
Errors Module

Exception hierarchy shared by the library and the command-line driver.
"""

from __future__ import annotations


class ClusterPosetError(Exception):
    """
    Base class for every error raised on purpose by this package.
    """


class QuiverError(ClusterPosetError, ValueError):
    """
    A quiver (or quiver file) is malformed, or a vertex is not usable
    for the requested operation.
    """


class NotRepresentationFinite(ClusterPosetError):
    """
    The quiver is not a connected Dynkin quiver, so its indecomposables
    cannot be enumerated.
    """


class EnumerationTooLarge(ClusterPosetError):
    """
    The quiver exceeds the configured enumeration rank.
    """


class PreconditionError(ClusterPosetError, ValueError):
    """
    The arguments of an operation violate its precondition.
    """


class InvariantViolation(ClusterPosetError, RuntimeError):
    """
    A property that must hold mathematically failed to hold.
    """
