"""Exception types raised by the cobinary library.

All domain errors derive from :class:`CobinaryError` so callers (notably the
CLI) can distinguish bad mathematical input from programming mistakes.
"""

from __future__ import annotations


class CobinaryError(ValueError):
    """Base class for all domain errors."""


class NotATree(CobinaryError):
    """The edge set has a cycle or is disconnected."""


class ArityViolation(CobinaryError):
    """A node carries more edges in one slot than its type allows."""


class WallViolation(CobinaryError):
    """The edge set satisfies arity bounds but admits no planar embedding:
    reconstruction from a height order returns a different edge set."""


class CyclicHeights(CobinaryError):
    """The edge slopes admit no linear extension (unreachable for genuine
    trees; kept as a defensive check)."""


class TiedCoordinates(CobinaryError):
    """A point has two equal coordinates, so it lies on a wall and belongs
    to no open region."""


class NotARoot(CobinaryError):
    """An integer vector is not plus or minus a consecutive block of ones."""


class NonIntegralResult(CobinaryError):
    """An exact computation that must produce integers produced a proper
    fraction; signals non-cluster input."""


class SingularV(CobinaryError):
    """A matrix that must be invertible has determinant zero."""


class NotACluster(CobinaryError):
    """A column set fails the cluster compatibility inequalities."""


class VerificationFailed(CobinaryError):
    """A cross-check that is guaranteed for valid input did not hold."""
