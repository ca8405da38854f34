"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class PlanarLAError(Exception):
    """Base class for every error raised by this package."""


# graph-core


class GraphError(PlanarLAError):
    pass


class SelfLoop(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class MissingEdge(GraphError):
    pass


# coloring-state


class ColoringError(PlanarLAError):
    pass


class WouldExceedDegree(ColoringError):
    pass


class WouldCloseCycle(ColoringError):
    pass


class NotColored(ColoringError):
    pass


class ColorOutOfRange(ColoringError):
    pass


# engines


class StaleConfiguration(PlanarLAError):
    pass


class ExtensionFailed(PlanarLAError):
    """An extension could not be carried out. Always a bug, never expected."""


class UnreachableCase(ExtensionFailed):
    """Case dispatch fell through a branch that is impossible by proof."""


class EngineFailure(PlanarLAError):
    """The reduction loop got stuck on a nonempty graph.

    ``diagnostic`` carries a human-readable dump of the residual graph.
    """

    def __init__(self, message: str, diagnostic: str = "") -> None:
        super().__init__(message)
        self.diagnostic = diagnostic


class NoConfigurationFound(EngineFailure):
    pass


class QueueExhausted(EngineFailure):
    pass


# verifier-oracle and cli


class TooLarge(PlanarLAError):
    pass


class InvalidParams(PlanarLAError):
    pass


class ParseError(PlanarLAError):
    pass


class NonSimpleInput(ParseError):
    pass


class EdgeSetMismatch(PlanarLAError):
    pass
