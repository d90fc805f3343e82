"""Exception hierarchy shared by all tempo modules."""

from __future__ import annotations


class TempoError(Exception):
    """Base class for every error raised by this package."""


class GraphFormatError(TempoError, ValueError):
    """A graph file or edge tuple could not be parsed or violates an edge invariant."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class UnknownVertexError(TempoError, ValueError):
    def __init__(self, vertex):
        self.vertex = vertex
        super().__init__(f"unknown vertex {vertex!r}")


class PathError(TempoError, ValueError):
    """An edge sequence is not a temporal path.

    ``reason`` is one of ``empty``, ``unknown_edge``, ``disconnected``,
    ``time``, ``repeated_vertex`` or ``endpoints``.
    """

    def __init__(self, reason: str, message: str):
        self.reason = reason
        super().__init__(message)


class ZeroCostEdgeError(TempoError):
    """Enumeration was refused because the graph contains an edge of cost 0.

    With zero-cost edges the labelling enumerates walks, and cycle removal
    can yield the same path repeatedly, so the delay guarantee is lost. Use
    the Pareto queries in :mod:`tempo.pareto` instead.
    """


class InstanceTooLargeError(TempoError):
    """The brute-force oracle refused an instance above its size guard."""
