"""Counting simple (s, t)-paths of a static digraph via earliest-arrival counts.

For tau = 1..n-1 the digraph is unrolled into a temporal graph whose edges
exist at times 1..tau, plus one sink edge at time n. A static path with
l edges appears there once for every choice of l departure times out of
tau, so the earliest-arrival count y_tau satisfies
``y_tau = sum_l C(tau, l) * x_l`` with x_l the number of static paths with
exactly l edges, which is peeled off term by term.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable

from tempo.errors import GraphFormatError, TempoError, UnknownVertexError
from tempo.graph import TemporalGraph, Vertex
from tempo.oracle import count_earliest_arrival


class ReductionInvariantError(TempoError, AssertionError):
    """A structural property of the unrolled graphs failed to hold."""


class StaticDigraph:
    """Directed graph without self-loops or parallel edges."""

    def __init__(self, edges: Iterable[tuple[Vertex, Vertex]] = (), vertices: Iterable[Vertex] = ()):
        order: dict[Vertex, None] = dict.fromkeys(vertices)
        seen: set[tuple] = set()
        out: list[tuple[Vertex, Vertex]] = []
        for u, v in edges:
            if u == v:
                raise GraphFormatError(f"self-loop at {u!r}")
            if (u, v) in seen:
                raise GraphFormatError(f"duplicate edge {u!r} -> {v!r}")
            seen.add((u, v))
            order.setdefault(u)
            order.setdefault(v)
            out.append((u, v))
        self.vertices: tuple[Vertex, ...] = tuple(order)
        self.edges: tuple[tuple[Vertex, Vertex], ...] = tuple(out)
        self._succ: dict[Vertex, list[Vertex]] = {v: [] for v in self.vertices}
        for u, v in self.edges:
            self._succ[u].append(v)

    @property
    def n(self) -> int:
        return len(self.vertices)

    def __contains__(self, v) -> bool:
        return v in self._succ

    def __repr__(self) -> str:
        return f"StaticDigraph(n={self.n}, m={len(self.edges)})"

    def successors(self, v: Vertex) -> list[Vertex]:
        return self._succ[v]

    def require(self, *vs: Vertex) -> None:
        for v in vs:
            if v not in self._succ:
                raise UnknownVertexError(v)

    def to_text(self) -> str:
        return "".join(f"{u} {v}\n" for u, v in self.edges)


def parse_static_digraph(text: str | bytes) -> StaticDigraph:
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    edges = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"expected 2 fields, got {len(parts)}", lineno)
        edges.append((parts[0], parts[1]))
    try:
        return StaticDigraph(edges)
    except GraphFormatError as exc:
        raise GraphFormatError(str(exc)) from None


def build_g_tau(g: StaticDigraph, s: Vertex, t: Vertex, tau: int) -> tuple[TemporalGraph, Vertex, Vertex]:
    """Unroll ``g`` over times 1..tau and attach a sink ``z`` behind ``t`` at time n.

    All edges get traversal time 1 and cost 1; the cost plays no role here.
    """
    g.require(s, t)
    n = g.n
    if not 1 <= tau <= n - 1:
        raise ValueError(f"tau must lie in 1..{n - 1}, got {tau}")
    z = "z"
    while z in g:
        z += "'"
    timed = [(u, v, i, 1, 1) for i in range(1, tau + 1) for u, v in g.edges]
    timed.append((t, z, n, 1, 1))
    return TemporalGraph(timed, vertices=(*g.vertices, z)), s, z


def count_earliest_arrival_paths(g: TemporalGraph, s: Vertex, z: Vertex) -> int:
    """Number of temporal (s, z)-paths that reach ``z`` at the earliest possible time."""
    return count_earliest_arrival(g, s, z)[0]


@dataclass(frozen=True)
class ReductionStep:
    tau: int
    y: int  # earliest-arrival paths in the unrolled graph
    x: int  # static paths with exactly tau edges


def reduction_trace(g: StaticDigraph, s: Vertex, t: Vertex) -> list[ReductionStep]:
    g.require(s, t)
    if s == t:
        raise ValueError("source and target must differ")
    n = g.n
    steps: list[ReductionStep] = []
    xs: list[int] = []
    prev_y = 0
    for tau in range(1, n):
        gt, src, sink = build_g_tau(g, s, t, tau)
        at_best, best, total = count_earliest_arrival(gt, src, sink)
        if total and (best != n + 1 or at_best != total):
            raise ReductionInvariantError(
                f"tau={tau}: {total} paths but {at_best} arrive at the minimum {best}, expected all at {n + 1}"
            )
        y = at_best
        x = y - sum(comb(tau, i) * xs[i - 1] for i in range(1, tau))
        if y < prev_y:
            raise ReductionInvariantError(f"y decreased from {prev_y} to {y} at tau={tau}")
        if x < 0:
            raise ReductionInvariantError(f"negative x={x} at tau={tau}")
        xs.append(x)
        steps.append(ReductionStep(tau, y, x))
        prev_y = y
    return steps


def count_static_st_paths(g: StaticDigraph, s: Vertex, t: Vertex) -> int:
    """Number of simple (s, t)-paths, obtained through earliest-arrival counting."""
    return sum(step.x for step in reduction_trace(g, s, t))


def count_simple_paths_dfs(g: StaticDigraph, s: Vertex, t: Vertex) -> int:
    """Textbook exhaustive DFS count of simple (s, t)-paths."""
    g.require(s, t)
    if s == t:
        raise ValueError("source and target must differ")
    visited = {s}

    def walk(v: Vertex) -> int:
        if v == t:
            return 1
        total = 0
        for w in g.successors(v):
            if w not in visited:
                visited.add(w)
                total += walk(w)
                visited.remove(w)
        return total

    return walk(s)
