"""Brute-force ground truth: exhaustive DFS over temporal paths and walks.

Deliberately naive and exponential. Every other module is checked
against it on small instances.
"""

from __future__ import annotations

import os
from fractions import Fraction

from tempo.errors import InstanceTooLargeError
from tempo.graph import Objective, PathRecord, TemporalGraph, Vertex, make_record

DEFAULT_SIZE_GUARD = 24


def size_guard() -> int:
    """Maximum vertex count the oracle accepts; ``TEMPO_SIZE_GUARD`` overrides it."""
    raw = os.environ.get("TEMPO_SIZE_GUARD")
    return int(raw) if raw else DEFAULT_SIZE_GUARD


def _check_size(g: TemporalGraph, guard: int | None) -> None:
    limit = size_guard() if guard is None else guard
    if g.n > limit:
        raise InstanceTooLargeError(f"{g.n} vertices exceeds the oracle size guard of {limit}")


def _dfs(g: TemporalGraph, s: Vertex, z: Vertex, simple: bool, max_len: int) -> list[tuple[int, ...]]:
    found: list[tuple[int, ...]] = []
    path: list[int] = []
    used: set[int] = set()
    on_path = {s}

    def extend(v: Vertex, ready: int) -> None:
        if len(path) >= max_len:
            return
        for eid in g.out_edges(v):
            e = g.edges[eid]
            if e.t < ready or eid in used:
                continue
            if simple and e.dst in on_path:
                continue
            path.append(eid)
            used.add(eid)
            fresh = e.dst not in on_path
            on_path.add(e.dst)
            if e.dst == z:
                found.append(tuple(path))
            extend(e.dst, e.arrival)
            if fresh:
                on_path.discard(e.dst)
            used.discard(eid)
            path.pop()

    extend(s, 0)
    found.sort()
    return found


def all_temporal_paths(g: TemporalGraph, s: Vertex, z: Vertex, guard: int | None = None) -> list[PathRecord]:
    """Every simple temporal (s, z)-path, sorted by edge-id sequence."""
    g.require(s, z)
    _check_size(g, guard)
    if s == z:
        return []
    return [make_record(g, ids) for ids in _dfs(g, s, z, True, g.m)]


def all_temporal_walks(
    g: TemporalGraph, s: Vertex, z: Vertex, max_len: int, guard: int | None = None
) -> list[PathRecord]:
    """Every temporal (s, z)-walk with at most ``max_len`` edges.

    Vertices may repeat; an edge id is used at most once since it departs
    at a single fixed time.
    """
    g.require(s, z)
    _check_size(g, guard)
    if max_len > g.m:
        raise ValueError(f"max_len {max_len} exceeds m={g.m}")
    return [make_record(g, ids) for ids in _dfs(g, s, z, False, max_len)]


def vector_dominates(p: tuple[int, Fraction], q: tuple[int, Fraction]) -> bool:
    return p[0] <= q[0] and p[1] <= q[1] and p != q


def efficient_filter(paths: list[PathRecord], objective: Objective) -> list[PathRecord]:
    """Paths whose (time value, cost) vector no other path's vector dominates."""
    vecs = [p.vector(objective) for p in paths]
    return [
        p
        for p, v in zip(paths, vecs)
        if not any(vector_dominates(w, v) for w in vecs)
    ]


def nondominated_vectors(paths: list[PathRecord], objective: Objective) -> list[tuple[int, Fraction]]:
    """Distinct nondominated vectors, sorted by time value."""
    return sorted({p.vector(objective) for p in efficient_filter(paths, objective)})


def efficient_paths(g: TemporalGraph, s: Vertex, z: Vertex, objective: Objective) -> list[PathRecord]:
    return efficient_filter(all_temporal_paths(g, s, z), objective)


def count_earliest_arrival(g: TemporalGraph, s: Vertex, z: Vertex) -> tuple[int, int | None, int]:
    """Brute-force (count at the earliest arrival, earliest arrival, total paths).

    Counts without materialising records, for the counting reduction.
    """
    g.require(s, z)
    if s == z:
        return 0, None, 0
    best: int | None = None
    at_best = 0
    total = 0
    on_path = {s}
    edges = g.edges
    out = {v: [edges[i] for i in g.out_edges(v)] for v in g.vertices}

    stack = [(s, 0, iter(out[s]))]
    while stack:
        v, ready, it = stack[-1]
        for e in it:
            if e.t < ready or e.dst in on_path:
                continue
            if e.dst == z:
                total += 1
                if best is None or e.arrival < best:
                    best, at_best = e.arrival, 1
                elif e.arrival == best:
                    at_best += 1
            on_path.add(e.dst)
            stack.append((e.dst, e.arrival, iter(out[e.dst])))
            break
        else:
            stack.pop()
            if stack:
                on_path.discard(v)
    return at_best, best, total
