"""Weighted temporal graphs in edge-stream representation.

An edge ``(src, dst, t, lam, cost)`` can only be entered at time ``t`` and
takes ``lam`` time units to traverse. The graph keeps its edges sorted by
availability time; an edge's ``id`` is its position in that stream.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Iterable, Sequence

from tempo.errors import GraphFormatError, PathError, UnknownVertexError

Vertex = Hashable


class Objective(str, enum.Enum):
    """Which time value is traded off against cost."""

    FASTEST = "fastest"  # duration = arrival - start
    EARLIEST = "earliest"  # arrival time


def to_cost(value) -> Fraction:
    """Convert ``value`` to an exact cost, accepting ints, Fractions and decimal strings."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise GraphFormatError(f"invalid cost {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        # repr gives the shortest decimal that round-trips, e.g. 2.5 -> "2.5"
        value = repr(value)
    try:
        return Fraction(str(value).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise GraphFormatError(f"unparsable cost {value!r}") from exc


def format_cost(cost: Fraction) -> str:
    """Render a cost as a finite decimal when possible, else as ``p/q``."""
    if cost.denominator == 1:
        return str(cost.numerator)
    den = cost.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return f"{cost.numerator}/{cost.denominator}"
    digits = max(twos, fives)
    scaled = cost * 10**digits
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled.numerator), 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}"


@dataclass(frozen=True, slots=True)
class TemporalEdge:
    id: int
    src: Vertex
    dst: Vertex
    t: int
    lam: int
    cost: Fraction

    @property
    def arrival(self) -> int:
        return self.t + self.lam

    def as_tuple(self) -> tuple:
        return (self.src, self.dst, self.t, self.lam, self.cost)


def _check_time(name: str, value, line: int | None) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise GraphFormatError(f"{name} must be an integer, got {value!r}", line)
    if value < 0:
        raise GraphFormatError(f"negative {name} {value}", line)
    return value


class TemporalGraph:
    """Immutable weighted temporal graph.

    ``edges`` may be given in any order; they are stably sorted by
    availability time, so ties keep their input order. Vertices are interned
    in first-appearance order, with any explicitly listed ``vertices`` first.
    """

    __slots__ = ("vertices", "edges", "has_zero_cost", "_index", "_in", "_out")

    def __init__(self, edges: Iterable = (), vertices: Iterable[Vertex] = ()):
        raw = []
        for pos, item in enumerate(edges):
            if isinstance(item, TemporalEdge):
                item = item.as_tuple()
            if len(item) != 5:
                raise GraphFormatError(f"edge #{pos} must have 5 fields, got {len(item)}")
            src, dst, t, lam, cost = item
            if src == dst:
                raise GraphFormatError(f"self-loop at {src!r} in edge #{pos}")
            t = _check_time("availability time", t, None)
            lam = _check_time("traversal time", lam, None)
            cost = to_cost(cost)
            if cost < 0:
                raise GraphFormatError(f"negative cost {cost} in edge #{pos}")
            raw.append((src, dst, t, lam, cost))

        raw.sort(key=lambda e: e[2])
        order: dict[Vertex, int] = {}
        for v in vertices:
            order.setdefault(v, len(order))
        for src, dst, *_ in raw:
            order.setdefault(src, len(order))
            order.setdefault(dst, len(order))

        self.vertices: tuple[Vertex, ...] = tuple(order)
        self.edges: tuple[TemporalEdge, ...] = tuple(
            TemporalEdge(i, *e) for i, e in enumerate(raw)
        )
        self.has_zero_cost = any(e.cost == 0 for e in self.edges)
        self._index = order
        ins: dict[Vertex, list[int]] = {v: [] for v in order}
        outs: dict[Vertex, list[int]] = {v: [] for v in order}
        for e in self.edges:
            outs[e.src].append(e.id)
            ins[e.dst].append(e.id)
        self._in = {v: tuple(ids) for v, ids in ins.items()}
        self._out = {v: tuple(ids) for v, ids in outs.items()}

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def __contains__(self, v) -> bool:
        return v in self._index

    def __eq__(self, other) -> bool:
        if not isinstance(other, TemporalGraph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __repr__(self) -> str:
        return f"TemporalGraph(n={self.n}, m={self.m})"

    def require(self, *vs: Vertex) -> None:
        for v in vs:
            if v not in self._index:
                raise UnknownVertexError(v)

    def in_edges(self, v: Vertex) -> tuple[int, ...]:
        """Ids of edges entering ``v``, in stream order."""
        self.require(v)
        return self._in[v]

    def out_edges(self, v: Vertex) -> tuple[int, ...]:
        """Ids of edges leaving ``v``, in stream order."""
        self.require(v)
        return self._out[v]

    def distinct_departure_times(self, s: Vertex) -> int:
        """Number of distinct availability times among the edges leaving ``s``."""
        if s not in self._index:
            return 0
        return len({self.edges[i].t for i in self._out[s]})

    def to_text(self) -> str:
        return serialize_edge_stream(self)


def parse_edge_stream(text: str | bytes) -> TemporalGraph:
    """Parse the whitespace-separated ``src dst t lambda cost`` format.

    Blank lines and lines starting with ``#`` are ignored.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 5:
            raise GraphFormatError(f"expected 5 fields, got {len(parts)}", lineno)
        src, dst, t, lam, cost = parts
        if src == dst:
            raise GraphFormatError(f"self-loop at {src!r}", lineno)
        try:
            t_val, lam_val = int(t), int(lam)
        except ValueError as exc:
            raise GraphFormatError(f"non-integer time in {line!r}", lineno) from exc
        _check_time("availability time", t_val, lineno)
        _check_time("traversal time", lam_val, lineno)
        try:
            cost_val = to_cost(cost)
        except GraphFormatError as exc:
            raise GraphFormatError(str(exc), lineno) from None
        if cost_val < 0:
            raise GraphFormatError(f"negative cost {cost}", lineno)
        rows.append((src, dst, t_val, lam_val, cost_val))
    return TemporalGraph(rows)


def serialize_edge_stream(g: TemporalGraph) -> str:
    return "".join(
        f"{e.src} {e.dst} {e.t} {e.lam} {format_cost(e.cost)}\n" for e in g.edges
    )


@dataclass(frozen=True, slots=True)
class PathRecord:
    """A concrete temporal walk or path with its derived objective values."""

    edge_ids: tuple[int, ...]
    vertices: tuple[Vertex, ...]
    start: int
    arrival: int
    cost: Fraction

    @property
    def duration(self) -> int:
        return self.arrival - self.start

    @property
    def is_simple(self) -> bool:
        return len(set(self.vertices)) == len(self.vertices)

    def time_value(self, objective: Objective) -> int:
        return self.duration if Objective(objective) is Objective.FASTEST else self.arrival

    def vector(self, objective: Objective) -> tuple[int, Fraction]:
        return (self.time_value(objective), self.cost)

    def __len__(self) -> int:
        return len(self.edge_ids)


# A walk is represented by the same record; ``is_simple`` tells them apart.
WalkRecord = PathRecord


def make_record(g: TemporalGraph, edge_ids: Sequence[int], cost: Fraction | None = None) -> PathRecord:
    """Build a record without re-checking feasibility."""
    edges = g.edges
    first, last = edges[edge_ids[0]], edges[edge_ids[-1]]
    if cost is None:
        cost = sum((edges[i].cost for i in edge_ids), Fraction(0))
    verts = (first.src,) + tuple(edges[i].dst for i in edge_ids)
    return PathRecord(tuple(edge_ids), verts, first.t, last.arrival, cost)


def validate_walk(g: TemporalGraph, edge_ids: Sequence[int]) -> PathRecord:
    """Check connectivity and the chaining condition ``t_i + lam_i <= t_{i+1}``."""
    ids = tuple(edge_ids)
    if not ids:
        raise PathError("empty", "a temporal walk needs at least one edge")
    for i in ids:
        if isinstance(i, bool) or not isinstance(i, int) or not 0 <= i < g.m:
            raise PathError("unknown_edge", f"no edge with id {i!r}")
    for prev_id, next_id in zip(ids, ids[1:]):
        prev, nxt = g.edges[prev_id], g.edges[next_id]
        if prev.dst != nxt.src:
            raise PathError(
                "disconnected",
                f"edge {prev_id} ends at {prev.dst!r} but edge {next_id} starts at {nxt.src!r}",
            )
        if prev.arrival > nxt.t:
            raise PathError(
                "time",
                f"edge {prev_id} arrives at {prev.arrival} after edge {next_id} departs at {nxt.t}",
            )
    return make_record(g, ids)


def validate_path(g: TemporalGraph, edge_ids: Sequence[int]) -> PathRecord:
    """Like :func:`validate_walk` but also rejects repeated vertices."""
    rec = validate_walk(g, edge_ids)
    seen = set()
    for v in rec.vertices:
        if v in seen:
            raise PathError("repeated_vertex", f"vertex {v!r} visited twice")
        seen.add(v)
    return rec


def fresh_vertex(g: TemporalGraph, base: str) -> str:
    name = f"{base}'"
    while name in g:
        name += "'"
    return name


def transform_mcea_to_mcf(g: TemporalGraph, s: Vertex) -> tuple[TemporalGraph, Vertex]:
    """Add a super-source ``s'`` with a single edge ``(s', s, 0, 0, 0)`` at the head of the stream.

    Every edge of ``g`` keeps its relative order and shifts its id by one.
    (s, z)-paths of ``g`` correspond one-to-one to (s', z)-paths of the result
    by prepending edge 0; every such path starts at time 0, so its duration
    equals its arrival time.
    """
    g.require(s)
    s_new = fresh_vertex(g, str(s))
    gadget = (s_new, s, 0, 0, Fraction(0))
    g2 = TemporalGraph([gadget, *(e.as_tuple() for e in g.edges)], vertices=(s_new, *g.vertices))
    return g2, s_new
