"""Pareto fronts and polynomial-time decision queries.

These run Phase 1 only and so also accept zero-cost edges. Labels may then
stand for walks with zero-cost cycles; such a walk has the same cost and
arrival as the path obtained by cutting the cycles out, so the front is
unchanged and witnesses are repaired by :func:`remove_zero_cost_cycles`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from tempo.errors import PathError
from tempo.graph import Objective, PathRecord, TemporalGraph, Vertex, format_cost, make_record, to_cost, validate_path
from tempo.mcf import McfContext, nondominated, output_paths, run_phase1


@dataclass(frozen=True, slots=True)
class ParetoPoint:
    time_value: int
    cost: Fraction

    def as_tuple(self) -> tuple[int, Fraction]:
        return (self.time_value, self.cost)


@dataclass(frozen=True)
class ParetoFront:
    objective: Objective
    points: tuple[ParetoPoint, ...]
    witnesses: tuple[int, ...]  # representative label id per point

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, vector) -> bool:
        if isinstance(vector, ParetoPoint):
            vector = vector.as_tuple()
        return tuple(vector) in {p.as_tuple() for p in self.points}

    def vectors(self) -> list[tuple[int, Fraction]]:
        return [p.as_tuple() for p in self.points]

    def to_text(self) -> str:
        return "".join(f"f={p.time_value} c={format_cost(p.cost)}\n" for p in self.points)

    def to_json(self) -> str:
        return json.dumps(
            [{"f": p.time_value, "c": format_cost(p.cost)} for p in self.points]
        )


def _front_context(g: TemporalGraph, s: Vertex, z: Vertex, objective: Objective):
    objective = Objective(objective)
    ctx = run_phase1(g, s, z, objective)
    if s == z:
        return ctx, ParetoFront(objective, (), ())
    seen: dict[tuple, int] = {}
    for lab in nondominated(list(ctx.reps[z])):
        tv = lab.duration if objective is Objective.FASTEST else lab.arrival
        seen.setdefault((tv, lab.cost), lab.id)
    ordered = sorted(seen.items())
    points = tuple(ParetoPoint(tv, c) for (tv, c), _ in ordered)
    return ctx, ParetoFront(objective, points, tuple(w for _, w in ordered))


def pareto_front(g: TemporalGraph, s: Vertex, z: Vertex, objective: Objective = Objective.FASTEST) -> ParetoFront:
    """The exact nondominated set of (time value, cost) vectors over all (s, z)-paths."""
    return _front_context(g, s, z, objective)[1]


def is_efficient(
    g: TemporalGraph, s: Vertex, z: Vertex, objective: Objective, edge_ids: Sequence[int]
) -> bool:
    rec = validate_path(g, edge_ids)
    if rec.vertices[0] != s or rec.vertices[-1] != z:
        raise PathError("endpoints", f"path runs {rec.vertices[0]!r} -> {rec.vertices[-1]!r}, not {s!r} -> {z!r}")
    return rec.vector(objective) in pareto_front(g, s, z, objective)


def exists_within(
    g: TemporalGraph,
    s: Vertex,
    z: Vertex,
    objective: Objective,
    cost_bound,
    time_bound: int,
) -> bool:
    """Is there an (s, z)-path with time value <= ``time_bound`` and cost <= ``cost_bound``?"""
    cost_bound = to_cost(cost_bound)
    if cost_bound < 0 or time_bound < 0:
        raise ValueError("bounds must be nonnegative")
    return any(
        p.time_value <= time_bound and p.cost <= cost_bound
        for p in pareto_front(g, s, z, objective)
    )


def remove_zero_cost_cycles(g: TemporalGraph, edge_ids: Sequence[int]) -> list[int]:
    """Cut every cycle out of a temporal walk in one pass.

    Each cut segment must cost 0. The edge after a cut leaves the repeated
    vertex no earlier than the walk first reached it, so the result stays
    time-feasible with the same start, arrival and cost.
    """
    edges = g.edges
    kept: list[int] = []
    pos = {edges[edge_ids[0]].src: 0}  # vertex -> number of kept edges when reached
    for eid in edge_ids:
        v = edges[eid].dst
        if v not in pos:
            kept.append(eid)
            pos[v] = len(kept)
            continue
        cut_from = pos[v]
        cycle = kept[cut_from:] + [eid]
        if any(edges[i].cost != 0 for i in cycle):
            raise ValueError(f"cycle through {v!r} has positive cost")
        for i in kept[cut_from:]:
            del pos[edges[i].dst]
        del kept[cut_from:]
    return kept


def _first_path(ctx: McfContext, rep_id: int) -> PathRecord:
    arena = ctx.arena
    rep = arena[rep_id]
    for lid in sorted(arena.class_of(rep).members):
        if arena[lid].arrival == rep.arrival:
            for rec in output_paths(ctx, lid):
                return rec
    raise AssertionError(f"no path behind representative {rep_id}")


def representative_paths(
    g: TemporalGraph, s: Vertex, z: Vertex, objective: Objective = Objective.FASTEST
) -> list[PathRecord]:
    """One simple efficient path per front point, so pairwise different vectors."""
    ctx, front = _front_context(g, s, z, objective)
    out = []
    for point, rep_id in zip(front.points, front.witnesses):
        walk = _first_path(ctx, rep_id)
        ids = walk.edge_ids
        if not walk.is_simple:
            ids = remove_zero_cost_cycles(g, ids)
        rec = make_record(g, ids)
        assert rec.is_simple and rec.vector(objective) == point.as_tuple(), (rec, point)
        out.append(rec)
    return out
