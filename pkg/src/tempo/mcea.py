"""Enumeration of min-cost earliest-arrival paths.

This is the fastest-path engine with every starting time pinned to 0:
labels are equivalent iff their costs match, a single cheapest label is
pushed per edge, and the target's representatives already form the Pareto
staircase, so Phase 2 needs no marking pass.
"""

from __future__ import annotations

from collections.abc import Callable, Iterator

from tempo.graph import Objective, PathRecord, TemporalGraph, Vertex, make_record, transform_mcea_to_mcf
from tempo.mcf import (
    EnumerationSummary,
    McfContext,
    check_positive_costs,
    drive,
    iter_paths,
    phase1_mcf,
    run_phase1,
)


def phase1_mcea(g: TemporalGraph, s: Vertex, z: Vertex) -> McfContext:
    return run_phase1(g, s, z, Objective.EARLIEST)


def iter_mcea(g: TemporalGraph, s: Vertex, z: Vertex, ctx_out: list | None = None) -> Iterator[PathRecord]:
    check_positive_costs(g)
    ctx = phase1_mcea(g, s, z)
    if ctx_out is not None:
        ctx_out.append(ctx)
    yield from iter_paths(ctx)


def enumerate_mcea(
    g: TemporalGraph,
    s: Vertex,
    z: Vertex,
    consumer: Callable[[PathRecord], object] | None = None,
    limit: int | None = None,
) -> EnumerationSummary:
    """Stream every efficient (s, z)-path w.r.t. arrival time and cost."""
    box: list = []
    check_positive_costs(g)
    return drive(iter_mcea(g, s, z, box), box, consumer, limit)


def iter_mcea_via_reduction(
    g: TemporalGraph, s: Vertex, z: Vertex, ctx_out: list | None = None
) -> Iterator[PathRecord]:
    """Earliest-arrival enumeration through the fastest-path engine.

    A super-source with one zero-cost edge at time 0 makes every duration
    equal the arrival time; the gadget edge is stripped from each output.
    The gadget is the only zero-cost edge and its tail has no in-edges, so
    the positive-cost check is done on ``g`` alone.
    """
    check_positive_costs(g)
    g.require(s, z)
    if s == z:
        return
    g2, s2 = transform_mcea_to_mcf(g, s)
    ctx = phase1_mcf(g2, s2, z)
    if ctx_out is not None:
        ctx_out.append(ctx)
    for rec in iter_paths(ctx):
        assert rec.edge_ids[0] == 0
        yield make_record(g, [i - 1 for i in rec.edge_ids[1:]], rec.cost)


def enumerate_mcea_via_reduction(
    g: TemporalGraph,
    s: Vertex,
    z: Vertex,
    consumer: Callable[[PathRecord], object] | None = None,
    limit: int | None = None,
) -> EnumerationSummary:
    box: list = []
    check_positive_costs(g)
    return drive(iter_mcea_via_reduction(g, s, z, box), box, consumer, limit)
