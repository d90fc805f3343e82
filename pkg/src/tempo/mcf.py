"""Enumeration of min-cost fastest paths.

Phase 1 streams the edges once and builds, at every vertex, the
representative set of labels. Phase 2 marks the nondominated
representatives at the target and recombines equivalence classes by
backtracking, so every efficient (s, z)-path is produced exactly once with
a delay that does not depend on how many paths there are.

The same engine, run in ``earliest`` mode, backs :mod:`tempo.mcea`.
"""

from __future__ import annotations

from collections.abc import Callable, Iterator
from dataclasses import dataclass, field

from tempo.errors import ZeroCostEdgeError
from tempo.graph import Objective, PathRecord, TemporalGraph, Vertex
from tempo.labels import Label, LabelArena, RepSet, dominates, insert_with_pruning


@dataclass
class EnumerationStats:
    labels_created: int = 0
    emitted: int = 0
    # labels touched by the backtracking, total and the worst gap between outputs
    visits: int = 0
    first_delay: int = 0
    max_delay: int = 0
    pending: int = 0  # visits since the last output


@dataclass
class McfContext:
    graph: TemporalGraph
    source: Vertex
    target: Vertex
    objective: Objective
    arena: LabelArena
    reps: dict[Vertex, RepSet]
    stats: EnumerationStats = field(default_factory=EnumerationStats)

    def rep_set(self, v: Vertex) -> RepSet:
        return self.reps[v]

    def label_bound(self) -> int:
        """Upper bound on labels created: S*m + 1 for fastest, m + 1 for earliest."""
        m = self.graph.m
        if self.objective is Objective.FASTEST:
            return self.graph.distinct_departure_times(self.source) * m + 1
        return m + 1

    def dump(self) -> str:
        return "\n".join(r.dump() for r in self.reps.values() if r)


@dataclass(frozen=True)
class EnumerationSummary:
    count: int
    stats: EnumerationStats
    complete: bool = True


def _candidates_by_start(reps: RepSet, t: int) -> list[Label]:
    """Cheapest usable representative for each distinct starting time."""
    best: dict[int, Label] = {}
    for lab in reps:
        if lab.arrival > t:
            continue
        cur = best.get(lab.start)
        if cur is None or (lab.cost, lab.arrival, lab.id) < (cur.cost, cur.arrival, cur.id):
            best[lab.start] = lab
    return list(best.values())


def _cheapest(reps: RepSet, t: int) -> list[Label]:
    best = None
    for lab in reps:
        if lab.arrival <= t and (
            best is None or (lab.cost, lab.arrival, lab.id) < (best.cost, best.arrival, best.id)
        ):
            best = lab
    return [] if best is None else [best]


def run_phase1(g: TemporalGraph, s: Vertex, z: Vertex, objective: Objective) -> McfContext:
    """Label setting over the edge stream.

    ``fastest``: every distinct starting time at the tail vertex contributes
    its cheapest usable label, and pushing out of ``s`` restarts the path at
    the edge's availability time. ``earliest``: all paths start at time 0
    and only the single cheapest usable label is pushed.

    Edges entering ``s`` are skipped: no path leaves ``s`` and returns, and
    a label created back at ``s`` would break the restart rule.
    """
    g.require(s, z)
    objective = Objective(objective)
    arena = LabelArena()
    reps = {v: RepSet(v, arena) for v in g.vertices}
    ctx = McfContext(g, s, z, objective, arena, reps)
    init = arena.initial(s)
    arena.new_class(init)
    reps[s].ids.append(init.id)

    fastest = objective is Objective.FASTEST
    select = _candidates_by_start if fastest else _cheapest
    for e in g.edges:
        if e.dst == s:
            continue
        tail = reps[e.src]
        if not tail:
            continue
        head = reps[e.dst]
        restart = fastest and e.src == s
        for lab in select(tail, e.t):
            insert_with_pruning(head, arena.push(lab, e, restart))
    ctx.stats.labels_created = len(arena)
    return ctx


def phase1_mcf(g: TemporalGraph, s: Vertex, z: Vertex) -> McfContext:
    return run_phase1(g, s, z, Objective.FASTEST)


def nondominated(labels: list[Label]) -> list[Label]:
    """Labels not dominated on (duration, cost) by any other label in the list."""
    return [l for l in labels if not any(dominates(o, l) for o in labels if o is not l)]


def mark_nondominated(ctx: McfContext) -> list[int]:
    """Ids of the representatives at the target that no other representative dominates."""
    return [lab.id for lab in nondominated(list(ctx.reps[ctx.target]))]


def _start_labels(ctx: McfContext, rep_id: int) -> list[int]:
    """Members of the representative's class that share its (minimal) arrival, by id."""
    arena = ctx.arena
    rep = arena[rep_id]
    members = arena.class_of(rep).members
    return sorted(i for i in members if arena[i].arrival == rep.arrival)


def output_paths(ctx: McfContext, label: Label | int) -> Iterator[PathRecord]:
    """Backtrack from ``label`` to the source, yielding every path it stands for.

    At each step the predecessor's whole equivalence class is tried, keeping
    the members that arrive no later than the edge that created the current
    label departs. The growing suffix is a persistent cons list so sibling
    branches never see each other's edges.
    """
    arena = ctx.arena
    labels = arena.labels
    classes = arena.classes
    g = ctx.graph
    stats = ctx.stats
    root = labels[label] if isinstance(label, int) else label
    cost = root.cost
    arrival = root.arrival
    stack: list[tuple[int, tuple | None]] = [(root.id, None)]
    since_last = stats.pending
    visits = 0
    while stack:
        lid, suffix = stack.pop()
        lab = labels[lid]
        visits += 1
        if lab.edge_id is not None:
            suffix = (lab.edge_id, suffix)
        if lab.pred is not None:
            members = classes[labels[lab.pred].class_id].members
            visits += len(members)
            r = lab.prev_time
            for mid in reversed(members):
                if labels[mid].arrival <= r:
                    stack.append((mid, suffix))
            continue
        ids = []
        while suffix is not None:
            ids.append(suffix[0])
            suffix = suffix[1]
        if not ids:
            continue  # source == target: the empty sequence is not a path
        edges = g.edges
        first = edges[ids[0]]
        verts = (first.src,) + tuple(edges[i].dst for i in ids)
        gap = since_last + visits
        stats.visits += visits
        if stats.emitted == 0:
            stats.first_delay = gap
        else:
            stats.max_delay = max(stats.max_delay, gap)
        stats.emitted += 1
        since_last = visits = stats.pending = 0
        yield PathRecord(tuple(ids), verts, first.t, arrival, cost)
    stats.visits += visits
    stats.pending = since_last + visits


def iter_paths(ctx: McfContext, roots: list[int] | None = None) -> Iterator[PathRecord]:
    """Phase 2 driver over an already computed context."""
    if ctx.source == ctx.target:
        return
    if roots is None:
        if ctx.objective is Objective.FASTEST:
            roots = mark_nondominated(ctx)
        else:
            roots = list(ctx.reps[ctx.target].ids)
    for rep_id in roots:
        for lid in _start_labels(ctx, rep_id):
            yield from output_paths(ctx, lid)


def check_positive_costs(g: TemporalGraph) -> None:
    if g.has_zero_cost:
        zero = next(e for e in g.edges if e.cost == 0)
        raise ZeroCostEdgeError(
            f"edge {zero.id} ({zero.src} -> {zero.dst}) has cost 0; enumeration needs "
            "strictly positive costs, use the pareto queries instead"
        )


def iter_mcf(g: TemporalGraph, s: Vertex, z: Vertex, ctx_out: list | None = None) -> Iterator[PathRecord]:
    """Lazily yield the efficient (s, z)-paths w.r.t. duration and cost.

    If ``ctx_out`` is a list, the context is appended to it before the first
    path is produced, giving access to the running statistics.
    """
    check_positive_costs(g)
    ctx = phase1_mcf(g, s, z)
    if ctx_out is not None:
        ctx_out.append(ctx)
    yield from iter_paths(ctx)


def drive(paths: Iterator[PathRecord], ctx_box: list, consumer: Callable | None, limit: int | None) -> EnumerationSummary:
    """Feed ``paths`` to ``consumer``; a consumer returning ``False`` stops early."""
    count = 0
    complete = True
    for rec in paths:
        count += 1
        if consumer is not None and consumer(rec) is False:
            complete = False
            break
        if limit is not None and count >= limit:
            complete = False
            break
    if hasattr(paths, "close"):
        paths.close()
    stats = ctx_box[0].stats if ctx_box else EnumerationStats()
    return EnumerationSummary(count, stats, complete)


def enumerate_mcf(
    g: TemporalGraph,
    s: Vertex,
    z: Vertex,
    consumer: Callable[[PathRecord], object] | None = None,
    limit: int | None = None,
) -> EnumerationSummary:
    """Stream every efficient (s, z)-path w.r.t. duration and cost to ``consumer``.

    Raises :class:`ZeroCostEdgeError` if any edge has cost 0.
    """
    box: list = []
    check_positive_costs(g)
    return drive(iter_mcf(g, s, z, box), box, consumer, limit)
