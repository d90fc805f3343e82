"""Differential checks of the enumerators and Pareto queries against the oracle."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import permutations

from tempo.graph import Objective, TemporalGraph, validate_path
from tempo.generators import random_temporal
from tempo.mcea import iter_mcea, iter_mcea_via_reduction
from tempo.mcf import iter_mcf
from tempo.oracle import all_temporal_paths, efficient_filter, nondominated_vectors
from tempo.pareto import pareto_front


def suite_graph(seed: int) -> TemporalGraph:
    """Instance ``seed`` of the standard suite: n <= 9, m <= 16, positive costs."""
    rng = random.Random(seed)
    n = rng.randint(3, 9)
    m = rng.randint(8, 16)
    return random_temporal(seed, n, m, t_max=8, lambda_max=2, cost_max=3)


@dataclass
class Mismatch:
    seed: int | None
    source: str
    target: str
    check: str
    detail: str
    graph: TemporalGraph

    def report(self) -> str:
        return (
            f"seed={self.seed} source={self.source} target={self.target} "
            f"check={self.check}: {self.detail}\n{self.graph.to_text()}"
        )


def _collect(it, ctx_box):
    paths = list(it)
    return paths, ctx_box[0]


def check_pair(g: TemporalGraph, s, z, fault: bool = False) -> list[tuple[str, str]]:
    """Run every differential check for one (s, z) query; returns (check, detail) failures."""
    problems: list[tuple[str, str]] = []
    all_paths = all_temporal_paths(g, s, z)
    in_z = len(g.in_edges(z))
    S = g.distinct_departure_times(s)

    runs = {
        "mcf": (Objective.FASTEST, iter_mcf),
        "mcea": (Objective.EARLIEST, iter_mcea),
        "mcea-reduction": (Objective.EARLIEST, iter_mcea_via_reduction),
    }
    seqs = {}
    for name, (objective, fn) in runs.items():
        box: list = []
        paths, ctx = _collect(fn(g, s, z, box), box)
        if fault and name == "mcf" and paths:
            paths = paths[:-1]
        got = [p.edge_ids for p in paths]
        seqs[name] = sorted(got)
        if len(set(got)) != len(got):
            problems.append((name, "duplicate paths emitted"))
        want = sorted(p.edge_ids for p in efficient_filter(all_paths, objective))
        if sorted(got) != want:
            problems.append((name, f"emitted {sorted(got)}, oracle {want}"))
        for p in paths:
            rec = validate_path(g, p.edge_ids)
            if rec.vector(objective) != p.vector(objective):
                problems.append((name, f"record {p} disagrees with its edges"))
        bound = ctx.label_bound()
        if ctx.stats.labels_created > bound:
            problems.append((name, f"{ctx.stats.labels_created} labels > bound {bound}"))

    if seqs["mcea"] != seqs["mcea-reduction"]:
        problems.append(("reduction", f"direct {seqs['mcea']} vs reduction {seqs['mcea-reduction']}"))

    for objective, cap in ((Objective.FASTEST, S * in_z), (Objective.EARLIEST, in_z)):
        front = pareto_front(g, s, z, objective)
        want = nondominated_vectors(all_paths, objective)
        if front.vectors() != want:
            problems.append((f"front-{objective.value}", f"{front.vectors()} vs oracle {want}"))
        if len(front) > cap:
            problems.append((f"front-{objective.value}", f"{len(front)} points > bound {cap}"))
    return problems


def run_suite(seeds: int, start: int = 0, fault: bool = False, stop_at_first: bool = False) -> list[Mismatch]:
    """Check every ordered vertex pair of ``seeds`` suite instances."""
    found = []
    for seed in range(start, start + seeds):
        g = suite_graph(seed)
        for s, z in permutations(g.vertices, 2):
            for check, detail in check_pair(g, s, z, fault):
                found.append(Mismatch(seed, s, z, check, detail, g))
                if stop_at_first:
                    return found
    return found
