"""Instance factories: the worked-example graphs, the exponential family, random graphs."""

from __future__ import annotations

import random

from tempo.counting import StaticDigraph
from tempo.graph import TemporalGraph

# Edge lists as (src, dst, t, lambda, cost) in stream order.
_WORKED = {
    "fig1": [
        ("s", "a", 1, 1, 1),
        ("s", "b", 1, 1, 2),
        ("a", "b", 2, 1, 2),
        ("b", "z", 2, 1, 1),
        ("s", "z", 3, 1, 3),
    ],
    # prefix-path counterexample
    "fig3a": [
        ("s", "u", 1, 1, 1),
        ("s", "w", 2, 3, 2),
        ("u", "w", 2, 2, 1),
        ("s", "v", 5, 1, 1),
        ("w", "z", 5, 1, 1),
        ("v", "w", 6, 1, 1),
    ],
    "fig3b": [
        ("s", "u", 1, 6, 6),
        ("s", "u", 5, 5, 5),
        ("u", "z", 8, 1, 1),
    ],
    # e1..e8 are ids 0..7
    "fig4": [
        ("s", "u", 3, 3, 3),
        ("s", "w", 3, 4, 4),
        ("u", "v", 6, 3, 1),
        ("u", "w", 6, 2, 1),
        ("s", "v", 7, 1, 1),
        ("v", "w", 8, 1, 1),
        ("w", "z", 8, 1, 1),
        ("v", "z", 9, 1, 5),
    ],
}

_FIG5_EDGES = [("s", "u"), ("s", "w"), ("s", "t"), ("u", "w"), ("u", "t"), ("w", "t")]

FIXTURES = (*_WORKED, "fig5")


def fixture(name: str) -> TemporalGraph | StaticDigraph:
    """A named example graph; ``fig5`` is a static digraph, the rest are temporal."""
    if name == "fig5":
        return StaticDigraph(_FIG5_EDGES)
    try:
        edges = _WORKED[name]
    except KeyError:
        raise ValueError(f"unknown fixture {name!r}; choose from {', '.join(FIXTURES)}") from None
    return TemporalGraph(edges)


def zero_cost_cycle_fixture() -> TemporalGraph:
    """An efficient path s-a-z with a zero-cost 2-cycle a-b-a that fits in its waiting time."""
    return TemporalGraph(
        [
            ("s", "a", 1, 1, 1),
            ("a", "b", 2, 1, 0),
            ("b", "a", 3, 1, 0),
            ("a", "z", 5, 1, 2),
            ("s", "z", 1, 2, 5),
            ("s", "z", 6, 1, 4),
        ]
    )


def hansen_family(k: int) -> tuple[TemporalGraph, str, str]:
    """A chain of ``k`` diamonds with 2**k (s, z)-paths, all efficient.

    Block j leaves its entry vertex at time 2j-1 either directly (lambda 2,
    cost 2) or through a middle vertex (two edges of lambda 1, cost 1, at
    times 2j-1 and 2j). Every path arrives at 2k+1 with cost 2k.
    """
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    names = ["s"] + [f"v{i}" for i in range(2, 2 * k + 1)] + ["z"]
    edges = []
    for j in range(1, k + 1):
        entry, mid, exit_ = names[2 * j - 2], names[2 * j - 1], names[2 * j]
        edges.append((entry, mid, 2 * j - 1, 1, 1))
        edges.append((mid, exit_, 2 * j, 1, 1))
        edges.append((entry, exit_, 2 * j - 1, 2, 2))
    return TemporalGraph(edges, vertices=names), "s", "z"


def random_temporal(
    seed: int,
    n: int,
    m: int,
    t_max: int = 10,
    lambda_max: int = 3,
    cost_max: int = 5,
    allow_zero_cost: bool = False,
    lambda_min: int = 1,
) -> TemporalGraph:
    """Seeded random temporal graph on vertices ``v0 .. v{n-1}``.

    Traversal times default to at least 1: Phase 1 reads the stream once, so
    two zero-traversal edges at the same time chain only in stream order.
    """
    if n < 2:
        raise ValueError("need at least 2 vertices")
    if m < 1:
        raise ValueError("need at least 1 edge")
    rng = random.Random(seed)
    names = [f"v{i}" for i in range(n)]
    lo = 0 if allow_zero_cost else 1
    edges = []
    for _ in range(m):
        u, v = rng.sample(names, 2)
        edges.append(
            (u, v, rng.randint(0, t_max), rng.randint(lambda_min, lambda_max), rng.randint(lo, cost_max))
        )
    return TemporalGraph(edges, vertices=names)


def random_static_digraph(seed: int, n: int, p: float = 0.4) -> StaticDigraph:
    """Seeded G(n, p) digraph on ``v0 .. v{n-1}``."""
    rng = random.Random(seed)
    names = [f"v{i}" for i in range(n)]
    edges = [(u, v) for u in names for v in names if u != v and rng.random() < p]
    return StaticDigraph(edges, vertices=names)
