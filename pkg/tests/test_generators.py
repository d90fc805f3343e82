from __future__ import annotations

import pytest

from tempo.generators import FIXTURES, fixture, hansen_family, random_static_digraph, random_temporal
from tempo.graph import Objective
from tempo.oracle import all_temporal_paths, efficient_filter


@pytest.mark.parametrize("name", FIXTURES)
def test_fixtures_load(name):
    g = fixture(name)
    assert "s" in g


def test_unknown_fixture():
    with pytest.raises(ValueError, match="unknown fixture"):
        fixture("fig9")


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_hansen_family(k):
    g, s, z = hansen_family(k)
    assert (g.n, g.m) == (2 * k + 1, 3 * k)
    paths = all_temporal_paths(g, s, z)
    assert len(paths) == 2**k
    assert {p.vector(Objective.FASTEST) for p in paths} == {(2 * k, 2 * k)}
    assert len(efficient_filter(paths, Objective.FASTEST)) == 2**k


def test_hansen_rejects_zero():
    with pytest.raises(ValueError):
        hansen_family(0)


def test_random_is_seeded():
    a, b = random_temporal(7, 6, 12), random_temporal(7, 6, 12)
    assert a == b and a.m == 12 and a.n == 6
    assert all(e.lam >= 1 and e.cost >= 1 for e in a.edges)
    assert random_temporal(8, 6, 12) != a


def test_random_zero_cost_flag():
    g = random_temporal(3, 4, 60, cost_max=1, allow_zero_cost=True)
    assert g.has_zero_cost


@pytest.mark.parametrize("n, m", [(1, 3), (3, 0)])
def test_random_rejects(n, m):
    with pytest.raises(ValueError):
        random_temporal(0, n, m)


def test_random_static_digraph():
    g = random_static_digraph(1, 5, 1.0)
    assert g.n == 5 and len(g.edges) == 20
