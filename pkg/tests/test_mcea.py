from __future__ import annotations

import pytest
from hypothesis import given

from conftest import PROPERTY_SETTINGS, fig4_ids, temporal_graphs
from tempo.errors import ZeroCostEdgeError
from tempo.generators import fixture
from tempo.graph import Objective, TemporalGraph
from tempo.mcea import (
    enumerate_mcea,
    enumerate_mcea_via_reduction,
    iter_mcea,
    iter_mcea_via_reduction,
    phase1_mcea,
)
from tempo.oracle import all_temporal_paths, efficient_filter


def test_fig4_phase1(fig4):
    ctx = phase1_mcea(fig4, "s", "z")
    # the cost 6 arrival at 10 is dominated by (9, 5) and never survives
    assert sorted(ctx.reps["z"].triples()) == [(0, 9, 5)]
    assert ctx.stats.labels_created <= ctx.label_bound() == 9


def test_fig4_paths(fig4):
    got = sorted(p.edge_ids for p in iter_mcea(fig4, "s", "z"))
    assert got == sorted([fig4_ids("e2", "e7"), fig4_ids("e1", "e4", "e7")])
    oracle = efficient_filter(all_temporal_paths(fig4, "s", "z"), Objective.EARLIEST)
    assert got == sorted(p.edge_ids for p in oracle)


@pytest.mark.parametrize(
    "name, expected",
    [("fig1", [(1, 3)]), ("fig3a", [(0, 2, 4), (1, 4)]), ("fig3b", [(0, 2)])],
)
def test_other_fixtures(name, expected):
    g = fixture(name)
    assert sorted(p.edge_ids for p in iter_mcea(g, "s", "z")) == expected
    assert sorted(p.edge_ids for p in iter_mcea_via_reduction(g, "s", "z")) == expected


def test_equal_vectors_are_all_reported():
    g = TemporalGraph([("s", "a", 1, 1, 1), ("a", "z", 3, 1, 1), ("s", "z", 2, 2, 2)])
    got = sorted(p.edge_ids for p in iter_mcea(g, "s", "z"))
    assert got == [(0, 2), (1,)]


def test_reduction_records_refer_to_original_graph(fig4):
    recs = list(iter_mcea_via_reduction(fig4, "s", "z"))
    assert all(r.vertices[0] == "s" and r.vertices[-1] == "z" for r in recs)
    assert {r.vector(Objective.EARLIEST) for r in recs} == {(9, 5)}


def test_summaries(fig4):
    a = enumerate_mcea(fig4, "s", "z")
    b = enumerate_mcea_via_reduction(fig4, "s", "z")
    assert a.count == b.count == 2 and a.complete and b.complete


def test_zero_cost_refused():
    g = TemporalGraph([("s", "z", 1, 1, 0)])
    with pytest.raises(ZeroCostEdgeError):
        enumerate_mcea(g, "s", "z")


@PROPERTY_SETTINGS
@given(temporal_graphs())
def test_matches_oracle_and_reduction(g):
    s, z = g.vertices[0], g.vertices[-1]
    box = []
    direct = sorted(p.edge_ids for p in iter_mcea(g, s, z, box))
    want = sorted(p.edge_ids for p in efficient_filter(all_temporal_paths(g, s, z), Objective.EARLIEST))
    assert direct == want
    assert sorted(p.edge_ids for p in iter_mcea_via_reduction(g, s, z)) == direct
    assert box[0].stats.labels_created <= g.m + 1
