from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given

from conftest import PROPERTY_SETTINGS, fig4_ids, temporal_graphs
from tempo.errors import ZeroCostEdgeError
from tempo.generators import fixture, hansen_family
from tempo.graph import Objective, TemporalGraph, validate_path
from tempo.labels import LabelArena
from tempo.mcf import (
    enumerate_mcf,
    iter_mcf,
    mark_nondominated,
    nondominated,
    output_paths,
    phase1_mcf,
)
from tempo.oracle import efficient_paths


def triples(ctx, v):
    return sorted(ctx.reps[v].triples())


class TestPhase1Fig4:
    def test_rep_sets(self, fig4):
        ctx = phase1_mcf(fig4, "s", "z")
        assert triples(ctx, "u") == [(3, 6, 3)]
        assert triples(ctx, "v") == [(7, 8, 1)]
        assert triples(ctx, "w") == [(3, 7, 4), (7, 9, 2)]
        assert triples(ctx, "z") == [(3, 9, 5), (7, 10, 6)]
        assert ctx.stats.labels_created == 9 <= ctx.label_bound() == 17

    def test_equivalence_class_at_w(self, fig4):
        ctx = phase1_mcf(fig4, "s", "z")
        arena = ctx.arena
        rep = next(arena[i] for i in ctx.reps["w"].ids if arena[i].start == 3)
        members = sorted(arena[i].triple() for i in arena.class_of(rep).members)
        assert members == [(3, 7, 4), (3, 8, 4)]

    def test_both_target_reps_marked(self, fig4):
        ctx = phase1_mcf(fig4, "s", "z")
        marked = sorted(ctx.arena[i].triple() for i in mark_nondominated(ctx))
        assert marked == [(3, 9, 5), (7, 10, 6)]

    def test_output_paths_from_first_rep(self, fig4):
        ctx = phase1_mcf(fig4, "s", "z")
        rep = next(ctx.arena[i] for i in ctx.reps["z"].ids if ctx.arena[i].start == 3)
        got = sorted(p.edge_ids for p in output_paths(ctx, rep))
        assert got == sorted([fig4_ids("e2", "e7"), fig4_ids("e1", "e4", "e7")])


def test_mark_nondominated_on_hand_built_labels():
    arena = LabelArena()
    p1 = arena.new_label(3, 9, Fraction(5), None, "z", None, None)
    p2 = arena.new_label(3, 10, Fraction(9), None, "z", None, None)
    assert nondominated([p1, p2]) == [p1]


class TestEnumerate:
    def test_fig4(self, fig4):
        got = [p.edge_ids for p in iter_mcf(fig4, "s", "z")]
        assert sorted(got) == sorted(
            [fig4_ids("e2", "e7"), fig4_ids("e1", "e4", "e7"), fig4_ids("e5", "e8")]
        )
        recs = {p.edge_ids: p for p in iter_mcf(fig4, "s", "z")}
        assert recs[fig4_ids("e5", "e8")].vector(Objective.FASTEST) == (3, 6)
        assert recs[fig4_ids("e2", "e7")].vector(Objective.FASTEST) == (6, 5)

    @pytest.mark.parametrize(
        "name, expected", [("fig1", [(4,)]), ("fig3a", [(1, 4)]), ("fig3b", [(0, 2)])]
    )
    def test_other_fixtures(self, name, expected):
        assert [p.edge_ids for p in iter_mcf(fixture(name), "s", "z")] == expected

    def test_unreachable(self):
        g = TemporalGraph([("s", "a", 5, 1, 1), ("a", "z", 2, 1, 1)])
        assert list(iter_mcf(g, "s", "z")) == []

    def test_source_is_target(self, fig4):
        assert list(iter_mcf(fig4, "s", "s")) == []

    def test_zero_cost_refused(self):
        g = TemporalGraph([("s", "z", 1, 1, 0)])
        with pytest.raises(ZeroCostEdgeError):
            enumerate_mcf(g, "s", "z")
        with pytest.raises(ZeroCostEdgeError):
            next(iter_mcf(g, "s", "z"))

    def test_consumer_and_limit(self, fig4):
        seen = []
        summary = enumerate_mcf(fig4, "s", "z", consumer=seen.append)
        assert summary.count == 3 and summary.complete and len(seen) == 3
        assert summary.stats.emitted == 3

        summary = enumerate_mcf(fig4, "s", "z", consumer=lambda p: False)
        assert summary.count == 1 and not summary.complete

        summary = enumerate_mcf(fig4, "s", "z", limit=2)
        assert summary.count == 2 and not summary.complete

    def test_lazy_on_large_family(self):
        g, s, z = hansen_family(40)  # 2**40 paths; only the first is produced
        first = next(iter_mcf(g, s, z))
        assert first.vector(Objective.FASTEST) == (80, 80)
        assert len(first.edge_ids) >= 40

    def test_hansen_small(self):
        g, s, z = hansen_family(3)
        box = []
        paths = list(iter_mcf(g, s, z, box))
        assert len(paths) == 8 == len({p.edge_ids for p in paths})
        assert {p.vector(Objective.FASTEST) for p in paths} == {(6, 6)}
        assert box[0].stats.labels_created <= box[0].label_bound()

    @PROPERTY_SETTINGS
    @given(temporal_graphs())
    def test_matches_oracle(self, g):
        s, z = g.vertices[0], g.vertices[-1]
        box = []
        got = [p.edge_ids for p in iter_mcf(g, s, z, box)]
        assert len(got) == len(set(got))
        want = [p.edge_ids for p in efficient_paths(g, s, z, Objective.FASTEST)]
        assert sorted(got) == sorted(want)
        assert box[0].stats.labels_created <= box[0].label_bound()

    @PROPERTY_SETTINGS
    @given(temporal_graphs())
    def test_records_are_consistent(self, g):
        s, z = g.vertices[0], g.vertices[-1]
        for p in iter_mcf(g, s, z):
            assert validate_path(g, p.edge_ids) == p

    @PROPERTY_SETTINGS
    @given(temporal_graphs())
    def test_delay_counters(self, g):
        s, z = g.vertices[0], g.vertices[-1]
        box = []
        n = sum(1 for _ in iter_mcf(g, s, z, box))
        st = box[0].stats
        assert st.emitted == n
        if n:
            assert st.first_delay >= 1 and st.visits >= n


def test_fig3a_prefix_survives():
    # s-w is the only efficient (s, w)-path on its own, yet the later
    # (5, 7, 2) label must survive next to it at w
    ctx = phase1_mcf(fixture("fig3a"), "s", "z")
    assert {(2, 5, 2), (5, 7, 2)} <= set(ctx.reps["w"].triples())


def test_singleton_target_is_marked():
    g = TemporalGraph([("s", "z", 1, 1, 1)])
    ctx = phase1_mcf(g, "s", "z")
    assert mark_nondominated(ctx) == ctx.reps["z"].ids
