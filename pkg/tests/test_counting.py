from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import PROPERTY_SETTINGS
from tempo.counting import (
    ReductionStep,
    StaticDigraph,
    build_g_tau,
    count_simple_paths_dfs,
    count_static_st_paths,
    parse_static_digraph,
    reduction_trace,
)
from tempo.errors import GraphFormatError, UnknownVertexError
from tempo.generators import fixture, random_static_digraph


def test_fig5_trace():
    g = fixture("fig5")
    # one 1-edge path, two 2-edge paths, one 3-edge path
    assert reduction_trace(g, "s", "t") == [
        ReductionStep(1, 1, 1),
        ReductionStep(2, 4, 2),
        ReductionStep(3, 10, 1),
    ]
    assert count_static_st_paths(g, "s", "t") == 4 == count_simple_paths_dfs(g, "s", "t")


def test_g_tau_shape():
    g = fixture("fig5")
    gt, s, z = build_g_tau(g, "s", "t", 2)
    assert z == "z" and gt.m == 2 * 6 + 1
    assert gt.edges[-1].as_tuple()[:4] == ("t", "z", 4, 1)
    with pytest.raises(ValueError):
        build_g_tau(g, "s", "t", 4)


def test_sink_name_clash():
    g = StaticDigraph([("s", "z"), ("z", "t")])
    _, _, sink = build_g_tau(g, "s", "t", 1)
    assert sink == "z'"
    assert count_static_st_paths(g, "s", "t") == 1


def test_complete_digraph():
    names = "abcde"
    g = StaticDigraph([(u, v) for u in names for v in names if u != v])
    # 1 + 3 + 3*2 + 3*2*1 paths of length 1..4
    assert count_static_st_paths(g, "a", "e") == 16


def test_disconnected():
    g = StaticDigraph([("s", "a"), ("t", "b")])
    assert count_static_st_paths(g, "s", "t") == 0


def test_errors():
    with pytest.raises(GraphFormatError):
        StaticDigraph([("a", "a")])
    with pytest.raises(GraphFormatError):
        StaticDigraph([("a", "b"), ("a", "b")])
    with pytest.raises(GraphFormatError) as info:
        parse_static_digraph("a b\nc\n")
    assert info.value.line == 2
    with pytest.raises(UnknownVertexError):
        count_static_st_paths(fixture("fig5"), "s", "q")
    with pytest.raises(ValueError):
        count_static_st_paths(fixture("fig5"), "s", "s")


def test_parse_round_trip():
    g = fixture("fig5")
    assert parse_static_digraph(g.to_text()).edges == g.edges


@PROPERTY_SETTINGS
@given(st.integers(0, 10**6), st.integers(2, 6), st.sampled_from([0.2, 0.4, 0.7]))
def test_matches_dfs(seed, n, p):
    g = random_static_digraph(seed, n, p)
    assert count_static_st_paths(g, "v0", f"v{n - 1}") == count_simple_paths_dfs(g, "v0", f"v{n - 1}")
