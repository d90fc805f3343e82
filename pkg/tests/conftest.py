from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from tempo.generators import fixture
from tempo.graph import TemporalGraph

PROPERTY_SETTINGS = settings(
    max_examples=150,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)

# filled by the acceptance tests, printed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda l: int(l.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)


FIG4_EDGE = {f"e{i + 1}": i for i in range(8)}


def fig4_ids(*names: str) -> tuple[int, ...]:
    return tuple(FIG4_EDGE[n] for n in names)


@pytest.fixture
def fig1() -> TemporalGraph:
    return fixture("fig1")


@pytest.fixture
def fig4() -> TemporalGraph:
    return fixture("fig4")


@st.composite
def temporal_graphs(draw, max_vertices=6, max_edges=14, min_cost=1, max_cost=4, min_lambda=1):
    """Small temporal graphs on v0..v{n-1}; the query is v0 -> v{n-1}."""
    n = draw(st.integers(2, max_vertices))
    names = [f"v{i}" for i in range(n)]
    edge = st.tuples(
        st.sampled_from(names),
        st.sampled_from(names),
        st.integers(0, 8),
        st.integers(min_lambda, 3),
        st.integers(min_cost, max_cost),
    ).filter(lambda e: e[0] != e[1])
    edges = draw(st.lists(edge, min_size=1, max_size=max_edges))
    return TemporalGraph(edges, vertices=names)
