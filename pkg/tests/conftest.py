import random

import pytest
from hypothesis import strategies as st

from packnum.enumeration import enumerate_connected, enumerate_connected_upto
from packnum.graph import Graph


@pytest.fixture(scope="session")
def corpus6():
    return list(enumerate_connected_upto(6))


@pytest.fixture(scope="session")
def corpus7():
    return list(enumerate_connected_upto(7))


@pytest.fixture(scope="session")
def connected7():
    return list(enumerate_connected(7))


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    return Graph.from_edges(n, [(u, v) for v in range(n) for u in range(v) if rng.random() < p])


@st.composite
def graphs(draw, min_n=1, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for v in range(n) for u in range(v)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, chosen) if keep])


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[number])
