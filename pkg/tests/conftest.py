import itertools

import numpy as np
import pytest
from hypothesis import strategies as st

from hyperlap.hypercore import from_links
from hyperlap.ingest import nas_fixture

# Table 2 of the NAS example, written out independently of the bundled CSV
NAS_TABLE = {
    1: list(range(1, 7)),
    2: [1, *range(8, 13)],
    3: [1, *range(13, 18)],
    4: [1, *range(18, 23)],
    5: [1, *range(23, 28)],
    6: [2, *range(28, 32)],
    7: [3, *range(32, 36)],
    8: [3, *range(36, 40)],
    9: [4, *range(40, 44)],
    10: [4, 7, *range(44, 47)],
    11: [5, 7, *range(47, 51)],
    12: [6, *range(51, 55)],
}


@pytest.fixture(scope="session")
def nas():
    return nas_fixture()


@pytest.fixture
def rng():
    return np.random.Generator(np.random.PCG64(20240601))


@st.composite
def hypergraphs(draw, max_nodes=12, max_links=20, max_depth=5):
    n = draw(st.integers(1, max_nodes))
    depth_cap = min(n, max_depth)
    link = st.sets(st.integers(0, n - 1), min_size=1, max_size=depth_cap)
    links = draw(st.lists(link, min_size=1, max_size=max_links))
    return from_links(n, links)


def brute_force_line_edges(h):
    """All-pairs intersection sizes, independent of the production path."""
    out = {}
    for i, j in itertools.combinations(range(h.link_count), 2):
        t = len(set(h.links[i]) & set(h.links[j]))
        if t:
            out[(i, j)] = t
    return out


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
