import io
import itertools
import math
import statistics
from collections import deque

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperlap.generator import GrowthConfig, grow
from hyperlap.linegraph import LineGraph, line_graph
from hyperlap.metrics import (
    PathMode,
    assortativity,
    average_path_length,
    clustering_coefficient,
    er_baseline,
    fit_power_law,
    full_report,
    graph_degree_histogram,
    read_histogram_csv,
    write_histogram_csv,
)


def complete(m):
    return LineGraph.from_edges(m, itertools.combinations(range(m), 2))


def star(n):
    return LineGraph.from_edges(n + 1, [(0, i) for i in range(1, n + 1)])


def path(n):
    return LineGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


@st.composite
def graphs(draw, max_nodes=25):
    n = draw(st.integers(2, max_nodes))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), min_size=1, unique=True))
    return LineGraph.from_edges(n, chosen)


def neighbours(g):
    nb = [set() for _ in range(g.node_count)]
    for i, j, _ in g.edges():
        nb[i].add(j)
        nb[j].add(i)
    return nb


def brute_clustering(g):
    nb = neighbours(g)
    total = 0.0
    for v in range(g.node_count):
        d = len(nb[v])
        if d < 2:
            continue
        tri = sum(1 for a, b in itertools.combinations(nb[v], 2) if b in nb[a])
        total += tri / (d * (d - 1) / 2)
    return total / g.node_count


def brute_path_length(g):
    nb = neighbours(g)
    seen, comps = set(), []
    for s in range(g.node_count):
        if s in seen:
            continue
        comp, queue = {s}, deque([s])
        while queue:
            u = queue.popleft()
            for w in nb[u] - comp:
                comp.add(w)
                queue.append(w)
        seen |= comp
        comps.append(comp)
    giant = max(comps, key=len)
    total = pairs = 0
    for s in giant:
        dist, queue = {s: 0}, deque([s])
        while queue:
            u = queue.popleft()
            for w in nb[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        total += sum(dist.values())
        pairs += len(dist) - 1
    return total / pairs


def test_clique_clustering():
    assert clustering_coefficient(complete(5)) == 1.0


def test_tree_clustering():
    assert clustering_coefficient(star(6)) == 0.0
    assert clustering_coefficient(path(7)) == 0.0


def test_nas_clustering(nas):
    c = clustering_coefficient(line_graph(nas))
    assert 0.9 < c <= 1.0
    assert c == pytest.approx(brute_clustering(line_graph(nas)), abs=1e-12)


@given(graphs())
def test_clustering_matches_brute_force(g):
    c = clustering_coefficient(g)
    assert 0.0 <= c <= 1.0
    assert c == pytest.approx(brute_clustering(g), abs=1e-12)


@pytest.mark.parametrize("n", [3, 4, 10])
def test_star_assortativity(n):
    assert assortativity(star(n)) == -1.0


def test_regular_graph_assortativity_undefined():
    assert assortativity(complete(5)) is None


@given(graphs())
def test_assortativity_matches_pearson(g):
    deg = g.degrees()
    x = [deg[i] for i, j, _ in g.edges()] + [deg[j] for i, j, _ in g.edges()]
    y = [deg[j] for i, j, _ in g.edges()] + [deg[i] for i, j, _ in g.edges()]
    rho = assortativity(g)
    if len(set(x)) == 1:
        assert rho is None
    else:
        assert -1.0 <= rho <= 1.0
        assert rho == pytest.approx(statistics.correlation(x, y), abs=1e-9)


def test_path_lengths_small():
    assert average_path_length(complete(6)).value == 1.0
    assert average_path_length(path(3)).value == pytest.approx(4 / 3, abs=1e-15)


def test_path_length_empty():
    with pytest.raises(ValueError):
        average_path_length(LineGraph.from_edges(0, []))


def test_path_length_uses_giant_component():
    g = LineGraph.from_edges(6, [(0, 1), (1, 2), (3, 4)])
    pl = average_path_length(g)
    assert pl.value == pytest.approx(4 / 3)
    assert pl.component_size == 3
    assert pl.coverage == pytest.approx(0.5)


@given(graphs())
def test_path_length_matches_bfs(g):
    assert average_path_length(g).value == pytest.approx(brute_path_length(g), abs=1e-12)


def test_threads_do_not_change_result():
    g = line_graph(grow(GrowthConfig(steps=150, rng_seed=4)))
    one = average_path_length(g, threads=1).value
    assert average_path_length(g, threads=4).value == one
    s = PathMode.parse("sample:50:3")
    assert average_path_length(g, s, threads=3).value == average_path_length(g, s).value


def test_sampled_path_length_close_to_exact():
    g = line_graph(grow(GrowthConfig(steps=450, rng_seed=8)))
    assert g.node_count <= 2000
    exact = average_path_length(g).value
    errs = [
        abs(average_path_length(g, PathMode(count=200, rng_seed=s)).value - exact) / exact
        for s in range(10)
    ]
    assert statistics.median(errs) < 0.05


def test_path_mode_parse():
    assert PathMode.parse("exact").exact
    m = PathMode.parse("sample:200:7")
    assert (m.count, m.rng_seed) == (200, 7)
    assert m.describe() == "sampled(200)"
    with pytest.raises(ValueError):
        PathMode.parse("sampled")


@pytest.mark.parametrize("alpha", [-0.76, -1.88, -2.5])
def test_power_law_exact_data(alpha):
    hist = {k: round(1e12 * k**alpha) for k in range(1, 101)}
    a, beta = fit_power_law(hist)
    assert a == pytest.approx(alpha, abs=1e-6)
    z = sum(k**alpha for k in range(1, 101))
    assert beta == pytest.approx(1 / z, rel=1e-6)


def test_power_law_insufficient_support():
    with pytest.raises(ValueError, match="insufficient support"):
        fit_power_law({1: 5, 2: 3, 0: 10})


def test_histogram_csv_round_trip():
    hist = {1: 10, 2: 4, 5: 1}
    buf = io.StringIO()
    write_histogram_csv(hist, buf)
    lines = buf.getvalue().splitlines()
    assert lines[0] == "k,count,probability"
    assert lines[1] == "1,10,0.666666666667"
    assert read_histogram_csv(io.StringIO(buf.getvalue())) == hist


def test_er_baseline_is_density():
    g = line_graph(grow(GrowthConfig(steps=40, rng_seed=2)))
    n, m = g.node_count, g.edge_count
    assert er_baseline(n, m) == pytest.approx(m / math.comb(n, 2), abs=1e-12)


def test_report_k4():
    r = full_report(complete(4))
    assert r.clustering == 1.0
    assert r.er_baseline == 1.0
    assert r.assortativity is None
    assert r.avg_path_length == 1.0
    assert '"assortativity": null' in r.to_json()


def test_report_nas(nas):
    g = line_graph(nas)
    r = full_report(g, nas)
    assert (r.n_nodes, r.n_edges) == (54, 150)
    assert r.path_sampling == "exact"
    assert r.avg_path_length == pytest.approx(brute_path_length(g), abs=1e-12)
    assert r.component_coverage == 1.0
    assert r.community_alpha is None  # only two community sizes
    assert sum(graph_degree_histogram(g).values()) == 54
