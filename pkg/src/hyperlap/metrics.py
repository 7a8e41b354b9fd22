"""Topology metrics of line graphs and power-law fits of degree distributions.

All metrics use connectivity only; edge weights are ignored.
"""
from __future__ import annotations

import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from typing import Mapping, Optional, TextIO

import numpy as np
import scipy.sparse as sp
from scipy.sparse.csgraph import connected_components, shortest_path

from .hypercore import Hypergraph
from .linegraph import LineGraph


@dataclass(frozen=True)
class PathMode:
    """``exact`` (BFS from every node) or sampled BFS from ``count`` sources."""

    count: Optional[int] = None
    rng_seed: int = 0

    @property
    def exact(self) -> bool:
        return self.count is None

    @classmethod
    def parse(cls, text: str) -> "PathMode":
        # "exact" or "sample:COUNT[:SEED]"
        if text == "exact":
            return cls()
        parts = text.split(":")
        if parts[0] != "sample" or len(parts) not in (2, 3):
            raise ValueError(f"path mode must be 'exact' or 'sample:COUNT[:SEED]', got {text!r}")
        count = int(parts[1])
        if count < 1:
            raise ValueError("sample count must be >= 1")
        return cls(count=count, rng_seed=int(parts[2]) if len(parts) == 3 else 0)

    def describe(self) -> str:
        return "exact" if self.exact else f"sampled({self.count})"


EXACT = PathMode()


@dataclass(frozen=True)
class PathLength:
    value: float
    component_size: int
    coverage: float
    sources: int


@dataclass
class MetricsReport:
    n_nodes: int
    n_edges: int
    alpha: Optional[float]
    beta: Optional[float]
    clustering: float
    er_baseline: Optional[float]
    assortativity: Optional[float]
    avg_path_length: Optional[float]
    path_sampling: str
    component_coverage: float
    community_alpha: Optional[float] = None
    community_beta: Optional[float] = None

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


def _pattern(g: LineGraph) -> sp.csr_array:
    A = g.adjacency(weighted=False)
    A.sort_indices()
    return A


def local_clustering(g: LineGraph) -> np.ndarray:
    A = _pattern(g)
    deg = g.degrees().astype(np.float64)
    # triangles through each node = (A^2 * A) row sums / 2
    tri = np.asarray((A @ A).multiply(A).sum(axis=1)).ravel() / 2.0
    pairs = deg * (deg - 1) / 2.0
    out = np.zeros(g.node_count)
    mask = deg >= 2
    out[mask] = tri[mask] / pairs[mask]
    return out


def clustering_coefficient(g: LineGraph) -> float:
    """Mean local clustering; nodes with fewer than two neighbours count as 0."""
    if g.node_count < 1:
        raise ValueError("clustering undefined on an empty graph")
    return float(math.fsum(local_clustering(g)) / g.node_count)


def er_baseline(n_nodes: int, n_edges: int) -> Optional[float]:
    """Clustering of an Erdos-Renyi graph of equal density, i.e. the link density."""
    if n_nodes < 2:
        return None
    return 2.0 * n_edges / (n_nodes * (n_nodes - 1))


def assortativity(g: LineGraph) -> Optional[float]:
    """Pearson correlation of degrees at either end of a link; ``None`` if undefined."""
    if g.edge_count < 1:
        raise ValueError("assortativity needs at least one edge")
    deg = g.degrees().astype(np.float64)
    # each undirected link counted in both directions makes the measure symmetric
    x = np.concatenate([deg[g.src], deg[g.dst]])
    y = np.concatenate([deg[g.dst], deg[g.src]])
    xc = x - x.mean()
    yc = y - y.mean()
    sxx = float(np.dot(xc, xc))
    syy = float(np.dot(yc, yc))
    if sxx == 0.0 or syy == 0.0:
        return None
    rho = float(np.dot(xc, yc)) / math.sqrt(sxx * syy)
    return min(1.0, max(-1.0, rho))


def _bfs_total(A: sp.csr_array, sources: np.ndarray) -> tuple[float, int]:
    d = shortest_path(A, method="D", unweighted=True, indices=sources)
    d = np.atleast_2d(d)
    finite = np.isfinite(d) & (d > 0)
    return float(d[finite].sum()), int(finite.sum())


def average_path_length(g: LineGraph, mode: PathMode = EXACT, threads: int = 1) -> PathLength:
    """Mean hop distance between ordered pairs inside the largest component."""
    if g.node_count == 0:
        raise ValueError("path length undefined on an empty graph")
    A = _pattern(g)
    _, labels = connected_components(A, directed=False)
    counts = np.bincount(labels)
    giant = int(np.argmax(counts))
    members = np.flatnonzero(labels == giant)
    size = members.size
    coverage = size / g.node_count
    if size < 2:
        return PathLength(float("nan"), size, coverage, 0)

    sub = A[members][:, members]
    if mode.exact:
        sources = np.arange(size)
    else:
        rng = np.random.Generator(np.random.PCG64(mode.rng_seed))
        sources = np.sort(rng.choice(size, size=min(mode.count, size), replace=False))

    chunks = np.array_split(sources, max(1, min(threads, sources.size)))
    if threads > 1 and len(chunks) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda s: _bfs_total(sub, s), chunks))
    else:
        parts = [_bfs_total(sub, s) for s in chunks]
    # chunks are reduced in source order so the result does not depend on threads
    total = math.fsum(p[0] for p in parts)
    pairs = sum(p[1] for p in parts)
    return PathLength(total / pairs, size, coverage, int(sources.size))


def graph_degree_histogram(g: LineGraph) -> dict[int, int]:
    k, c = np.unique(g.degrees(), return_counts=True)
    return {int(a): int(b) for a, b in zip(k, c)}


def fit_power_law(hist: Mapping[int, int]) -> tuple[float, float]:
    """Least-squares fit of ``Pr(k) = beta * k**alpha`` on log-log axes.

    Counts are normalized to probabilities over the whole histogram; only
    bins with positive ``k`` and positive count enter the fit.
    """
    total = sum(int(c) for c in hist.values())
    pts = sorted((float(k), c / total) for k, c in hist.items() if k > 0 and c > 0)
    if len(pts) < 3:
        raise ValueError("insufficient support")
    x = np.log([p[0] for p in pts])
    y = np.log([p[1] for p in pts])
    slope, intercept = np.polyfit(x, y, 1)
    return float(slope), float(math.exp(intercept))


def write_histogram_csv(hist: Mapping[int, int], out: TextIO) -> None:
    total = sum(hist.values())
    out.write("k,count,probability\n")
    for k in sorted(hist):
        out.write(f"{k},{hist[k]},{hist[k] / total:.12g}\n")


def read_histogram_csv(stream: TextIO) -> dict[int, int]:
    """Parse ``k,count[,probability]`` rows; a header line is skipped."""
    hist: dict[int, int] = {}
    for raw in stream:
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split(",")
        if parts[0] == "k":
            continue
        hist[int(parts[0])] = hist.get(int(parts[0]), 0) + int(parts[1])
    return hist


def _safe_fit(hist):
    try:
        return fit_power_law(hist)
    except ValueError:
        return None, None


def full_report(
    g: LineGraph,
    h: Optional[Hypergraph] = None,
    paths: PathMode = EXACT,
    threads: int = 1,
) -> MetricsReport:
    alpha, beta = _safe_fit(graph_degree_histogram(g)) if g.node_count else (None, None)
    rho = assortativity(g) if g.edge_count else None
    pl = average_path_length(g, paths, threads=threads) if g.node_count else None
    report = MetricsReport(
        n_nodes=g.node_count,
        n_edges=g.edge_count,
        alpha=alpha,
        beta=beta,
        clustering=clustering_coefficient(g) if g.node_count else 0.0,
        er_baseline=er_baseline(g.node_count, g.edge_count),
        assortativity=rho,
        avg_path_length=None if pl is None or math.isnan(pl.value) else pl.value,
        path_sampling=paths.describe(),
        component_coverage=pl.coverage if pl is not None else 0.0,
    )
    if h is not None:
        sizes = np.unique(h.node_degrees, return_counts=True)
        report.community_alpha, report.community_beta = _safe_fit(
            {int(k): int(c) for k, c in zip(*sizes)}
        )
    return report
