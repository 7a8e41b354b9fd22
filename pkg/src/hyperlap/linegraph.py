"""Line graphs of hypergraphs.

The line graph has one node per hyperlink (individual); two individuals are
joined with weight ``t`` when they share ``t`` communities. Two independent
constructions are provided: a combinatorial one accumulating pairs per
community, used in production, and an algebraic one from the Gram matrix
of the incidence matrix, used for verification.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import TextIO

import numpy as np
import scipy.sparse as sp

from .hypercore import Hypergraph, IncidenceMatrix, incident_link_pairs

GRAM_DENSE_THRESHOLD = 4096


@dataclass(frozen=True)
class LineGraph:
    """Undirected graph on ``node_count`` nodes with integer edge weights.

    Edges are stored as parallel arrays with ``src < dst``, sorted
    lexicographically by ``(src, dst)``.
    """

    node_count: int
    src: np.ndarray = field(repr=False)
    dst: np.ndarray = field(repr=False)
    weight: np.ndarray = field(repr=False)

    def __post_init__(self):
        if not (len(self.src) == len(self.dst) == len(self.weight)):
            raise ValueError("edge arrays differ in length")
        if len(self.src) and np.any(self.src >= self.dst):
            raise ValueError("edges must satisfy src < dst (no self-loops)")
        if len(self.weight) and np.any(self.weight < 1):
            raise ValueError("edge weights must be >= 1")

    @property
    def edge_count(self) -> int:
        return len(self.src)

    @property
    def weighted(self) -> bool:
        return bool(len(self.weight)) and bool(np.any(self.weight > 1))

    def edges(self) -> list[tuple[int, int, int]]:
        return list(zip(self.src.tolist(), self.dst.tolist(), self.weight.tolist()))

    def adjacency(self, weighted: bool = True) -> sp.csr_array:
        """Symmetric sparse adjacency; ``weighted=False`` gives the 0/1 pattern."""
        w = self.weight if weighted else np.ones_like(self.weight)
        rows = np.concatenate([self.src, self.dst])
        cols = np.concatenate([self.dst, self.src])
        data = np.concatenate([w, w]).astype(np.int64)
        n = self.node_count
        return sp.csr_array((data, (rows, cols)), shape=(n, n))

    def degrees(self) -> np.ndarray:
        """Number of neighbours of every node (weights ignored)."""
        deg = np.bincount(self.src, minlength=self.node_count)
        deg += np.bincount(self.dst, minlength=self.node_count)
        return deg.astype(np.int64)

    @classmethod
    def from_edges(cls, node_count: int, edges) -> "LineGraph":
        """Canonicalize an iterable of ``(i, j)`` or ``(i, j, t)`` tuples."""
        acc: dict[tuple[int, int], int] = {}
        for e in edges:
            i, j = int(e[0]), int(e[1])
            t = int(e[2]) if len(e) > 2 else 1
            if i == j:
                raise ValueError(f"self-loop at node {i}")
            if i > j:
                i, j = j, i
            if (i, j) in acc and acc[(i, j)] != t:
                raise ValueError(f"conflicting weights for edge ({i}, {j})")
            acc[(i, j)] = t
        keys = sorted(acc)
        src = np.array([k[0] for k in keys], dtype=np.int64)
        dst = np.array([k[1] for k in keys], dtype=np.int64)
        weight = np.array([acc[k] for k in keys], dtype=np.int64)
        if keys and (src.min() < 0 or dst.max() >= node_count):
            raise ValueError("edge endpoint out of range")
        return cls(node_count, src, dst, weight)


def line_graph(h: Hypergraph) -> LineGraph:
    L = h.link_count
    codes = incident_link_pairs(h)
    uniq, counts = np.unique(codes, return_counts=True)
    return LineGraph(
        node_count=L,
        src=(uniq // max(L, 1)).astype(np.int64),
        dst=(uniq % max(L, 1)).astype(np.int64),
        weight=counts.astype(np.int64),
    )


def correction_diagonal(R: IncidenceMatrix, kmax: int) -> np.ndarray:
    """Diagonal ``c`` lifting every diagonal entry of ``R^T R`` to ``kmax``."""
    depths = R.column_sums()
    if depths.size and int(depths.max()) != kmax:
        raise ValueError(f"kmax={kmax} inconsistent with max column sum {int(depths.max())}")
    return kmax - depths


def adjacency_via_gram(R: IncidenceMatrix, kmax: int, dense_threshold: int = GRAM_DENSE_THRESHOLD) -> np.ndarray:
    """Dense line-graph adjacency ``R^T R + C - kmax I`` in exact integers."""
    L = R.cols
    if L > dense_threshold:
        raise ValueError(
            f"Gram construction limited to L <= {dense_threshold} (got {L}); use line_graph"
        )
    c = correction_diagonal(R, kmax)
    M = R.matrix.astype(np.int64)
    gram = (M.T @ M).toarray()
    gram[np.diag_indices(L)] += c - kmax
    return gram


def community_cliques(h: Hypergraph) -> list[frozenset[int]]:
    """Line-graph clique formed by the members of each community, in node order."""
    return [frozenset(m) for m in h.node_links]


def write_edge_list(g: LineGraph, out: TextIO, header: bool = True) -> None:
    """``i j t`` per line; ``t`` dropped for unweighted graphs."""
    if header:
        out.write(f"# nodes={g.node_count}\n")
    if g.weighted:
        for i, j, t in zip(g.src.tolist(), g.dst.tolist(), g.weight.tolist()):
            out.write(f"{i} {j} {t}\n")
    else:
        for i, j in zip(g.src.tolist(), g.dst.tolist()):
            out.write(f"{i} {j}\n")


def read_edge_list(stream: TextIO, node_count: int | None = None) -> LineGraph:
    """Parse an edge list written by :func:`write_edge_list`.

    Without ``node_count`` the graph spans ``max id + 1`` nodes, so
    trailing isolated nodes are lost; a ``# nodes=N`` header restores them.
    """
    edges = []
    header_n = None
    for lineno, raw in enumerate(stream, 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("nodes="):
                header_n = int(body.split("=", 1)[1])
            continue
        parts = line.split()
        if len(parts) not in (2, 3):
            raise ValueError(f"line {lineno}: expected 'i j' or 'i j t', got {line!r}")
        edges.append(tuple(int(p) for p in parts))
    n = node_count if node_count is not None else header_n
    if n is None:
        n = 1 + max((max(e[0], e[1]) for e in edges), default=-1)
    return LineGraph.from_edges(n, edges)
