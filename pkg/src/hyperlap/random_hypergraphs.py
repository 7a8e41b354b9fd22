"""Random hypergraph families used by the theorem checks."""
from __future__ import annotations

import itertools

import numpy as np

from .hypercore import Hypergraph, from_links


def random_hypergraph(
    rng: np.random.Generator,
    n_nodes: int,
    n_links: int,
    max_depth: int = 5,
    uniform: bool = False,
) -> Hypergraph:
    """Hyperlinks of random depth in ``[1, max_depth]`` (fixed depth if ``uniform``).

    Nothing prevents two hyperlinks from sharing several nodes, so the
    result is usually nonlinear for dense parameter choices.
    """
    max_depth = min(max_depth, n_nodes)
    k = int(rng.integers(1, max_depth + 1))
    links = []
    for _ in range(n_links):
        depth = k if uniform else int(rng.integers(1, max_depth + 1))
        links.append(rng.choice(n_nodes, size=depth, replace=False).tolist())
    return from_links(n_nodes, links)


def random_linear_hypergraph(
    rng: np.random.Generator,
    n_nodes: int,
    n_links: int,
    depths=(2, 3),
    attempts: int = 50,
) -> Hypergraph:
    """Greedy random packing of hyperlinks that pairwise share at most one node.

    Returns fewer than ``n_links`` hyperlinks when the packing saturates.
    """
    used_pairs: set[tuple[int, int]] = set()
    links = []
    depths = tuple(d for d in depths if d <= n_nodes)
    for _ in range(n_links):
        for _ in range(attempts):
            depth = int(rng.choice(depths))
            cand = sorted(rng.choice(n_nodes, size=depth, replace=False).tolist())
            pairs = list(itertools.combinations(cand, 2))
            if not any(p in used_pairs for p in pairs):
                used_pairs.update(pairs)
                links.append(cand)
                break
    return from_links(n_nodes, links)


def random_linear_uniform(rng: np.random.Generator, n_nodes: int, k: int, n_links: int) -> Hypergraph:
    return random_linear_hypergraph(rng, n_nodes, n_links, depths=(k,), attempts=200)


def complete_graph_hypergraph(n: int) -> Hypergraph:
    """K_n as a 2-uniform hypergraph."""
    return from_links(n, list(itertools.combinations(range(n), 2)))
