"""Hypergraph model of overlapping communities.

Communities are the nodes of the hypergraph and individuals are its
hyperlinks: an individual who belongs to ``k`` communities is a hyperlink
joining those ``k`` nodes.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Optional, Sequence, TextIO

import numpy as np
import scipy.sparse as sp


@dataclass(frozen=True)
class Hypergraph:
    """Immutable hypergraph with a dual incidence index.

    ``links[i]`` holds the sorted node ids of hyperlink ``i`` and
    ``node_links[j]`` the sorted hyperlink ids incident to node ``j``.
    """

    node_count: int
    links: tuple[tuple[int, ...], ...]
    node_links: tuple[tuple[int, ...], ...]
    node_labels: Optional[tuple[str, ...]] = None
    link_labels: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        if len(self.node_links) != self.node_count:
            raise ValueError("node_links length does not match node_count")
        for i, link in enumerate(self.links):
            if not link:
                raise ValueError(f"hyperlink {i} is empty")
            if any(a >= b for a, b in zip(link, link[1:])):
                raise ValueError(f"hyperlink {i} is not sorted and duplicate-free")
            if link[0] < 0 or link[-1] >= self.node_count:
                raise ValueError(f"hyperlink {i} references a node out of range")

    @property
    def link_count(self) -> int:
        return len(self.links)

    @property
    def depths(self) -> np.ndarray:
        """Overlapping depth of every individual (column sums of R)."""
        return np.fromiter((len(l) for l in self.links), dtype=np.int64, count=len(self.links))

    @property
    def node_degrees(self) -> np.ndarray:
        """Community sizes (row sums of R)."""
        return np.fromiter((len(m) for m in self.node_links), dtype=np.int64, count=self.node_count)

    def node_label(self, j: int) -> str:
        return self.node_labels[j] if self.node_labels is not None else str(j)

    def link_label(self, i: int) -> str:
        return self.link_labels[i] if self.link_labels is not None else str(i)

    def node_id(self, label: str) -> int:
        if self.node_labels is None:
            return int(label)
        return self.node_labels.index(label)

    def link_id(self, label: str) -> int:
        if self.link_labels is None:
            return int(label)
        return self.link_labels.index(label)


@dataclass(frozen=True)
class IncidenceMatrix:
    """Unsigned N x L incidence matrix, ``r[j, i] = 1`` iff node j is in hyperlink i."""

    matrix: sp.csc_array = field(repr=False)

    @property
    def rows(self) -> int:
        return self.matrix.shape[0]

    @property
    def cols(self) -> int:
        return self.matrix.shape[1]

    def column_sums(self) -> np.ndarray:
        return np.asarray(self.matrix.sum(axis=0)).ravel().astype(np.int64)

    def row_sums(self) -> np.ndarray:
        return np.asarray(self.matrix.sum(axis=1)).ravel().astype(np.int64)

    def toarray(self) -> np.ndarray:
        return self.matrix.toarray()


_DIGITS = re.compile(r"(\d+)")


def natural_key(label: Hashable):
    """Sort key ordering ``l2`` before ``l10``; ties broken by the raw string."""
    if isinstance(label, (int, np.integer)):
        return ((0, int(label), ""),), str(label)
    s = str(label)
    parts = tuple(
        (0, int(p), "") if p.isdigit() else (1, 0, p) for p in _DIGITS.split(s) if p
    )
    return parts, s


def from_links(
    node_count: int,
    links: Sequence[Iterable[int]],
    node_labels: Optional[Sequence[str]] = None,
    link_labels: Optional[Sequence[str]] = None,
) -> Hypergraph:
    """Build a hypergraph directly from dense internal ids."""
    norm = tuple(tuple(sorted(set(int(v) for v in link))) for link in links)
    incident: list[list[int]] = [[] for _ in range(node_count)]
    for i, link in enumerate(norm):
        for j in link:
            if j < 0 or j >= node_count:
                raise ValueError(f"node {j} out of range for node_count={node_count}")
            incident[j].append(i)
    return Hypergraph(
        node_count=node_count,
        links=norm,
        node_links=tuple(tuple(m) for m in incident),
        node_labels=tuple(node_labels) if node_labels is not None else None,
        link_labels=tuple(link_labels) if link_labels is not None else None,
    )


def build_hypergraph(edges: Iterable[tuple[Hashable, Hashable]]) -> Hypergraph:
    """Build a hypergraph from ``(link_id, node_id)`` membership pairs.

    Duplicate pairs collapse; external ids are compacted to dense ranges
    in natural sort order, so the result does not depend on input order.
    """
    pairs = set()
    for link_id, node_id in edges:
        if isinstance(link_id, (int, np.integer)) and link_id < 0:
            raise ValueError(f"negative link id {link_id}")
        if isinstance(node_id, (int, np.integer)) and node_id < 0:
            raise ValueError(f"negative node id {node_id}")
        pairs.add((link_id, node_id))
    if not pairs:
        raise ValueError("empty hypergraph")

    link_ext = sorted({p[0] for p in pairs}, key=natural_key)
    node_ext = sorted({p[1] for p in pairs}, key=natural_key)
    link_idx = {v: i for i, v in enumerate(link_ext)}
    node_idx = {v: j for j, v in enumerate(node_ext)}

    members: list[list[int]] = [[] for _ in link_ext]
    for link_id, node_id in pairs:
        members[link_idx[link_id]].append(node_idx[node_id])
    return from_links(
        len(node_ext),
        members,
        node_labels=[str(v) for v in node_ext],
        link_labels=[str(v) for v in link_ext],
    )


def overlapping_depth(h: Hypergraph, link: int) -> int:
    """Number of communities individual ``link`` belongs to."""
    if not 0 <= link < h.link_count:
        raise IndexError(f"link {link} out of range [0, {h.link_count})")
    return len(h.links[link])


def overlapping_width(h: Hypergraph, a: int, b: int) -> int:
    """Number of individuals shared by communities ``a`` and ``b``."""
    if a == b:
        raise ValueError("width undefined for identical communities")
    for j in (a, b):
        if not 0 <= j < h.node_count:
            raise IndexError(f"node {j} out of range [0, {h.node_count})")
    return len(set(h.node_links[a]).intersection(h.node_links[b]))


def incident_link_pairs(h: Hypergraph) -> np.ndarray:
    """Encoded ``i * L + j`` (i < j) for every pair of hyperlinks meeting at a node.

    A pair appears once per shared node, so its multiplicity is the
    intersection size of the two hyperlinks.
    """
    L = h.link_count
    chunks = []
    for members in h.node_links:
        m = len(members)
        if m < 2:
            continue
        arr = np.asarray(members, dtype=np.int64)
        iu, ju = np.triu_indices(m, k=1)
        chunks.append(arr[iu] * L + arr[ju])
    if not chunks:
        return np.empty(0, dtype=np.int64)
    return np.concatenate(chunks)


def is_linear(h: Hypergraph) -> bool:
    """True iff every pair of hyperlinks shares at most one node."""
    codes = incident_link_pairs(h)
    if codes.size == 0:
        return True
    codes.sort()
    return not bool(np.any(codes[1:] == codes[:-1]))


def is_k_uniform(h: Hypergraph) -> Optional[int]:
    """Common hyperlink cardinality, or ``None`` if depths differ."""
    if h.link_count == 0:
        return None
    depths = h.depths
    k = int(depths[0])
    return k if bool(np.all(depths == k)) else None


def k_max(h: Hypergraph) -> int:
    if h.link_count == 0:
        raise ValueError("k_max undefined for a hypergraph without hyperlinks")
    return int(h.depths.max())


def incidence_matrix(h: Hypergraph) -> IncidenceMatrix:
    depths = h.depths
    cols = np.repeat(np.arange(h.link_count, dtype=np.int64), depths)
    rows = np.fromiter((j for link in h.links for j in link), dtype=np.int64, count=int(depths.sum()))
    data = np.ones(rows.size, dtype=np.int64)
    R = sp.csc_array((data, (rows, cols)), shape=(h.node_count, h.link_count))
    return IncidenceMatrix(R)


def write_hgm_csv(h: Hypergraph, out: TextIO) -> None:
    """Write memberships as ``individual_id,community_id`` lines in canonical order."""
    for i, link in enumerate(h.links):
        li = h.link_label(i)
        for j in link:
            out.write(f"{li},{h.node_label(j)}\n")


def to_hgm_csv(h: Hypergraph) -> str:
    import io

    buf = io.StringIO()
    write_hgm_csv(h, buf)
    return buf.getvalue()
