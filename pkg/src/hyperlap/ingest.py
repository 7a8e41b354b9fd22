"""Loading bipartite user-community memberships (HGM-CSV).

Each data line is ``individual_id,community_id``; ``#`` lines are comments.
Files ending in ``.gz`` are read through gzip.
"""
from __future__ import annotations

import gzip
import io
import logging
from importlib import resources
from pathlib import Path
from typing import Iterable, Iterator, TextIO

import numpy as np

from .hypercore import Hypergraph, from_links, natural_key
from .linegraph import LineGraph, line_graph

log = logging.getLogger(__name__)


def _records(lines: Iterable[str], skipped: list[int]) -> Iterator[tuple[str, str]]:
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = [p.strip() for p in line.split(",")]
        if len(parts) != 2 or not parts[0] or not parts[1]:
            skipped.append(lineno)
            continue
        yield parts[0], parts[1]


def read_memberships(stream: TextIO) -> tuple[Hypergraph, int]:
    """Parse HGM-CSV, returning the hypergraph and the number of skipped lines.

    Two passes: the first discovers ids, the second fills integer pairs.
    Non-seekable streams are buffered in memory for the second pass.
    """
    if not stream.seekable():
        stream = io.StringIO(stream.read())
    start = stream.tell()

    skipped: list[int] = []
    link_ids: set[str] = set()
    node_ids: set[str] = set()
    for user, community in _records(stream, skipped):
        link_ids.add(user)
        node_ids.add(community)
    if not link_ids:
        raise ValueError("no valid membership lines")

    link_ext = sorted(link_ids, key=natural_key)
    node_ext = sorted(node_ids, key=natural_key)
    link_idx = {v: i for i, v in enumerate(link_ext)}
    node_idx = {v: j for j, v in enumerate(node_ext)}
    del link_ids, node_ids

    stream.seek(start)
    codes = np.fromiter(
        (link_idx[u] * len(node_ext) + node_idx[c] for u, c in _records(stream, [])),
        dtype=np.int64,
    )
    codes = np.unique(codes)
    link_of = codes // len(node_ext)
    node_of = codes % len(node_ext)
    bounds = np.searchsorted(link_of, np.arange(len(link_ext) + 1))
    links = [node_of[bounds[i]:bounds[i + 1]].tolist() for i in range(len(link_ext))]

    if skipped:
        preview = ", ".join(map(str, skipped[:5]))
        log.warning("skipped %d malformed line(s) (first at line %s)", len(skipped), preview)
    h = from_links(len(node_ext), links, node_labels=node_ext, link_labels=link_ext)
    return h, len(skipped)


def parse_memberships(stream: TextIO) -> Hypergraph:
    return read_memberships(stream)[0]


def open_text(path: str | Path, mode: str = "rt") -> TextIO:
    path = Path(path)
    if path.suffix == ".gz":
        return gzip.open(path, mode, encoding="utf-8")
    return open(path, mode, encoding="utf-8", newline="")


def load_memberships(path: str | Path) -> tuple[Hypergraph, int]:
    with open_text(path) as fh:
        return read_memberships(fh)


def project_social_graph(h: Hypergraph) -> LineGraph:
    """Social graph: users joined with weight = number of shared communities."""
    return line_graph(h)


def nas_fixture() -> Hypergraph:
    """The 12-community, 54-individual NAS group example network."""
    text = resources.files("hyperlap.data").joinpath("nas.csv").read_text(encoding="utf-8")
    return parse_memberships(io.StringIO(text))


def nas_community_names() -> dict[str, str]:
    text = resources.files("hyperlap.data").joinpath("nas_communities.csv").read_text(encoding="utf-8")
    names = {}
    for line in text.splitlines():
        if line and not line.startswith("#"):
            key, name = line.split(",", 1)
            names[key] = name
    return names
