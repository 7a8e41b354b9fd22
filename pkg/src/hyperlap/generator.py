"""Growth of linear hypergraphs by preferential attachment.

Every step adds a growing element of new nodes whose hyperlinks each attach
to exactly one existing node. Targets are distinct and drawn with
probability proportional to current node degree.

Randomness comes from numpy's PCG64 bit generator (a documented, portable
algorithm), and target draws use integer cumulative weights only, so runs
reproduce bit-for-bit across platforms.
"""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Callable, Optional, Sequence

import numpy as np

from .hypercore import Hypergraph, from_links, is_linear

# 7-node seed: linear, depths in {2, 3}, every node covered
DEFAULT_SEED_LINKS: tuple[tuple[int, ...], ...] = (
    (0, 1),
    (1, 2),
    (2, 3),
    (3, 4),
    (4, 5, 6),
    (0, 2, 5),
)

# new nodes a=0, b=1, c=2; each hyperlink also receives one existing target
DEFAULT_ELEMENT: tuple[tuple[int, ...], ...] = (
    (0,),
    (1,),
    (0, 1),
    (1, 2),
)


class GrowthError(RuntimeError):
    pass


@dataclass(frozen=True)
class GrowthConfig:
    steps: int = 0
    rng_seed: int = 0
    max_retries: int = 100
    seed_links: tuple[tuple[int, ...], ...] = DEFAULT_SEED_LINKS
    element: tuple[tuple[int, ...], ...] = DEFAULT_ELEMENT
    seed_node_count: Optional[int] = field(default=None)

    def __post_init__(self):
        object.__setattr__(self, "seed_links", tuple(tuple(sorted(l)) for l in self.seed_links))
        object.__setattr__(self, "element", tuple(tuple(sorted(l)) for l in self.element))
        if self.steps < 0:
            raise ValueError("steps must be >= 0")
        if not 0 <= self.rng_seed < 2**64:
            raise ValueError("rng_seed must fit in an unsigned 64-bit integer")
        if self.max_retries < 1:
            raise ValueError("max_retries must be >= 1")

    @property
    def n_seed_nodes(self) -> int:
        if self.seed_node_count is not None:
            return self.seed_node_count
        return 1 + max((max(l) for l in self.seed_links if l), default=-1)

    @property
    def n_new_nodes(self) -> int:
        return 1 + max(max(l) for l in self.element if l)

    def seed_hypergraph(self) -> Hypergraph:
        return from_links(self.n_seed_nodes, self.seed_links)

    def validate(self) -> None:
        n0 = self.n_seed_nodes
        n_targets = len(self.element)
        if n0 < n_targets:
            raise ValueError(f"seed too small: {n0} nodes, need at least {n_targets}")
        seed = self.seed_hypergraph()
        if not is_linear(seed):
            raise ValueError("seed hypergraph is not linear")
        if any(len(l) not in (2, 3) for l in seed.links):
            raise ValueError("seed hyperlinks must have depth 2 or 3")
        if np.any(seed.node_degrees < 1):
            raise ValueError("every seed node needs degree >= 1")
        if not self.element or any(not l for l in self.element):
            raise ValueError("growing element needs non-empty hyperlink templates")
        covered = {v for l in self.element for v in l}
        if covered != set(range(self.n_new_nodes)):
            raise ValueError("growing element leaves a new node uncovered")

    def to_dict(self) -> dict:
        d = asdict(self)
        d["seed_links"] = [list(l) for l in self.seed_links]
        d["element"] = [list(l) for l in self.element]
        return d


def _parse_link_list(text: str) -> tuple[tuple[int, ...], ...]:
    # "0 1; 1 2; 4 5 6"
    return tuple(
        tuple(int(v) for v in part.replace(",", " ").split())
        for part in text.split(";")
        if part.strip()
    )


def load_config(path: str | Path, **overrides) -> GrowthConfig:
    """Read a GrowthConfig from JSON or ``key=value`` text."""
    text = Path(path).read_text(encoding="utf-8")
    stripped = text.lstrip()
    if stripped.startswith("{"):
        raw = json.loads(text)
    else:
        raw = {}
        for lineno, line in enumerate(text.splitlines(), 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key=value")
            key, value = (s.strip() for s in line.split("=", 1))
            raw[key] = value
    return config_from_mapping({**raw, **{k: v for k, v in overrides.items() if v is not None}})


def config_from_mapping(raw: dict) -> GrowthConfig:
    known = {"steps", "rng_seed", "max_retries", "seed_links", "element", "seed_node_count"}
    unknown = set(raw) - known
    if unknown:
        raise ValueError(f"unknown config keys: {sorted(unknown)}")
    kwargs = {}
    for key in ("steps", "rng_seed", "max_retries", "seed_node_count"):
        if raw.get(key) is not None:
            kwargs[key] = int(raw[key])
    for key in ("seed_links", "element"):
        if key in raw:
            v = raw[key]
            kwargs[key] = _parse_link_list(v) if isinstance(v, str) else tuple(tuple(l) for l in v)
    return GrowthConfig(**kwargs)


def _draw_distinct(rng: np.random.Generator, weights: np.ndarray, count: int) -> list[int]:
    """Sequential degree-proportional draws without replacement."""
    w = weights.copy()
    picked = []
    for _ in range(count):
        cum = np.cumsum(w)
        total = int(cum[-1])
        if total <= 0:
            raise GrowthError("no eligible target left")
        r = int(rng.integers(total))
        idx = int(np.searchsorted(cum, r, side="right"))
        picked.append(idx)
        w[idx] = 0
    return picked


Observer = Callable[[int, np.ndarray, Sequence[int]], None]


def grow(config: GrowthConfig, observer: Optional[Observer] = None) -> Hypergraph:
    """Run ``config.steps`` growth steps from the seed.

    ``observer(step, degrees, targets)`` is called after each accepted draw
    with the degrees of existing nodes before the step.
    """
    config.validate()
    n0 = config.n_seed_nodes
    n_new = config.n_new_nodes
    element = config.element
    n_final = n0 + n_new * config.steps

    links: list[tuple[int, ...]] = list(config.seed_links)
    degree = np.zeros(n_final, dtype=np.int64)
    # node -> set of nodes sharing a hyperlink with it; used for the linearity guard
    neighbours: list[set[int]] = [set() for _ in range(n_final)]
    for link in links:
        for v in link:
            degree[v] += 1
            neighbours[v].update(u for u in link if u != v)

    rng = np.random.Generator(np.random.PCG64(config.rng_seed))
    n = n0
    for step in range(config.steps):
        new_ids = range(n, n + n_new)
        for attempt in range(config.max_retries):
            targets = _draw_distinct(rng, degree[:n], len(element))
            proposed = [tuple(sorted([new_ids[v] for v in tmpl] + [x])) for tmpl, x in zip(element, targets)]
            if _keeps_linear(proposed, neighbours):
                break
        else:
            raise GrowthError(
                f"step {step}: linearity not achieved after {config.max_retries} retries"
            )
        if observer is not None:
            observer(step, degree[:n].copy(), targets)
        for link in proposed:
            links.append(link)
            for v in link:
                degree[v] += 1
                neighbours[v].update(u for u in link if u != v)
        n += n_new

    return from_links(n_final, links)


def _keeps_linear(proposed: list[tuple[int, ...]], neighbours: list[set[int]]) -> bool:
    # a node pair may co-occur in at most one hyperlink overall
    seen: set[tuple[int, int]] = set()
    for link in proposed:
        for a_i, a in enumerate(link):
            for b in link[a_i + 1:]:
                if b in neighbours[a] or (a, b) in seen:
                    return False
                seen.add((a, b))
    return True


def degree_histogram(h: Hypergraph, side: str = "node") -> dict[int, int]:
    """Histogram of community sizes (``node``) or overlapping depths (``link``)."""
    if side == "node":
        values = h.node_degrees
    elif side == "link":
        values = h.depths
    else:
        raise ValueError(f"side must be 'node' or 'link', got {side!r}")
    if values.size == 0:
        raise ValueError("empty hypergraph")
    k, c = np.unique(values, return_counts=True)
    return {int(a): int(b) for a, b in zip(k, c)}
