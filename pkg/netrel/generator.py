"""Seeded random heterogeneous-arc networks.

The random stream is NumPy's PCG64 (`numpy.random.default_rng(seed)`). Per
attempt it draws, in order: the arc subset (without replacement over the
lexicographically ordered node pairs), then p_fwd and p_bwd for each chosen
arc in canonical order. Source is node 1, sink is node n.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations

import networkx as nx
import numpy as np

from .errors import ConfigError, GeneratorError
from .network import Network

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class GeneratorConfig:
    n: int
    arc_count: int
    seed: int
    prob_range_fwd: tuple[float, float] = (0.0, 1.0)
    prob_range_bwd: tuple[float, float] = (0.0, 1.0)
    require_connected: bool = True
    homogeneous: bool = False
    max_retries: int = 100

    def __post_init__(self):
        if self.n < 2:
            raise ConfigError(f"generator needs n >= 2, got {self.n}")
        max_arcs = self.n * (self.n - 1) // 2
        if not 0 <= self.arc_count <= max_arcs:
            raise ConfigError(f"arc_count must be in 0..{max_arcs} for n={self.n}, got {self.arc_count}")
        for name in ("prob_range_fwd", "prob_range_bwd"):
            lo, hi = getattr(self, name)
            if not 0.0 <= lo <= hi <= 1.0:
                raise ConfigError(f"{name} must satisfy 0 <= lo <= hi <= 1, got ({lo}, {hi})")
        if self.seed < 0:
            raise ConfigError(f"seed must be non-negative, got {self.seed}")
        if self.max_retries < 1:
            raise ConfigError(f"max_retries must be positive, got {self.max_retries}")


def _connected(n, pairs):
    g = nx.Graph()
    g.add_nodes_from(range(1, n + 1))
    g.add_edges_from(pairs)
    return nx.has_path(g, 1, n)


def generate(cfg):
    rng = np.random.default_rng(cfg.seed)
    all_pairs = list(combinations(range(1, cfg.n + 1), 2))

    for attempt in range(1, cfg.max_retries + 1):
        chosen = sorted(rng.choice(len(all_pairs), size=cfg.arc_count, replace=False).tolist())
        pairs = [all_pairs[k] for k in chosen]
        arcs = []
        for i, j in pairs:
            p_fwd = float(rng.uniform(*cfg.prob_range_fwd))
            p_bwd = p_fwd if cfg.homogeneous else float(rng.uniform(*cfg.prob_range_bwd))
            arcs.append((i, j, p_fwd, p_bwd))

        if not cfg.require_connected or _connected(cfg.n, pairs):
            log.debug("generated network after %d attempt(s) (seed %d)", attempt, cfg.seed)
            return Network.build(cfg.n, 1, cfg.n, arcs)

    raise GeneratorError(
        f"no connected {cfg.n}-node network with {cfg.arc_count} arcs after "
        f"{cfg.max_retries} attempts (seed {cfg.seed})"
    )
