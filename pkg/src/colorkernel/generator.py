"""Seeded random instances: a modulator X plus a matching with isolated vertices outside it."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .graph import Graph


class GenSpecError(ValueError):
    pass


@dataclass(frozen=True)
class GenSpec:
    n: int
    k: int
    q: int = 3
    p_xx: float = 0.5
    p_xr: float = 0.5
    m_frac: float = 0.5
    seed: int = 0

    def __post_init__(self) -> None:
        if self.n < 0 or not 0 <= self.k <= self.n:
            raise GenSpecError(f"need 0 <= k <= n, got n={self.n}, k={self.k}")
        for name in ("p_xx", "p_xr", "m_frac"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise GenSpecError(f"{name} must lie in [0, 1], got {value}")
        if self.q < 1:
            raise GenSpecError(f"q must be positive, got {self.q}")
        if not 0 <= self.seed < 2**64:
            raise GenSpecError("seed must be a 64-bit unsigned integer")


def generate_instance(spec: GenSpec) -> tuple[Graph, tuple[int, ...]]:
    """No coloring is planted; colorable and non-colorable instances both occur."""
    rng = random.Random(spec.seed)
    ids = list(range(spec.n))
    rng.shuffle(ids)
    X = sorted(ids[: spec.k])
    rest = ids[spec.k:]

    edges = []
    for i, u in enumerate(X):
        for v in X[i + 1:]:
            if rng.random() < spec.p_xx:
                edges.append((u, v))
    for v in sorted(rest):
        for x in X:
            if rng.random() < spec.p_xr:
                edges.append((x, v))
    pairs = int(spec.m_frac * len(rest)) // 2
    matched = rest[: 2 * pairs]
    for i in range(pairs):
        edges.append((matched[2 * i], matched[2 * i + 1]))
    return Graph.from_edges(spec.n, edges), tuple(X)
