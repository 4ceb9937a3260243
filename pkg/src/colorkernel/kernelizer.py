"""Kernelization of q-Coloring on graphs that become a matching after deleting a modulator X.

Pipeline: enumerate every coloring constraint the outside vertices impose on X,
encode each as a low-degree polynomial over the palette variables of X, keep a
spanning subset of those polynomials, and rebuild the graph from G[X] plus the
gadgets of the kept constraints only.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field as dc_field
from itertools import combinations
from typing import Iterator, Mapping

from .field import PrimeField
from .graph import Graph, is_proper_coloring
from .palette import Palette, construct_palette
from .polyring import Poly, build_f, build_h
from .sparsifier import ConstraintTag, EchelonBasis, Kind, monomial_space_bound

log = logging.getLogger(__name__)


class KernelError(ValueError):
    pass


class NotAModulator(KernelError):
    def __init__(self, witness: int, neighbors: tuple[int, ...]):
        self.witness = witness
        self.neighbors = neighbors
        super().__init__(
            f"vertex {witness} has {len(neighbors)} neighbors outside the modulator: {list(neighbors)}"
        )


class LimitExceeded(KernelError):
    pass


class ImproperColoring(KernelError):
    pass


class KernelBoundViolation(RuntimeError):
    pass


def outside_neighbors(G: Graph, X: frozenset[int] | set[int], v: int) -> list[int]:
    return sorted(u for u in G.neighbors(v) if u not in X)


def validate_instance(G: Graph, X) -> None:
    Xs = set(X)
    missing = Xs - set(G.vertices)
    if missing:
        raise KernelError(f"modulator vertices {sorted(missing)} are not in the graph")
    for v in G.vertices:
        if v in Xs:
            continue
        nbrs = outside_neighbors(G, Xs, v)
        if len(nbrs) >= 2:
            raise NotAModulator(v, tuple(nbrs))


@dataclass(frozen=True)
class KernelInstance:
    G: Graph
    X: tuple[int, ...]
    q: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "X", tuple(sorted(set(self.X))))
        if self.q < 1:
            raise KernelError(f"q must be positive, got {self.q}")
        validate_instance(self.G, self.X)

    @property
    def k(self) -> int:
        return len(self.X)

    @property
    def X_set(self) -> frozenset[int]:
        return frozenset(self.X)

    def outside(self) -> list[int]:
        Xs = self.X_set
        return [v for v in self.G.vertices if v not in Xs]

    def modulator_neighbors(self, v: int) -> tuple[int, ...]:
        Xs = self.X_set
        return tuple(sorted(u for u in self.G.neighbors(v) if u in Xs))

    def matching_edges(self) -> list[tuple[int, int]]:
        Xs = self.X_set
        return [(u, v) for u, v in self.G.edges() if u not in Xs and v not in Xs]


@dataclass(frozen=True)
class ModulatorSearch:
    X: tuple[int, ...]
    optimal: bool


def _violating_path(G: Graph, X: set[int]) -> tuple[int, int, int] | None:
    for v in G.vertices:
        if v in X:
            continue
        nbrs = outside_neighbors(G, X, v)
        if len(nbrs) >= 2:
            return nbrs[0], v, nbrs[1]
    return None


def _branch(G: Graph, X: set[int], budget: int) -> set[int] | None:
    path = _violating_path(G, X)
    if path is None:
        return set(X)
    if budget == 0:
        return None
    # any modulator must delete a vertex of every path on three vertices
    for w in (path[1], path[0], path[2]):
        X.add(w)
        found = _branch(G, X, budget - 1)
        X.discard(w)
        if found is not None:
            return found
    return None


def _greedy_modulator(G: Graph) -> set[int]:
    X: set[int] = set()
    while _violating_path(G, X) is not None:
        best = max(
            (v for v in G.vertices if v not in X),
            key=lambda v: (len(outside_neighbors(G, X, v)), -v),
        )
        X.add(best)
    return X


def find_modulator(G: Graph, limit: int = 8, greedy: bool = True) -> ModulatorSearch:
    """Smallest set whose deletion leaves max degree <= 1, by 3-way branching up to ``limit``.

    Falls back to a greedy (non-minimum) set when the exact search exceeds the limit.
    """
    for size in range(limit + 1):
        found = _branch(G, set(), size)
        if found is not None:
            return ModulatorSearch(tuple(sorted(found)), True)
    if not greedy:
        raise LimitExceeded(f"no modulator of size <= {limit}")
    X = _greedy_modulator(G)
    log.info("exact modulator search exceeded limit %d; greedy set has size %d", limit, len(X))
    return ModulatorSearch(tuple(sorted(X)), False)


def enumerate_constraints(inst: KernelInstance) -> Iterator[ConstraintTag]:
    """All Type1 tags sorted by ``(v, S)``, then all Type2 tags sorted by ``(u1, u2, S1, S2)``."""
    q = inst.q
    for v in inst.outside():
        for S in combinations(inst.modulator_neighbors(v), q):
            yield ConstraintTag(Kind.TYPE1, (v, S))
    oriented = sorted([(u, v) for u, v in inst.matching_edges()] + [(v, u) for u, v in inst.matching_edges()])
    for u1, u2 in oriented:
        subsets1 = list(combinations(inst.modulator_neighbors(u1), q - 1))
        subsets2 = list(combinations(inst.modulator_neighbors(u2), q - 1))
        for S1 in subsets1:
            for S2 in subsets2:
                yield ConstraintTag(Kind.TYPE2, (u1, u2, S1, S2))


@dataclass(frozen=True)
class KernelStats:
    p1_total: int
    p1_basis: int
    p2_total: int
    p2_basis: int
    kernel_vertices: int
    kernel_edges: int
    kernel_bits: int

    KEYS = (
        "p1_total",
        "p1_basis",
        "p2_total",
        "p2_basis",
        "kernel_vertices",
        "kernel_edges",
        "kernel_bits",
    )

    def as_lines(self) -> list[str]:
        return [f"{key} {getattr(self, key)}" for key in self.KEYS]


def encoded_bits(n_vertices: int, n_edges: int) -> int:
    """Edge-list encoding: two endpoint ids of ``ceil(log2 |V'|)`` bits per edge."""
    return 2 * n_edges * math.ceil(math.log2(max(n_vertices, 2)))


@dataclass
class KernelResult:
    G_prime: Graph
    X: tuple[int, ...]
    q: int
    stats: KernelStats
    p1_members: list[ConstraintTag] = dc_field(default_factory=list)
    p2_members: list[ConstraintTag] = dc_field(default_factory=list)

    @property
    def k(self) -> int:
        return len(self.X)

    def bound_violations(self) -> list[str]:
        s, k, q = self.stats, self.k, self.q
        problems = []
        if s.kernel_vertices > k + s.p1_basis + 2 * s.p2_basis:
            problems.append(f"|V'|={s.kernel_vertices} > k + |P1'| + 2|P2'| = {k + s.p1_basis + 2 * s.p2_basis}")
        edge_cap = math.comb(k, 2) + q * s.p1_basis + (2 * q - 1) * s.p2_basis
        if s.kernel_edges > edge_cap:
            problems.append(f"|E'|={s.kernel_edges} > {edge_cap}")
        if s.p1_basis > monomial_space_bound(q, k, q - 1):
            problems.append(f"|P1'|={s.p1_basis} > (qk)^(q-1)+1")
        if s.p2_basis > monomial_space_bound(q, k, 2 * q - 3):
            problems.append(f"|P2'|={s.p2_basis} > (qk)^(2q-3)+1")
        if s.p1_basis > s.p1_total or s.p2_basis > s.p2_total:
            problems.append("basis larger than the constraint family")
        return problems


def default_palette(q: int) -> Palette:
    return construct_palette(q, PrimeField(3))


def constraint_polynomial(tag: ConstraintTag, q: int, P: Palette) -> Poly:
    if tag.kind is Kind.TYPE1:
        return build_f(q, P, tag.payload[1])
    _, _, S1, S2 = tag.payload
    return build_h(q, P, S1, S2)


def kernelize(inst: KernelInstance, P: Palette | None = None) -> KernelResult:
    q = inst.q
    if q < 3:
        raise KernelError(f"the kernel is defined for q >= 3, got q={q}")
    validate_instance(inst.G, inst.X)
    if P is None:
        P = default_palette(q)
    if P.q != q:
        raise KernelError(f"palette has q={P.q}, instance has q={q}")

    bases = {Kind.TYPE1: EchelonBasis(P.field), Kind.TYPE2: EchelonBasis(P.field)}
    # f depends only on S and h only on (S1, S2); outside vertices are just labels
    cache: dict[tuple, Poly] = {}
    for tag in enumerate_constraints(inst):
        key = (tag.kind, tag.payload[1:] if tag.kind is Kind.TYPE1 else tag.payload[2:])
        poly = cache.get(key)
        if poly is None:
            poly = cache[key] = constraint_polynomial(tag, q, P)
        bases[tag.kind].insert(poly, tag)

    p1 = bases[Kind.TYPE1].members()
    p2 = bases[Kind.TYPE2].members()
    vertices = set(inst.X)
    edges = set(inst.G.induced(inst.X).edges())
    for tag in p1 + p2:
        vertices.update(tag.outside_vertices)
        edges.update((min(u, v), max(u, v)) for u, v in tag.gadget_edges())
    G_prime = Graph(vertices, edges)

    stats = KernelStats(
        p1_total=bases[Kind.TYPE1].inserted,
        p1_basis=len(p1),
        p2_total=bases[Kind.TYPE2].inserted,
        p2_basis=len(p2),
        kernel_vertices=G_prime.n,
        kernel_edges=G_prime.m,
        kernel_bits=encoded_bits(G_prime.n, G_prime.m),
    )
    result = KernelResult(G_prime, inst.X, q, stats, p1, p2)
    problems = result.bound_violations()
    if problems:
        raise KernelBoundViolation("; ".join(problems))
    log.debug("kernelized n=%d k=%d q=%d -> %s", inst.G.n, inst.k, q, stats)
    return result


@dataclass(frozen=True)
class ExtensionReport:
    ok: bool
    violation: ConstraintTag | None = None

    def __bool__(self) -> bool:
        return self.ok


def _check_proper_on_X(inst: KernelInstance, c: Mapping[int, int]) -> None:
    for v in inst.X:
        if v not in c:
            raise ImproperColoring(f"modulator vertex {v} is uncolored")
        if not 0 <= c[v] < inst.q:
            raise ImproperColoring(f"color {c[v]} of vertex {v} is outside [0, {inst.q})")
    for u, v in inst.G.induced(inst.X).edges():
        if c[u] == c[v]:
            raise ImproperColoring(f"edge ({u}, {v}) is monochromatic")


def check_extension_conditions(inst: KernelInstance, c: Mapping[int, int]) -> ExtensionReport:
    """Check both extension conditions by literal enumeration of the vertex subsets."""
    _check_proper_on_X(inst, c)
    q = inst.q
    for v in inst.outside():
        for S in combinations(inst.modulator_neighbors(v), q):
            if len({c[z] for z in S}) == q:
                return ExtensionReport(False, ConstraintTag.type1(v, S))
    for a, b in inst.matching_edges():
        for u1, u2 in ((a, b), (b, a)):
            for S1 in combinations(inst.modulator_neighbors(u1), q - 1):
                colors1 = {c[z] for z in S1}
                if len(colors1) < q - 1:
                    continue
                for S2 in combinations(inst.modulator_neighbors(u2), q - 1):
                    if {c[z] for z in S2} == colors1:
                        return ExtensionReport(False, ConstraintTag.type2(u1, u2, S1, S2))
    return ExtensionReport(True)


def extend_coloring(inst: KernelInstance, c: Mapping[int, int]) -> dict[int, int] | None:
    """Extend a coloring of X to all of G, or ``None`` if the extension conditions fail."""
    try:
        if not check_extension_conditions(inst, c):
            return None
    except ImproperColoring:
        return None
    q = inst.q
    coloring = {v: c[v] for v in inst.X}

    def free(v: int) -> list[int]:
        used = {c[z] for z in inst.modulator_neighbors(v)}
        return [col for col in range(q) if col not in used]

    matched = set()
    for u1, u2 in inst.matching_edges():
        matched.update((u1, u2))
        f1, f2 = free(u1), free(u2)
        if not f1 or not f2:
            return None
        if len(f1) == 1:
            coloring[u1] = f1[0]
            rest = [col for col in f2 if col != f1[0]]
            if not rest:
                return None
            coloring[u2] = rest[0]
        else:
            coloring[u2] = f2[0]
            coloring[u1] = next(col for col in f1 if col != f2[0])
    for v in inst.outside():
        if v in matched:
            continue
        options = free(v)
        if not options:
            return None
        coloring[v] = options[0]
    if not is_proper_coloring(inst.G, coloring, q):
        return None
    return coloring
