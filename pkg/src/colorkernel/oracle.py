"""Brute-force ground truth for colorability, the extension lemma, and palette-colored matrices."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .field import Matrix
from .graph import Graph, is_proper_coloring
from .kernelizer import ImproperColoring, KernelInstance, check_extension_conditions
from .palette import Palette

DEFAULT_MAX_VERTICES = 24
DEFAULT_MAX_ENUMERATION = 1 << 20


class SizeLimit(RuntimeError):
    pass


@dataclass(frozen=True)
class ColoringWitness:
    assignment: dict[int, int] | None

    @property
    def colorable(self) -> bool:
        return self.assignment is not None

    def __bool__(self) -> bool:
        return self.colorable


def is_q_colorable(G: Graph, q: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> ColoringWitness:
    """Backtracking search over vertices in descending degree order with forward checking."""
    if q < 1:
        raise ValueError(f"q must be positive, got {q}")
    if G.n > max_vertices:
        raise SizeLimit(f"graph has {G.n} vertices, oracle guard is {max_vertices}")
    order = sorted(G.vertices, key=lambda v: (-G.degree(v), v))
    domains = {v: set(range(q)) for v in order}
    coloring: dict[int, int] = {}

    def search(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        # colors above `used` are interchangeable, so try only one fresh color
        for col in sorted(domains[v]):
            if col > used:
                break
            pruned = []
            dead = False
            for u in G.neighbors(v):
                if u not in coloring and col in domains[u]:
                    domains[u].discard(col)
                    pruned.append(u)
                    if not domains[u]:
                        dead = True
            if not dead:
                coloring[v] = col
                if search(i + 1, max(used, col + 1)):
                    return True
                del coloring[v]
            for u in pruned:
                domains[u].add(col)
        return False

    if not search(0, 0):
        return ColoringWitness(None)
    if not is_proper_coloring(G, coloring, q):
        raise AssertionError("backtracking produced an improper coloring")
    return ColoringWitness(dict(sorted(coloring.items())))


def lemma7_equivalence(inst: KernelInstance, max_colorings: int = DEFAULT_MAX_ENUMERATION) -> bool:
    """Compare "some proper coloring of X meets both extension conditions" with colorability of G."""
    q, X = inst.q, inst.X
    if q ** len(X) > max_colorings:
        raise SizeLimit(f"{q}^{len(X)} colorings of the modulator exceed the guard {max_colorings}")
    some_extendable = False
    for colors in product(range(q), repeat=len(X)):
        c = dict(zip(X, colors))
        try:
            if check_extension_conditions(inst, c):
                some_extendable = True
                break
        except ImproperColoring:
            continue
    return some_extendable == is_q_colorable(inst.G, q).colorable


def is_c_colored(M: Matrix, P: Palette) -> bool:
    return M.field == P.field and M.rows == P.q and all(col in P.columns for col in M.columns())


def enumerate_colored_matrices(
    P: Palette, cols: int, max_count: int = DEFAULT_MAX_ENUMERATION
) -> Iterator[Matrix]:
    """All ``q**cols`` matrices whose columns are palette vectors, in lexicographic color order."""
    if cols < 1:
        raise ValueError("cols must be at least 1")
    if P.q ** cols > max_count:
        raise SizeLimit(f"{P.q}^{cols} matrices exceed the guard {max_count}")
    for colors in product(range(P.q), repeat=cols):
        yield Matrix.from_columns(P.field, [P.columns[i] for i in colors])
