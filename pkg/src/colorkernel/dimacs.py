"""DIMACS ``.col`` graphs and modulator sidecar files.

Files use 1-based vertex ids; in memory graphs are 0-based.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable

from .graph import Graph, GraphError


class DimacsError(ValueError):
    pass


def parse_dimacs(text: str) -> Graph:
    n = None
    declared_m = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise DimacsError(f"line {lineno}: duplicate problem line")
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise DimacsError(f"line {lineno}: expected 'p edge <n> <m>'")
            try:
                n, declared_m = int(parts[2]), int(parts[3])
            except ValueError:
                raise DimacsError(f"line {lineno}: non-integer size") from None
            if n < 0 or declared_m < 0:
                raise DimacsError(f"line {lineno}: negative size")
        elif parts[0] == "e":
            if n is None:
                raise DimacsError(f"line {lineno}: edge before problem line")
            if len(parts) != 3:
                raise DimacsError(f"line {lineno}: expected 'e <u> <v>'")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise DimacsError(f"line {lineno}: non-integer vertex id") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise DimacsError(f"line {lineno}: vertex id out of range 1..{n}")
            if u == v:
                raise DimacsError(f"line {lineno}: self-loop")
            edges.append((u - 1, v - 1))
        else:
            raise DimacsError(f"line {lineno}: unknown line type {parts[0]!r}")
    if n is None:
        raise DimacsError("missing problem line")
    try:
        G = Graph.from_edges(n, edges)
    except GraphError as exc:
        raise DimacsError(str(exc)) from None
    # duplicate edge lines collapse, so only require that no more edges appear than declared
    if G.m > declared_m:
        raise DimacsError(f"problem line declares {declared_m} edges, found {G.m}")
    return G


def format_dimacs(G: Graph, comments: Iterable[str] = ()) -> str:
    """Serialize a graph on ``0..n-1``; other graphs are relabeled in vertex order first."""
    if G.vertices != list(range(G.n)):
        G, _ = G.relabeled()
    lines = [f"c {c}" for c in comments]
    lines.append(f"p edge {G.n} {G.m}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in G.edges())
    return "\n".join(lines) + "\n"


def parse_modulator(text: str, n: int | None = None) -> tuple[int, ...]:
    ids = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("#"):
            continue
        try:
            v = int(line)
        except ValueError:
            raise DimacsError(f"modulator line {lineno}: not an integer: {line!r}") from None
        if v < 1 or (n is not None and v > n):
            raise DimacsError(f"modulator line {lineno}: vertex {v} not in the graph")
        ids.append(v - 1)
    return tuple(sorted(set(ids)))


def format_modulator(X: Iterable[int]) -> str:
    return "".join(f"{v + 1}\n" for v in sorted(X))


def read_dimacs(path: str | Path) -> Graph:
    return parse_dimacs(Path(path).read_text())


def write_dimacs(path: str | Path, G: Graph, comments: Iterable[str] = ()) -> None:
    Path(path).write_text(format_dimacs(G, comments))


def read_modulator(path: str | Path, n: int | None = None) -> tuple[int, ...]:
    return parse_modulator(Path(path).read_text(), n)


def write_modulator(path: str | Path, X: Iterable[int]) -> None:
    Path(path).write_text(format_modulator(X))


def sidecar_path(graph_path: str | Path) -> Path:
    """Default modulator location: the graph path with ``.mod`` appended."""
    return Path(str(graph_path) + ".mod")
