"""Edge-colored simple graphs and strong-coloring validation."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Iterable, Iterator

Edge = tuple[int, int]


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class GraphError(ValueError):
    """Raised for malformed graph input."""


class ColoredGraph:
    """Immutable simple undirected graph on vertices ``0..n-1`` with one
    nonnegative integer color per edge."""

    __slots__ = ("_n", "_adj", "_color")

    def __init__(self, n: int, colors: dict[Edge, int]):
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in colors:
            adj[u].add(v)
            adj[v].add(u)
        self._n = n
        self._adj = tuple(frozenset(s) for s in adj)
        self._color = dict(colors)

    @classmethod
    def from_edge_list(cls, n: int, triples: Iterable[tuple[int, int, int]]) -> ColoredGraph:
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        colors: dict[Edge, int] = {}
        for u, v, c in triples:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"vertex out of range in edge ({u}, {v}) for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if c < 0:
                raise GraphError(f"negative color {c} on edge ({u}, {v})")
            key = edge_key(u, v)
            if key in colors:
                raise GraphError(f"duplicate edge {key}")
            colors[key] = c
        return cls(n, colors)

    @property
    def n(self) -> int:
        return self._n

    def vertices(self) -> range:
        return range(self._n)

    def edges(self) -> list[Edge]:
        """Edges as ``(u, v)`` with ``u < v``, sorted."""
        return sorted(self._color)

    def colored_edges(self) -> Iterator[tuple[int, int, int]]:
        for u, v in self.edges():
            yield u, v, self._color[(u, v)]

    @property
    def num_edges(self) -> int:
        return len(self._color)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def color(self, u: int, v: int) -> int:
        try:
            return self._color[edge_key(u, v)]
        except KeyError:
            raise KeyError(f"no edge ({u}, {v})") from None

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def min_degree(self) -> int:
        if self._n < 1:
            raise GraphError("min_degree needs at least one vertex")
        return min(len(s) for s in self._adj)

    def color_neighborhood(self, v: int) -> set[int]:
        return {self._color[edge_key(v, u)] for u in self._adj[v]}

    def common_neighbors(self, a: int, b: int) -> set[int]:
        if a == b:
            raise GraphError("common_neighbors needs two distinct vertices")
        return set(self._adj[a] & self._adj[b])

    def colors(self) -> set[int]:
        return set(self._color.values())

    def is_complete(self) -> bool:
        return all(len(s) == self._n - 1 for s in self._adj)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ColoredGraph):
            return NotImplemented
        return self._n == other._n and self._color == other._color

    def __hash__(self) -> int:
        return hash((self._n, frozenset(self._color.items())))

    def __repr__(self) -> str:
        return f"ColoredGraph(n={self._n}, m={len(self._color)})"


def from_edge_list(n: int, triples: Iterable[tuple[int, int, int]]) -> ColoredGraph:
    return ColoredGraph.from_edge_list(n, triples)


def min_degree(g: ColoredGraph) -> int:
    return g.min_degree()


def color_neighborhood(g: ColoredGraph, v: int) -> set[int]:
    return g.color_neighborhood(v)


def common_neighbors(g: ColoredGraph, a: int, b: int) -> set[int]:
    return g.common_neighbors(a, b)


def meets_threshold(g: ColoredGraph) -> bool:
    """True when the minimum degree is at least ``2n/3 + 1``."""
    return 3 * g.min_degree() >= 2 * g.n + 3


# --- validation -------------------------------------------------------------


class Level(str, Enum):
    NOT_PROPER = "not-proper"
    PROPER_ONLY = "proper-only"
    STRONG = "strong"


@dataclass(frozen=True)
class ValidationReport:
    level: Level
    # not-proper: two edges sharing a vertex, ((x, y), (y, z)).
    # proper-only: a path [w, x, y, z] whose end edges share a color.
    witness: tuple | None = None

    @property
    def is_strong(self) -> bool:
        return self.level is Level.STRONG

    def to_json(self) -> dict:
        out: dict = {"level": self.level.value}
        if self.witness is not None:
            out["witness"] = [list(x) if isinstance(x, tuple) else x for x in self.witness]
        return out


def validate_coloring(g: ColoredGraph) -> ValidationReport:
    for v in g.vertices():
        seen: dict[int, int] = {}
        for u in sorted(g.neighbors(v)):
            c = g.color(u, v)
            if c in seen:
                return ValidationReport(Level.NOT_PROPER, ((seen[c], v), (v, u)))
            seen[c] = u
    # every P4 w-x-y-z: the proper check already covers adjacent edge pairs
    for x, y in g.edges():
        for mid_a, mid_b in ((x, y), (y, x)):
            for w in sorted(g.neighbors(mid_a)):
                if w == mid_b:
                    continue
                cw = g.color(w, mid_a)
                for z in sorted(g.neighbors(mid_b)):
                    if z == mid_a or z == w:
                        continue
                    if g.color(mid_b, z) == cw:
                        return ValidationReport(Level.PROPER_ONLY, (w, mid_a, mid_b, z))
    return ValidationReport(Level.STRONG)


# --- .secg text format ------------------------------------------------------


def parse_secg(text: str) -> ColoredGraph:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise GraphError("empty .secg input")
    try:
        n = int(lines[0])
    except ValueError:
        raise GraphError(f"bad vertex count line {lines[0]!r}") from None
    triples = []
    for lineno, ln in enumerate(lines[1:], start=2):
        parts = ln.split()
        if len(parts) != 3:
            raise GraphError(f"line {lineno}: expected 'u v c', got {ln!r}")
        try:
            u, v, c = (int(p) for p in parts)
        except ValueError:
            raise GraphError(f"line {lineno}: non-integer field in {ln!r}") from None
        if u >= v:
            raise GraphError(f"line {lineno}: expected u < v, got {u} {v}")
        triples.append((u, v, c))
    return ColoredGraph.from_edge_list(n, triples)


def format_secg(g: ColoredGraph) -> str:
    out = [str(g.n)]
    out.extend(f"{u} {v} {c}" for u, v, c in g.colored_edges())
    return "\n".join(out) + "\n"


def read_secg(path: str | Path) -> ColoredGraph:
    return parse_secg(Path(path).read_text())


def write_secg(g: ColoredGraph, path: str | Path) -> None:
    Path(path).write_text(format_secg(g))
