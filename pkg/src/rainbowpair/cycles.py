"""Cycles over a colored graph: rainbow checks, arcs, and C-color / fresh
classification of edges relative to a reference cycle."""

from __future__ import annotations

from enum import Enum
from typing import Collection, Sequence

from .graph import ColoredGraph, Edge, edge_key


class CycleError(ValueError):
    pass


class EdgeClass(str, Enum):
    C_COLOR = "C-color"
    FRESH = "fresh"


class ColoredCycle:
    """A cycle ``v_0 v_1 ... v_{l-1} v_0`` in a host graph.

    Positions are 0-based; ``colors[i]`` is the color of edge ``v_i v_{i+1}``
    with indices taken mod ``l``.
    """

    __slots__ = ("graph", "vertices", "colors", "color_set", "_pos")

    def __init__(self, graph: ColoredGraph, vertices: Sequence[int]):
        vs = tuple(vertices)
        if len(vs) < 3:
            raise CycleError(f"cycle needs at least 3 vertices, got {len(vs)}")
        if len(set(vs)) != len(vs):
            raise CycleError(f"repeated vertex in {list(vs)}")
        colors = []
        for i, u in enumerate(vs):
            v = vs[(i + 1) % len(vs)]
            if not graph.has_edge(u, v):
                raise CycleError(f"consecutive vertices {u} and {v} are not adjacent")
            colors.append(graph.color(u, v))
        self.graph = graph
        self.vertices = vs
        self.colors = tuple(colors)
        self.color_set = frozenset(colors)
        self._pos = {v: i for i, v in enumerate(vs)}

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, v: int) -> bool:
        return v in self._pos

    def __iter__(self):
        return iter(self.vertices)

    def __repr__(self) -> str:
        return f"ColoredCycle({list(self.vertices)})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ColoredCycle):
            return NotImplemented
        return self.vertices == other.vertices and (self.graph is other.graph or self.graph == other.graph)

    def __hash__(self) -> int:
        return hash(self.vertices)

    def position(self, v: int) -> int:
        return self._pos[v]

    def vertex_at(self, i: int) -> int:
        return self.vertices[i % len(self.vertices)]

    def is_rainbow(self) -> bool:
        return len(self.color_set) == len(self.vertices)

    def arc(self, i: int, j: int, forward: bool = True) -> list[int]:
        """Vertices ``v_i v_{i+1} ... v_j`` (or ``v_i v_{i-1} ... v_j``)."""
        l = len(self.vertices)
        step = 1 if forward else -1
        count = ((j - i) * step) % l
        return [self.vertices[(i + step * t) % l] for t in range(count + 1)]

    def is_fresh(self, u: int, v: int) -> bool:
        return self.graph.color(u, v) not in self.color_set

    def classify_edge(self, u: int, v: int) -> EdgeClass:
        return EdgeClass.FRESH if self.is_fresh(u, v) else EdgeClass.C_COLOR

    def fresh_neighbors(self, v: int, among: Collection[int]) -> list[int]:
        """Sorted members of ``among`` joined to ``v`` by a fresh edge."""
        g = self.graph
        cs = self.color_set
        return sorted(u for u in g.neighbors(v) if u in among and g.color(u, v) not in cs)

    def rotated(self, start: int, forward: bool = True) -> ColoredCycle:
        """Same cycle re-read from vertex ``start`` in the given direction."""
        i = self._pos[start]
        l = len(self.vertices)
        step = 1 if forward else -1
        return ColoredCycle(self.graph, [self.vertices[(i + step * t) % l] for t in range(l)])

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices), "colors": list(self.colors), "rainbow": self.is_rainbow()}


def new_checked(g: ColoredGraph, vs: Sequence[int]) -> ColoredCycle:
    return ColoredCycle(g, vs)


def is_rainbow(cyc: ColoredCycle) -> bool:
    return cyc.is_rainbow()


def arc(cyc: ColoredCycle, i: int, j: int, forward: bool = True) -> list[int]:
    return cyc.arc(i, j, forward)


def classify_edge(cyc: ColoredCycle, e: Edge) -> EdgeClass:
    return cyc.classify_edge(*e)


def _edges_between(g: ColoredGraph, A: Collection[int], B: Collection[int]) -> list[Edge]:
    A, B = set(A), set(B)
    if A & B:
        raise CycleError(f"vertex sets overlap on {sorted(A & B)}")
    out = []
    for u in sorted(A):
        for v in sorted(g.neighbors(u)):
            if v in B:
                out.append(edge_key(u, v))
    return sorted(out)


def edges_between(g: ColoredGraph, A: Collection[int], B: Collection[int]) -> list[Edge]:
    return _edges_between(g, A, B)


def fresh_edges_between(cyc: ColoredCycle, A: Collection[int], B: Collection[int]) -> list[Edge]:
    return [e for e in _edges_between(cyc.graph, A, B) if cyc.is_fresh(*e)]


def c_color_edges_between(cyc: ColoredCycle, A: Collection[int], B: Collection[int]) -> list[Edge]:
    return [e for e in _edges_between(cyc.graph, A, B) if not cyc.is_fresh(*e)]
