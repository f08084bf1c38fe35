"""Maximal rainbow cliques of fresh edges outside a reference cycle."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .cycles import ColoredCycle
from .graph import ColoredGraph


@dataclass(frozen=True)
class RainbowClique:
    vertices: tuple[int, ...]
    internal_colors: frozenset[int]

    @property
    def k(self) -> int:
        return len(self.vertices)

    def __contains__(self, v: int) -> bool:
        return v in self.vertices

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices), "k": self.k, "colors": sorted(self.internal_colors)}


def outside_vertices(g: ColoredGraph, cyc: ColoredCycle) -> list[int]:
    return [v for v in g.vertices() if v not in cyc]


def remainder(g: ColoredGraph, cyc: ColoredCycle, h: RainbowClique) -> list[int]:
    """Vertices on neither the cycle nor the clique."""
    return [v for v in g.vertices() if v not in cyc and v not in h]


def _extension_colors(g: ColoredGraph, cyc: ColoredCycle, members: Sequence[int], used: set[int], u: int) -> list[int] | None:
    """Colors ``u`` would add to the clique, or None if it cannot join."""
    new = []
    for w in members:
        if not g.has_edge(u, w):
            return None
        c = g.color(u, w)
        if c in cyc.color_set or c in used:
            return None
        new.append(c)
    if len(set(new)) != len(new):
        return None
    return new


def find_maximal_fresh_clique(
    g: ColoredGraph, cyc: ColoredCycle, seed_order: Iterable[int] | None = None
) -> RainbowClique:
    """Greedy maximal clique in ``G - V(C)`` whose edges are pairwise
    distinctly colored and avoid every color of ``cyc``.

    Vertices are tried once each in ``seed_order`` (default: ascending id).
    A vertex rejected once can never be accepted later, since the clique
    only grows, so one pass gives a maximal clique.
    """
    order = outside_vertices(g, cyc) if seed_order is None else [v for v in seed_order if v not in cyc]
    members: list[int] = []
    used: set[int] = set()
    for u in order:
        if u in members:
            continue
        new = _extension_colors(g, cyc, members, used, u)
        if new is None:
            continue
        members.append(u)
        used.update(new)
    return RainbowClique(tuple(sorted(members)), frozenset(used))


def clique_from_vertices(g: ColoredGraph, vertices: Iterable[int]) -> RainbowClique:
    vs = tuple(sorted(vertices))
    colors = frozenset(g.color(u, v) for u, v in combinations(vs, 2) if g.has_edge(u, v))
    return RainbowClique(vs, colors)


def verify_clique(g: ColoredGraph, cyc: ColoredCycle, h: RainbowClique) -> bool:
    vs = h.vertices
    if len(set(vs)) != len(vs) or any(v in cyc for v in vs):
        return False
    colors = []
    for u, v in combinations(vs, 2):
        if not g.has_edge(u, v):
            return False
        colors.append(g.color(u, v))
    if len(set(colors)) != len(colors) or set(colors) != set(h.internal_colors):
        return False
    if any(c in cyc.color_set for c in colors):
        return False
    used = set(colors)
    for u in g.vertices():
        if u in cyc or u in h:
            continue
        if _extension_colors(g, cyc, vs, used, u) is not None:
            return False
    return True


def fresh_colors_disjoint_check(g: ColoredGraph, cyc: ColoredCycle, h: RainbowClique) -> bool:
    """No fresh edge from the cycle into the clique reuses a clique color."""
    for w in h.vertices:
        for v in g.neighbors(w):
            if v in cyc and cyc.is_fresh(v, w) and g.color(v, w) in h.internal_colors:
                return False
    return True


def rotated_orders(g: ColoredGraph, cyc: ColoredCycle, limit: int | None = None) -> list[list[int]]:
    """Rotations of the ascending outside-vertex order, first the identity."""
    base = outside_vertices(g, cyc)
    count = len(base) if limit is None else min(limit, len(base))
    return [base[r:] + base[:r] for r in range(count)]
