"""Strongly edge-colored test instances."""

from __future__ import annotations

import random
from itertools import combinations
from typing import Iterable

from .graph import ColoredGraph, Edge, edge_key


def greedy_strong_coloring(n: int, edges: Iterable[Edge]) -> ColoredGraph:
    """Color edges in the given order with the smallest color not used on
    any edge within distance one (sharing a vertex, or joined by an edge).
    The result is always a strong coloring."""
    order = [edge_key(u, v) for u, v in edges]
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in order:
        adj[u].add(v)
        adj[v].add(u)
    # colored edges incident to each vertex
    incident: list[dict[int, int]] = [{} for _ in range(n)]
    colors: dict[Edge, int] = {}
    for u, v in order:
        blocked: set[int] = set()
        for x in adj[u] | adj[v]:
            blocked.update(incident[x].values())
        c = 0
        while c in blocked:
            c += 1
        colors[(u, v)] = c
        incident[u][v] = c
        incident[v][u] = c
    return ColoredGraph(n, colors)


def rainbow_complete(n: int) -> ColoredGraph:
    if n < 1:
        raise ValueError("n must be positive")
    return ColoredGraph(n, {e: i for i, e in enumerate(combinations(range(n), 2))})


def random_strong(n: int, target_min_degree: int, seed: int) -> ColoredGraph:
    """Random graph with minimum degree at least ``target_min_degree`` and a
    greedy strong coloring, both driven by ``seed``."""
    if not 0 <= target_min_degree < max(n, 1):
        raise ValueError(f"need 0 <= target_min_degree < n, got {target_min_degree} for n={n}")
    rng = random.Random(seed)
    pairs = list(combinations(range(n), 2))
    p = target_min_degree / (n - 1) if n > 1 else 0.0
    edges: set[Edge] = set()
    for _ in range(20):
        edges = {e for e in pairs if rng.random() < p}
        if _min_degree(n, edges) >= target_min_degree:
            break
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    while True:
        short = [v for v in range(n) if len(adj[v]) < target_min_degree]
        if not short:
            break
        u = rng.choice(short)
        others = [v for v in range(n) if v != u and v not in adj[u]]
        # prefer partners that are also short of the target
        pool = [v for v in others if len(adj[v]) < target_min_degree] or others
        v = rng.choice(pool)
        edges.add(edge_key(u, v))
        adj[u].add(v)
        adj[v].add(u)
    order = sorted(edges)
    rng.shuffle(order)
    return greedy_strong_coloring(n, order)


def _min_degree(n: int, edges: set[Edge]) -> int:
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    return min(deg) if deg else 0


def cycle_instance(l: int) -> ColoredGraph:
    if l < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return greedy_strong_coloring(l, [(i, (i + 1) % l) for i in range(l)])


def threshold_degree(n: int) -> int:
    """Smallest integer minimum degree with ``3 * delta >= 2n + 3``."""
    return -(-(2 * n + 3) // 3)
