"""Instance builders and samplers shared by the test modules."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, permutations

from rainbowpair.audit import reindex
from rainbowpair.clique import RainbowClique, find_maximal_fresh_clique
from rainbowpair.cycles import ColoredCycle
from rainbowpair.generators import rainbow_complete, random_strong
from rainbowpair.graph import ColoredGraph, from_edge_list


def k_minus_edge(n: int, u: int = 0, v: int = 1) -> ColoredGraph:
    g = rainbow_complete(n)
    return from_edge_list(n, [t for t in g.colored_edges() if (t[0], t[1]) != (u, v)])


def with_pendant(core: ColoredGraph, attach: int = 0) -> ColoredGraph:
    """Add one vertex joined only to ``attach`` by a brand-new color."""
    fresh = max(core.colors(), default=-1) + 1
    return from_edge_list(core.n + 1, [*core.colored_edges(), (attach, core.n, fresh)])


# Type 1 blocked by colors: outside vertex 4 is adjacent to the consecutive
# cycle vertices 5 and 0, but both edges reuse cycle colors.
TYPE1_BLOCKED = from_edge_list(
    6, [(0, 3, 0), (0, 4, 2), (0, 5, 4), (1, 2, 2), (1, 5, 3), (2, 3, 1), (4, 5, 1)]
)
TYPE1_BLOCKED_CYCLE = (5, 0, 3, 2, 1)
TYPE1_BLOCKED_PAIR = (1, 5)

# No type-1 insertion exists, but 3-1-4-5 through the clique {1, 4} replaces 3-0-5.
TYPE2_ONLY = from_edge_list(
    6, [(0, 3, 2), (0, 5, 0), (1, 3, 4), (1, 4, 3), (2, 3, 1), (2, 5, 6), (4, 5, 5)]
)
TYPE2_ONLY_CYCLE = (2, 3, 0, 5)
TYPE2_ONLY_PAIR = (2, 5)

# k = 2 and no forbidden pair, yet the backward segment v_1 v_4 v_3 v_2 has
# four fresh edges into the clique {5, 6}.
K2_SEGMENT = from_edge_list(
    7,
    [(0, 1, 2), (0, 2, 7), (0, 3, 5), (0, 5, 0), (1, 2, 11), (1, 3, 4), (1, 5, 3),
     (2, 4, 9), (2, 6, 1), (3, 4, 10), (3, 6, 6), (4, 6, 2), (5, 6, 8)],
)
K2_SEGMENT_CYCLE = (0, 2, 1, 3)
K2_SEGMENT_PAIR = (0, 2)


def brute_force_strong(g: ColoredGraph) -> bool:
    """Strong iff every path on 3 or 4 distinct vertices is rainbow."""
    for length in (3, 4):
        for path in permutations(g.vertices(), length):
            if not all(g.has_edge(path[i], path[i + 1]) for i in range(length - 1)):
                continue
            cols = [g.color(path[i], path[i + 1]) for i in range(length - 1)]
            if len(set(cols)) != len(cols):
                return False
    return True


def random_rainbow_cycle(g: ColoredGraph, a: int, b: int, length: int, rng: random.Random,
                         tries: int = 2000) -> tuple[int, ...] | None:
    """Randomized DFS for a rainbow cycle through a and b; None if none found
    within ``tries`` expansions."""
    budget = [tries]
    path = [a]

    def dfs(used: set[int]) -> bool:
        u = path[-1]
        if len(path) == length:
            return b in path and g.has_edge(u, a) and g.color(u, a) not in used
        nbrs = [v for v in g.neighbors(u) if v not in path]
        rng.shuffle(nbrs)
        for v in nbrs:
            c = g.color(u, v)
            if c in used:
                continue
            budget[0] -= 1
            if budget[0] < 0:
                return False
            path.append(v)
            if dfs(used | {c}):
                return True
            path.pop()
        return False

    return tuple(path) if dfs(set()) else None


@dataclass
class Config:
    g: ColoredGraph
    cyc: ColoredCycle
    h: RainbowClique
    a: int
    b: int


def sample_configuration(rng: random.Random) -> Config:
    """Random (G, C, H, a, b) with C a rainbow cycle through a and b, read
    from a = v_1, and H a maximal fresh clique for a shuffled seed order."""
    while True:
        n = rng.randint(7, 14)
        g = random_strong(n, rng.randint(2, n - 2), rng.randrange(2**31))
        a, b = rng.sample(range(n), 2)
        vs = random_rainbow_cycle(g, a, b, rng.randint(4, n - 1), rng)
        if vs is None:
            continue
        cyc = reindex(ColoredCycle(g, vs), a, b)
        order = [v for v in g.vertices() if v not in cyc]
        rng.shuffle(order)
        return Config(g, cyc, find_maximal_fresh_clique(g, cyc, order), a, b)


def brute_force_max_fresh_clique(g: ColoredGraph, cyc: ColoredCycle) -> int:
    outside = [v for v in g.vertices() if v not in cyc]
    for size in range(len(outside), 0, -1):
        for vs in combinations(outside, size):
            cols = []
            ok = True
            for u, v in combinations(vs, 2):
                if not g.has_edge(u, v):
                    ok = False
                    break
                cols.append(g.color(u, v))
            if ok and len(set(cols)) == len(cols) and not set(cols) & cyc.color_set:
                return size
    return 0


# --- hypothesis strategies ---------------------------------------------------

from hypothesis import strategies as st  # noqa: E402


@st.composite
def colored_graphs(draw, max_n: int = 7, palette: int = 6) -> ColoredGraph:
    """Arbitrary (often non-strong) colorings over a small palette."""
    n = draw(st.integers(1, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    cols = draw(st.lists(st.integers(0, palette - 1), min_size=len(chosen), max_size=len(chosen)))
    return from_edge_list(n, [(u, v, c) for (u, v), c in zip(chosen, cols)])


@st.composite
def strong_graphs(draw, min_n: int = 4, max_n: int = 10) -> ColoredGraph:
    n = draw(st.integers(min_n, max_n))
    return random_strong(n, draw(st.integers(0, n - 1)), draw(st.integers(0, 2**32)))
