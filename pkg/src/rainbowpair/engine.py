"""Find rainbow cycles of every length through a vertex pair.

A short seed cycle through ``(a, b)`` is grown one vertex at a time. Each
step first tries to insert a single outside vertex between two consecutive
cycle vertices (``type1``), then to replace a short arc by a longer path
through a maximal fresh rainbow clique (``type2``), and only then falls back
to an exhaustive backtracking search, which either finds some longer cycle
or certifies that none exists.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations

from .clique import RainbowClique, find_maximal_fresh_clique, rotated_orders
from .cycles import ColoredCycle
from .graph import ColoredGraph, Edge, edge_key, meets_threshold

log = logging.getLogger(__name__)

DEFAULT_NODE_BUDGET = 10**7


class NoSeed(Exception):
    """No triangle or 4-cycle through the pair exists."""


class NoExtension(Exception):
    """No rainbow cycle one vertex longer was found.

    ``certified`` is True only when the exhaustive search ran to completion,
    so that absence is proven rather than merely not found within budget.
    """

    def __init__(self, length: int, certified: bool, expansions: int):
        self.length = length
        self.certified = certified
        self.expansions = expansions
        what = "no rainbow cycle exists" if certified else "node budget exhausted"
        super().__init__(f"length {length}: {what} after {expansions} expansions")


class EngineError(AssertionError):
    """An internally produced cycle failed re-verification."""


class Status(str, Enum):
    FOUND = "found"
    IMPOSSIBLE = "impossible"
    FAILED = "failed"


@dataclass(frozen=True)
class Extension:
    kind: str  # "type1", "type2" or "fallback"
    source: ColoredCycle
    result: ColoredCycle
    inserted_vertices: tuple[int, ...] = ()
    # positions (i, j) in the source; the forward arc strictly between them
    # is replaced by ``inserted_vertices``
    splice: tuple[int, int] | None = None
    witness_edges: tuple[Edge, ...] = ()

    def apply(self, source: ColoredCycle | None = None) -> ColoredCycle:
        src = self.source if source is None else source
        if self.splice is None:
            return self.result
        i, j = self.splice
        kept = src.arc(j, i, forward=True)
        return ColoredCycle(src.graph, [src.vertex_at(i), *self.inserted_vertices, *kept[:-1]])


@dataclass(frozen=True)
class SearchOutcome:
    cycle: ColoredCycle | None
    exhausted: bool
    expansions: int


class _BudgetExceeded(Exception):
    pass


def search_rainbow_cycle(
    g: ColoredGraph, a: int, b: int, length: int, budget: int = DEFAULT_NODE_BUDGET
) -> SearchOutcome:
    """Depth-first search for a rainbow cycle of exactly ``length`` vertices
    through ``a`` and ``b``, pruning any path prefix that repeats a color.

    ``exhausted`` is True when the search space was fully explored (so a
    ``None`` cycle certifies absence).
    """
    if length < 3 or length > g.n or a == b:
        return SearchOutcome(None, True, 0)
    nbrs = [sorted(g.neighbors(v)) for v in g.vertices()]
    close = g.neighbors(a)
    path = [a]
    on_path = {a}
    used: set[int] = set()
    count = 0

    def dfs(u: int) -> bool:
        nonlocal count
        depth = len(path)
        if depth == length:
            return b in on_path and u in close and g.color(u, a) not in used
        last = depth == length - 1
        need_b = b not in on_path
        for v in nbrs[u]:
            if v in on_path:
                continue
            if last and (v not in close or (need_b and v != b)):
                continue
            c = g.color(u, v)
            if c in used:
                continue
            count += 1
            if count > budget:
                raise _BudgetExceeded
            path.append(v)
            on_path.add(v)
            used.add(c)
            if dfs(v):
                return True
            path.pop()
            on_path.remove(v)
            used.remove(c)
        return False

    try:
        found = dfs(a)
    except _BudgetExceeded:
        return SearchOutcome(None, False, count)
    if found:
        return SearchOutcome(ColoredCycle(g, path), True, count)
    return SearchOutcome(None, True, count)


def _check(cyc: ColoredCycle, a: int, b: int, length: int) -> ColoredCycle:
    if len(cyc) != length or not cyc.is_rainbow() or a not in cyc or b not in cyc:
        raise EngineError(f"bad cycle {list(cyc.vertices)} for pair ({a}, {b}) at length {length}")
    return cyc


def seed_cycle(g: ColoredGraph, a: int, b: int) -> ColoredCycle:
    """Shortest easy rainbow cycle through ``a`` and ``b``: a triangle when
    they are adjacent with a common neighbor, otherwise a 4-cycle."""
    if a == b:
        raise ValueError("seed_cycle needs two distinct vertices")
    common = sorted(g.common_neighbors(a, b))
    if g.has_edge(a, b):
        for x in common:
            cyc = ColoredCycle(g, [a, b, x])
            if cyc.is_rainbow():
                return cyc
        for y in sorted(g.neighbors(b)):
            if y == a:
                continue
            for x in sorted(g.neighbors(a)):
                if x in (b, y) or not g.has_edge(x, y):
                    continue
                cyc = ColoredCycle(g, [a, b, y, x])
                if cyc.is_rainbow():
                    return cyc
    for x, y in combinations(common, 2):
        cyc = ColoredCycle(g, [a, x, b, y])
        if cyc.is_rainbow():
            return cyc
    raise NoSeed(f"no rainbow triangle or 4-cycle through ({a}, {b})")


def find_type1(g: ColoredGraph, cyc: ColoredCycle, a: int, b: int) -> Extension | None:
    """Insert one outside vertex ``w`` between consecutive ``v_i, v_{i+1}``
    joined to both by fresh edges."""
    l = len(cyc)
    outside = frozenset(v for v in g.vertices() if v not in cyc)
    if not outside:
        return None
    fresh = [cyc.fresh_neighbors(v, outside) for v in cyc.vertices]
    for i in range(l):
        nxt = set(fresh[(i + 1) % l])
        vi, vj = cyc.vertices[i], cyc.vertex_at(i + 1)
        for w in fresh[i]:
            if w not in nxt or g.color(vi, w) == g.color(vj, w):
                continue
            ext = Extension(
                kind="type1",
                source=cyc,
                result=ColoredCycle(g, [vi, w, *cyc.arc((i + 1) % l, i)[:-1]]),
                inserted_vertices=(w,),
                splice=(i, (i + 1) % l),
                witness_edges=(edge_key(vi, w), edge_key(vj, w)),
            )
            if ext.result.is_rainbow():
                return ext
    return None


def find_type2(
    g: ColoredGraph, cyc: ColoredCycle, h: RainbowClique, a: int, b: int
) -> Extension | None:
    """Replace the forward arc strictly between ``v_i`` and ``v_j`` (gap
    ``2 <= j - i <= k``, avoiding ``a`` and ``b``) by a path ``w_1 ... w_2``
    of ``j - i`` clique vertices, where ``v_i w_1`` and ``v_j w_2`` are fresh
    and ``w_1 != w_2``."""
    k = h.k
    l = len(cyc)
    if k < 2:
        return None
    members = frozenset(h.vertices)
    fresh = [cyc.fresh_neighbors(v, members) for v in cyc.vertices]
    pa, pb = cyc.position(a), cyc.position(b)
    for i in range(l):
        if not fresh[i]:
            continue
        for gap in range(2, min(k, l - 1) + 1):
            # positions strictly inside the replaced arc must avoid a and b
            if any((i + t) % l in (pa, pb) for t in range(1, gap)):
                break
            j = (i + gap) % l
            if not fresh[j]:
                continue
            for w1 in fresh[i]:
                for w2 in fresh[j]:
                    if w1 == w2:
                        continue
                    middle = [w for w in h.vertices if w != w1 and w != w2][: gap - 2]
                    inner = (w1, *middle, w2)
                    vi, vj = cyc.vertices[i], cyc.vertices[j]
                    result = ColoredCycle(g, [vi, *inner, *cyc.arc(j, i)[:-1]])
                    if not result.is_rainbow():
                        continue
                    return Extension(
                        kind="type2",
                        source=cyc,
                        result=result,
                        inserted_vertices=inner,
                        splice=(i, j),
                        witness_edges=(edge_key(vi, w1), edge_key(vj, w2)),
                    )
    return None


def extend_once(
    g: ColoredGraph,
    cyc: ColoredCycle,
    a: int,
    b: int,
    budget: int = DEFAULT_NODE_BUDGET,
    max_orderings: int | None = None,
) -> Extension:
    l = len(cyc)
    if l >= g.n:
        raise ValueError(f"cycle already spans all {g.n} vertices")
    if a not in cyc or b not in cyc or not cyc.is_rainbow():
        raise ValueError("extend_once needs a rainbow cycle through both vertices")
    ext = find_type1(g, cyc, a, b)
    if ext is not None:
        _check(ext.result, a, b, l + 1)
        return ext
    seen: set[tuple[int, ...]] = set()
    limit = g.n if max_orderings is None else max_orderings
    for order in rotated_orders(g, cyc, limit):
        h = find_maximal_fresh_clique(g, cyc, order)
        if h.vertices in seen:
            continue
        seen.add(h.vertices)
        ext = find_type2(g, cyc, h, a, b)
        if ext is not None:
            _check(ext.result, a, b, l + 1)
            return ext
    log.info("fallback search for length %d through (%d, %d)", l + 1, a, b)
    outcome = search_rainbow_cycle(g, a, b, l + 1, budget)
    if outcome.cycle is None:
        raise NoExtension(l + 1, outcome.exhausted, outcome.expansions)
    result = _check(outcome.cycle, a, b, l + 1)
    return Extension(
        kind="fallback",
        source=cyc,
        result=result,
        inserted_vertices=tuple(v for v in result.vertices if v not in cyc),
    )


@dataclass
class PancyclicCertificate:
    pair: tuple[int, int]
    n: int
    l_min: int
    cycles: dict[int, ColoredCycle] = field(default_factory=dict)
    status: dict[int, Status] = field(default_factory=dict)
    mechanisms: dict[int, str] = field(default_factory=dict)

    @property
    def complete(self) -> bool:
        """Every length from ``l_min`` to ``n`` was found."""
        return all(self.status.get(L) is Status.FOUND for L in range(self.l_min, self.n + 1))

    @property
    def failed(self) -> list[int]:
        return sorted(L for L, s in self.status.items() if s is Status.FAILED)

    def to_json(self) -> dict:
        return {
            "pair": list(self.pair),
            "l_min": self.l_min,
            "cycles": {str(L): c.to_json() for L, c in sorted(self.cycles.items())},
            "status": {str(L): s.value for L, s in sorted(self.status.items())},
            "mechanisms": {str(L): m for L, m in sorted(self.mechanisms.items())},
        }


def pair_pancyclicity(
    g: ColoredGraph,
    a: int,
    b: int,
    budget: int = DEFAULT_NODE_BUDGET,
    max_length: int | None = None,
    max_orderings: int | None = None,
) -> PancyclicCertificate:
    """Rainbow cycles through ``a`` and ``b`` for every length up to ``n``
    (or ``max_length``). Never raises for search failures; they land in the
    certificate's status map."""
    if a == b or not (0 <= a < g.n and 0 <= b < g.n):
        raise ValueError(f"bad vertex pair ({a}, {b}) for n={g.n}")
    n = g.n
    top = n if max_length is None else min(max_length, n)
    adjacent = g.has_edge(a, b)
    cert = PancyclicCertificate((a, b), n, 3 if adjacent else 4)
    if not adjacent and top >= 3:
        cert.status[3] = Status.IMPOSSIBLE
        cert.mechanisms[3] = "nonadjacent"

    # at threshold with n <= 8 the graph is complete; search lengths directly
    direct = n <= 8 and meets_threshold(g)
    seed: ColoredCycle | None = None
    if not direct:
        try:
            seed = seed_cycle(g, a, b)
        except NoSeed:
            log.info("no seed cycle through (%d, %d)", a, b)

    current: ColoredCycle | None = None
    for L in range(cert.l_min, top + 1):
        mechanism = "direct"
        cyc: ColoredCycle | None = None
        if current is None and seed is not None and len(seed) == L:
            cyc, mechanism = seed, "seed"
        elif current is not None:
            try:
                ext = extend_once(g, current, a, b, budget, max_orderings)
            except NoExtension as exc:
                cert.status[L] = Status.IMPOSSIBLE if exc.certified else Status.FAILED
                cert.mechanisms[L] = "fallback"
                current = None
                continue
            cyc, mechanism = ext.result, ext.kind
        else:
            outcome = search_rainbow_cycle(g, a, b, L, budget)
            if outcome.cycle is None:
                cert.status[L] = Status.IMPOSSIBLE if outcome.exhausted else Status.FAILED
                cert.mechanisms[L] = "direct"
                continue
            cyc = outcome.cycle
        _check(cyc, a, b, L)
        cert.cycles[L] = cyc
        cert.status[L] = Status.FOUND
        cert.mechanisms[L] = mechanism
        current = None if direct else cyc
    return cert


def all_pairs(
    g: ColoredGraph, budget: int = DEFAULT_NODE_BUDGET, workers: int = 1
) -> list[PancyclicCertificate]:
    pairs = list(combinations(g.vertices(), 2))
    if workers <= 1:
        return [pair_pancyclicity(g, a, b, budget) for a, b in pairs]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        # map preserves input order, so output stays in pair order
        return list(pool.map(lambda p: pair_pancyclicity(g, p[0], p[1], budget), pairs))
