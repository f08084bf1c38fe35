"""Counting machinery behind the pair-pancyclicity argument, run on concrete
instances.

Everything here works on a reference rainbow cycle ``C`` read as
``v_1 v_2 ... v_l`` with ``a = v_1`` and ``b = v_m`` (see :func:`reindex`),
a maximal fresh rainbow clique ``H`` with ``k`` vertices, and the leftover
vertices ``R``. Checks come in two flavours:

* unconditional facts that hold in every strongly edge-colored graph and
  must never fail, and
* conditional facts that only hold when ``C`` admits no forbidden pair; these
  report ``vacuous`` together with the pair that makes them so.

Subscripts in decompositions are 1-based like ``v_1 ... v_l``; the extra
subscript ``l + 1`` in the backward pass denotes ``v_1`` again.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .clique import RainbowClique, find_maximal_fresh_clique, fresh_colors_disjoint_check, remainder
from .cycles import ColoredCycle
from .graph import ColoredGraph, Edge, edge_key, meets_threshold


class ProofViolation(AssertionError):
    """A fact that must hold on strongly edge-colored input did not."""


@dataclass(frozen=True)
class Check:
    name: str
    lhs: int
    rhs: int
    holds: bool
    relation: str = "<="
    vacuous: bool = False
    witness: Any = None

    def require(self) -> Check:
        if not self.holds:
            raise ProofViolation(f"{self.name}: {self.lhs} {self.relation} {self.rhs} fails (witness {self.witness})")
        return self

    def to_json(self) -> dict:
        out = {
            "name": self.name,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "relation": self.relation,
            "holds": self.holds,
            "vacuous": self.vacuous,
            "witness": _jsonable(self.witness),
        }
        return out


def _jsonable(x: Any) -> Any:
    if hasattr(x, "to_json"):
        return x.to_json()
    if isinstance(x, (tuple, list)):
        return [_jsonable(y) for y in x]
    return x


def _le(name: str, lhs: int, rhs: int, witness: Any = None) -> Check:
    return Check(name, lhs, rhs, lhs <= rhs, "<=", witness=witness)


def _ge(name: str, lhs: int, rhs: int, witness: Any = None) -> Check:
    return Check(name, lhs, rhs, lhs >= rhs, ">=", witness=witness)


def _vacuous(name: str, witness: Any) -> Check:
    return Check(name, 0, 0, True, "<=", vacuous=True, witness=witness)


def reindex(cyc: ColoredCycle, a: int, b: int) -> ColoredCycle:
    """Rotate (and if needed reverse) so that ``a = v_1`` and ``b = v_m``
    with ``2 <= m <= l - 1``."""
    out = cyc.rotated(a)
    if out.position(b) == len(out) - 1:
        out = cyc.rotated(a, forward=False)
    return out


def _fresh_to(cyc: ColoredCycle, v: int, among: frozenset[int]) -> list[int]:
    return cyc.fresh_neighbors(v, among)


# --- counting statistics ------------------------------------------------------


@dataclass(frozen=True)
class VertexCounts:
    s_fresh: int  # fresh edges to C
    s_c: int  # C-colored edges to C
    t_fresh: int  # fresh edges to R
    t_c: int  # C-colored edges to R
    index_set: frozenset[int]  # {i-1, i : v_i fresh-adjacent}, as color subscripts 1..l

    def to_json(self) -> dict:
        return {
            "s_fresh": self.s_fresh,
            "s_c": self.s_c,
            "t_fresh": self.t_fresh,
            "t_c": self.t_c,
            "index_set": sorted(self.index_set),
        }


@dataclass(frozen=True)
class CountingStats:
    n: int
    l: int
    k: int
    remainder: tuple[int, ...]
    per_vertex: dict[int, VertexCounts]

    @property
    def S_fresh(self) -> int:
        return sum(c.s_fresh for c in self.per_vertex.values())

    @property
    def S(self) -> int:
        return sum(c.s_c for c in self.per_vertex.values())

    @property
    def T_fresh(self) -> int:
        return sum(c.t_fresh for c in self.per_vertex.values())

    @property
    def T(self) -> int:
        return sum(c.t_c for c in self.per_vertex.values())

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "l": self.l,
            "k": self.k,
            "R": list(self.remainder),
            "S_fresh": self.S_fresh,
            "S": self.S,
            "T_fresh": self.T_fresh,
            "T": self.T,
            "per_vertex": {str(w): c.to_json() for w, c in sorted(self.per_vertex.items())},
        }


def counting_stats(g: ColoredGraph, cyc: ColoredCycle, h: RainbowClique) -> CountingStats:
    l = len(cyc)
    rest = frozenset(remainder(g, cyc, h))
    per: dict[int, VertexCounts] = {}
    for w in h.vertices:
        s_f = s_c = t_f = t_c = 0
        index: set[int] = set()
        for v in g.neighbors(w):
            fresh = cyc.is_fresh(v, w)
            if v in cyc:
                if fresh:
                    s_f += 1
                    i = cyc.position(v) + 1
                    index.add(i)
                    index.add((i - 2) % l + 1)
                else:
                    s_c += 1
            elif v in rest:
                if fresh:
                    t_f += 1
                else:
                    t_c += 1
        per[w] = VertexCounts(s_f, s_c, t_f, t_c, frozenset(index))
    return CountingStats(g.n, l, h.k, tuple(sorted(rest)), per)


# --- individual inequalities ----------------------------------------------------


def check_claim1_bound(g: ColoredGraph, cyc: ColoredCycle) -> list[Check]:
    """Every cycle vertex has at least ``delta - l + 1`` fresh edges leaving
    the cycle. One check per cycle vertex; empty when the cycle is spanning."""
    outside = frozenset(v for v in g.vertices() if v not in cyc)
    if not outside:
        return []
    bound = g.min_degree() - len(cyc) + 1
    return [_ge(f"claim1[v={v}]", len(_fresh_to(cyc, v, outside)), bound, witness=v) for v in cyc.vertices]


def check_eq2(g: ColoredGraph, stats: CountingStats, w: int) -> Check:
    c = stats.per_vertex[w]
    lhs = c.s_fresh + c.s_c + c.t_fresh + c.t_c + (stats.k - 1)
    return _ge(f"eq2[w={w}]", lhs, g.min_degree(), witness=w)


def check_eq3(g: ColoredGraph, cyc: ColoredCycle, h: RainbowClique, w: int, stats: CountingStats | None = None) -> Check:
    c = (stats or counting_stats(g, cyc, h)).per_vertex[w]
    return _le(f"eq3[w={w}]", c.s_fresh + 2 * c.s_c + c.t_c, len(cyc), witness=w)


def consecutive_fresh_pair(cyc: ColoredCycle, w: int) -> tuple[Edge, Edge] | None:
    """Two fresh edges from ``w`` to cyclically consecutive cycle vertices."""
    g = cyc.graph
    l = len(cyc)
    for i in range(l):
        vi, vj = cyc.vertices[i], cyc.vertex_at(i + 1)
        if g.has_edge(vi, w) and g.has_edge(vj, w) and cyc.is_fresh(vi, w) and cyc.is_fresh(vj, w):
            return (edge_key(vi, w), edge_key(vj, w))
    return None


def check_eq4_conditional(
    g: ColoredGraph, cyc: ColoredCycle, h: RainbowClique, w: int, stats: CountingStats | None = None
) -> Check:
    name = f"eq4[w={w}]"
    pair = consecutive_fresh_pair(cyc, w)
    if pair is not None:
        return _vacuous(name, pair)
    c = (stats or counting_stats(g, cyc, h)).per_vertex[w]
    forbidden_colors = {cyc.colors[i - 1] for i in c.index_set}
    lhs = len(c.index_set) + c.s_c + c.t_c
    holds = (
        lhs <= len(cyc)
        and len(c.index_set) == 2 * c.s_fresh
        and not (forbidden_colors & g.color_neighborhood(w))
    )
    return Check(name, lhs, len(cyc), holds, "<=", witness=w)


def check_clique_incident_distinct(g: ColoredGraph, cyc: ColoredCycle, h: RainbowClique) -> Check:
    """Edges with exactly one end in the clique are all distinctly colored,
    so at most ``l`` of them carry cycle colors."""
    members = set(h.vertices)
    seen: dict[int, Edge] = {}
    clash = None
    c_colored = 0
    for w in h.vertices:
        for v in sorted(g.neighbors(w)):
            if v in members:
                continue
            c = g.color(v, w)
            if c in seen and clash is None:
                clash = (seen[c], edge_key(v, w))
            seen.setdefault(c, edge_key(v, w))
            if c in cyc.color_set:
                c_colored += 1
    holds = clash is None and c_colored <= len(cyc)
    return Check("eq8", c_colored, len(cyc), holds, "<=", witness=clash)


# --- forbidden pairs --------------------------------------------------------------


@dataclass(frozen=True)
class ForbiddenPair:
    kind: str  # "type1" or "type2"
    edges: tuple[Edge, Edge]  # (v_i w_1, v_j w_2)
    positions: tuple[int, int]  # 0-based positions i, j on the cycle
    clique_vertices: tuple[int, int]  # (w_1, w_2)

    def to_json(self) -> dict:
        return {"kind": self.kind, "edges": [list(e) for e in self.edges], "clique_vertices": list(self.clique_vertices)}


def find_forbidden_pair(
    g: ColoredGraph, cyc: ColoredCycle, h: RainbowClique, a: int, b: int
) -> ForbiddenPair | None:
    """First forbidden pair in (kind, i, gap, w_1, w_2) order.

    Positions wrap around the cycle, so ``v_l v_1`` counts as a consecutive
    pair and a type-2 gap may pass through ``v_1``, as long as ``a`` and
    ``b`` stay off the replaced arc.
    """
    l = len(cyc)
    members = frozenset(h.vertices)
    fresh = [_fresh_to(cyc, v, members) for v in cyc.vertices]
    for i in range(l):
        j = (i + 1) % l
        for w in fresh[i]:
            if w in fresh[j]:
                e = (edge_key(cyc.vertices[i], w), edge_key(cyc.vertices[j], w))
                return ForbiddenPair("type1", e, (i, j), (w, w))
    pa, pb = cyc.position(a), cyc.position(b)
    for i in range(l):
        if not fresh[i]:
            continue
        for gap in range(2, min(h.k, l - 1) + 1):
            if (pa - i) % l in range(1, gap) or (pb - i) % l in range(1, gap):
                break
            j = (i + gap) % l
            for w1 in fresh[i]:
                for w2 in fresh[j]:
                    if w1 != w2:
                        e = (edge_key(cyc.vertices[i], w1), edge_key(cyc.vertices[j], w2))
                        return ForbiddenPair("type2", e, (i, j), (w1, w2))
    return None


# --- path decompositions ------------------------------------------------------------


@dataclass(frozen=True)
class Segment:
    subscripts: tuple[int, ...]
    vertices: tuple[int, ...]
    d: int
    terminal: bool  # emitted by the branch that reaches b and stops
    fresh_count: int

    def __len__(self) -> int:
        return len(self.subscripts)

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "d": self.d,
            "terminal": self.terminal,
            "fresh_to_clique": self.fresh_count,
        }


@dataclass(frozen=True)
class PathDecomposition:
    direction: str  # "AI-forward" or "AII-backward"
    path: tuple[int, ...]  # subscripts of the full path P^1 or P^2
    segments: tuple[Segment, ...]
    skipped: tuple[int, ...]  # subscripts dropped before some chosen d
    k: int
    m: int

    @property
    def h(self) -> int:
        return len(self.segments)

    def to_json(self) -> dict:
        return {
            "direction": self.direction,
            "h": self.h,
            "segments": [s.to_json() for s in self.segments],
            "skipped": list(self.skipped),
        }


def _decomposition_inputs(g: ColoredGraph, cyc: ColoredCycle, h: RainbowClique, a: int, b: int):
    l = len(cyc)
    if cyc.vertices[0] != a:
        raise ValueError("decompositions need a = v_1; call reindex first")
    m = cyc.position(b) + 1
    if not 2 <= m <= l - 1:
        raise ValueError(f"need 2 <= m <= l-1, got m={m}, l={l}")
    members = frozenset(h.vertices)
    counts = [len(_fresh_to(cyc, v, members)) for v in cyc.vertices]

    def fresh_count(s: int) -> int:
        return counts[(s - 1) % l]

    def vertex(s: int) -> int:
        return cyc.vertices[(s - 1) % l]

    return l, m, fresh_count, vertex


def _segment(subs: list[int], d: int, terminal: bool, fresh_count, vertex) -> Segment:
    return Segment(
        tuple(subs),
        tuple(vertex(s) for s in subs),
        d,
        terminal,
        sum(fresh_count(s) for s in subs),
    )


def algorithm_ai(g: ColoredGraph, cyc: ColoredCycle, h: RainbowClique, a: int, b: int) -> PathDecomposition:
    """Greedy split of ``P^1 = v_1 v_2 ... v_m`` into segments led by the
    first vertex with a fresh edge into the clique."""
    l, m, fresh_count, vertex = _decomposition_inputs(g, cyc, h, a, b)
    k = h.k
    remaining = list(range(1, m + 1))
    segments: list[Segment] = []
    skipped: list[int] = []
    while remaining:
        leaders = [s for s in remaining if fresh_count(s) > 0]
        if not leaders:
            break
        d = min(leaders)
        skipped.extend(s for s in remaining if s < d)
        if d + k >= m:
            segments.append(_segment(list(range(d, m + 1)), d, True, fresh_count, vertex))
            break
        end = d + k if fresh_count(d) >= 2 else d + k + 1
        segments.append(_segment(list(range(d, end + 1)), d, False, fresh_count, vertex))
        remaining = [s for s in remaining if s > end]
    return PathDecomposition("AI-forward", tuple(range(1, m + 1)), tuple(segments), tuple(skipped), k, m)


def algorithm_aii(g: ColoredGraph, cyc: ColoredCycle, h: RainbowClique, a: int, b: int) -> PathDecomposition:
    """Mirror of :func:`algorithm_ai` along ``P^2 = v_{l+1} v_l ... v_m``."""
    l, m, fresh_count, vertex = _decomposition_inputs(g, cyc, h, a, b)
    k = h.k
    remaining = list(range(l + 1, m - 1, -1))
    segments: list[Segment] = []
    skipped: list[int] = []
    while remaining:
        leaders = [s for s in remaining if fresh_count(s) > 0]
        if not leaders:
            break
        d = max(leaders)
        skipped.extend(s for s in remaining if s > d)
        if d - k <= m:
            segments.append(_segment(list(range(d, m - 1, -1)), d, True, fresh_count, vertex))
            break
        end = d - k if fresh_count(d) >= 2 else d - k - 1
        segments.append(_segment(list(range(d, end - 1, -1)), d, False, fresh_count, vertex))
        remaining = [s for s in remaining if s < end]
    return PathDecomposition("AII-backward", tuple(range(l + 1, m - 1, -1)), tuple(segments), tuple(skipped), k, m)


def segment_bound(seg: Segment, k: int) -> int:
    """Upper bound on fresh edges from a segment into the clique when no
    forbidden pair exists."""
    if not seg.terminal:
        return len(seg) - 1
    return k if len(seg) <= 2 else k + 1


def check_claims45_conditional(
    g: ColoredGraph, cyc: ColoredCycle, h: RainbowClique, a: int, b: int
) -> list[Check]:
    """Segment bounds for both passes, asserted only when there is no
    forbidden pair and ``k >= 3``.

    The bounds genuinely need ``k >= 3``: with ``k = 2`` a segment such as
    ``v_1 v_4 v_3 v_2`` can carry fresh edges ``w_1, w_2, w_1, w_2`` with no
    forbidden pair. For ``k < 3`` the bounds are still evaluated but
    reported as vacuous.
    """
    fp = find_forbidden_pair(g, cyc, h, a, b)
    if fp is not None:
        return [_vacuous("claims4-5", fp)]
    checks = []
    for label, dec in (("claim4", algorithm_ai(g, cyc, h, a, b)), ("claim5", algorithm_aii(g, cyc, h, a, b))):
        for idx, seg in enumerate(dec.segments, start=1):
            name = f"{label}[P_{idx}]"
            bound = segment_bound(seg, h.k)
            if h.k < 3:
                checks.append(Check(name, seg.fresh_count, bound, True, "<=", vacuous=True, witness="k<3"))
            else:
                checks.append(_le(name, seg.fresh_count, bound, witness=seg))
    return checks


def check_fresh_total_identity(g: ColoredGraph, cyc: ColoredCycle, h: RainbowClique, a: int, b: int) -> Check:
    """Fresh cycle-to-clique edges counted once, versus the two passes that
    each cover ``a`` and ``b``."""
    members = frozenset(h.vertices)
    total = sum(len(_fresh_to(cyc, v, members)) for v in cyc.vertices)
    ai = algorithm_ai(g, cyc, h, a, b)
    aii = algorithm_aii(g, cyc, h, a, b)
    both = sum(s.fresh_count for s in ai.segments) + sum(s.fresh_count for s in aii.segments)
    rhs = both - len(_fresh_to(cyc, a, members)) - len(_fresh_to(cyc, b, members))
    return Check("eq9-identity", total, rhs, total == rhs, "==")


# --- whole-configuration audits ------------------------------------------------------


def unconditional_checks(g: ColoredGraph, cyc: ColoredCycle, h: RainbowClique) -> list[Check]:
    stats = counting_stats(g, cyc, h)
    checks = check_claim1_bound(g, cyc)
    checks += [check_eq3(g, cyc, h, w, stats) for w in h.vertices]
    checks += [check_eq2(g, stats, w) for w in h.vertices]
    if h.k:
        checks.append(check_clique_incident_distinct(g, cyc, h))
    checks.append(Check("fresh-colors-disjoint", 0, 0, fresh_colors_disjoint_check(g, cyc, h), "=="))
    return checks


def conditional_checks(g: ColoredGraph, cyc: ColoredCycle, h: RainbowClique, a: int, b: int) -> list[Check]:
    stats = counting_stats(g, cyc, h)
    checks = [check_eq4_conditional(g, cyc, h, w, stats) for w in h.vertices]
    checks += check_claims45_conditional(g, cyc, h, a, b)
    return checks


@dataclass
class AuditReport:
    pair: tuple[int, int]
    n: int
    l: int
    delta: int
    cycle: ColoredCycle
    clique: RainbowClique
    stats: CountingStats
    checks: list[Check]
    forbidden_pair: ForbiddenPair | None
    conclusion: str = ""
    consistent: bool = True

    def check(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_json(self) -> dict:
        return {
            "pair": list(self.pair),
            "n": self.n,
            "l": self.l,
            "delta": self.delta,
            "cycle": self.cycle.to_json(),
            "clique": self.clique.to_json(),
            "stats": self.stats.to_json(),
            "forbidden_pair": _jsonable(self.forbidden_pair),
            "checks": [c.to_json() for c in self.checks],
            "conclusion": self.conclusion,
            "consistent": self.consistent,
        }


CONSISTENT = "consistent: δ ≤ (2n+2)/3 chain satisfied"
ANOMALY = "ANOMALY: all hypotheses hold"


def audit_step(g: ColoredGraph, a: int, b: int, cyc: ColoredCycle) -> AuditReport:
    """Stats and per-configuration checks for one cycle on the trajectory."""
    cyc = reindex(cyc, a, b)
    h = find_maximal_fresh_clique(g, cyc)
    stats = counting_stats(g, cyc, h)
    checks = unconditional_checks(g, cyc, h) + conditional_checks(g, cyc, h, a, b)
    if len(cyc) < g.n:
        checks.append(check_fresh_total_identity(g, cyc, h, a, b))
    fp = find_forbidden_pair(g, cyc, h, a, b)
    report = AuditReport((a, b), g.n, len(cyc), g.min_degree(), cyc, h, stats, checks, fp)
    report.consistent = all(c.holds for c in checks)
    report.conclusion = "all checks hold" if report.consistent else "violation"
    return report


def audit_failure(g: ColoredGraph, a: int, b: int, cyc: ColoredCycle) -> AuditReport:
    """Evaluate the whole counting chain at a cycle that could not be
    extended. Below the degree threshold the chain must end with
    ``3 delta <= 2n + 2``; at or above it, reaching here is an anomaly."""
    n = g.n
    if len(cyc) >= n:
        raise ValueError("audit_failure needs a non-spanning cycle")
    cyc = reindex(cyc, a, b)
    l = len(cyc)
    delta = g.min_degree()
    h = find_maximal_fresh_clique(g, cyc)
    k = h.k
    st = counting_stats(g, cyc, h)
    S_f, S, T_f, T = st.S_fresh, st.S, st.T_fresh, st.T

    checks = unconditional_checks(g, cyc, h)
    eq4 = [check_eq4_conditional(g, cyc, h, w, st) for w in h.vertices]
    checks += eq4
    if any(c.vacuous for c in eq4):
        checks.append(_vacuous("eq5", next(c.witness for c in eq4 if c.vacuous)))
    else:
        checks.append(_le("eq5", 3 * S_f + 3 * S + 3 * T + T_f, k * (n + l - k)))
    checks.append(_le("eq6", T_f, (k - 1) * (n - l - k)))
    checks.append(_le("eq7", k * delta, S_f + S + T_f + T + k * (k - 1)))
    checks += check_claims45_conditional(g, cyc, h, a, b)
    # 3l >= n + 12
    checks.append(_ge("claim1: l >= (n+12)/3 [x3]", 3 * l, n + 12))
    checks.append(_ge("claim2: k >= 3", k, 3))
    checks.append(_ge("claim3: S~ >= l+1", S_f, l + 1))
    checks.append(_le("claim6: S~ <= l+2k-4", S_f, l + 2 * k - 4))
    final = _le("final: delta <= (2n+2)/3 [x3]", 3 * delta, 2 * n + 2)
    checks.append(final)

    fp = find_forbidden_pair(g, cyc, h, a, b)
    report = AuditReport((a, b), n, l, delta, cyc, h, st, checks, fp)
    if meets_threshold(g):
        report.conclusion = ANOMALY
        report.consistent = False
    else:
        report.conclusion = CONSISTENT
        report.consistent = final.holds
    return report
