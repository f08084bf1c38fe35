"""Brute-force ground truth for small graphs.

Cycles are enumerated as plain simple cycles with no color pruning; the
rainbow and pair-membership filters are applied afterwards. This keeps the
oracle independent of the pruned search used by the engine.
"""

from __future__ import annotations

from enum import Enum
from typing import Iterator, Sequence

from .cycles import ColoredCycle
from .graph import ColoredGraph

DEFAULT_CAP = 12


class OracleCapExceeded(ValueError):
    pass


class Verdict(str, Enum):
    PRESENT = "present"
    ABSENT = "absent"


def canonical_form(vertices: Sequence[int]) -> tuple[int, ...]:
    """Lexicographically least reading of a cycle over all rotations and
    both directions; it always starts at the smallest vertex."""
    l = len(vertices)
    best: tuple[int, ...] | None = None
    for seq in (list(vertices), list(reversed(vertices))):
        for r in range(l):
            cand = tuple(seq[r:] + seq[:r])
            if best is None or cand < best:
                best = cand
    assert best is not None
    return best


def verify_rainbow_cycle(g: ColoredGraph, vertices: Sequence[int], a: int, b: int, length: int) -> bool:
    """Independent re-check of an engine-produced cycle."""
    vs = list(vertices)
    if len(vs) != length or len(set(vs)) != length or length < 3:
        return False
    if a not in vs or b not in vs:
        return False
    colors = []
    for i in range(length):
        u, v = vs[i], vs[(i + 1) % length]
        if not g.has_edge(u, v):
            return False
        colors.append(g.color(u, v))
    return len(set(colors)) == length


def _check_cap(g: ColoredGraph, cap: int) -> None:
    if g.n > cap:
        raise OracleCapExceeded(f"oracle limited to n <= {cap}, got n={g.n}")


def simple_cycles(g: ColoredGraph, length: int) -> Iterator[tuple[int, ...]]:
    """Every simple cycle with ``length`` vertices, once, in canonical form.

    Each cycle is grown from its smallest vertex using only larger vertices;
    duplicates (the two directions) are dropped via the canonical form.
    """
    if length < 3:
        return
    seen: set[tuple[int, ...]] = set()
    for s in g.vertices():
        path = [s]
        on = {s}

        def grow(u: int) -> Iterator[tuple[int, ...]]:
            if len(path) == length:
                if g.has_edge(u, s):
                    yield canonical_form(path)
                return
            for v in sorted(g.neighbors(u)):
                if v > s and v not in on:
                    path.append(v)
                    on.add(v)
                    yield from grow(v)
                    path.pop()
                    on.remove(v)

        for cyc in grow(s):
            if cyc not in seen:
                seen.add(cyc)
                yield cyc


def _cycles_through(g: ColoredGraph, a: int, length: int) -> Iterator[tuple[int, ...]]:
    # grow from a; each cycle through a is seen in both directions, the
    # canonical form dedups them
    seen: set[tuple[int, ...]] = set()
    path = [a]
    on = {a}

    def grow(u: int) -> Iterator[tuple[int, ...]]:
        if len(path) == length:
            if g.has_edge(u, a):
                yield canonical_form(path)
            return
        for v in sorted(g.neighbors(u)):
            if v not in on:
                path.append(v)
                on.add(v)
                yield from grow(v)
                path.pop()
                on.remove(v)

    for cyc in grow(a):
        if cyc not in seen:
            seen.add(cyc)
            yield cyc


def _is_rainbow(g: ColoredGraph, vs: Sequence[int]) -> bool:
    cols = {g.color(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))}
    return len(cols) == len(vs)


def enumerate_rainbow_cycles(
    g: ColoredGraph, a: int, b: int, length: int, limit: int | None = None, cap: int = DEFAULT_CAP
) -> list[ColoredCycle]:
    """Distinct rainbow cycles with ``length`` vertices containing ``a`` and
    ``b`` (at most ``limit`` of them)."""
    _check_cap(g, cap)
    if length < 3:
        raise ValueError("cycle length must be at least 3")
    out: list[ColoredCycle] = []
    if length > g.n:
        return out
    for vs in _cycles_through(g, a, length):
        if b in vs and _is_rainbow(g, vs):
            out.append(ColoredCycle(g, vs))
            if limit is not None and len(out) >= limit:
                break
    return out


def pancyclicity_witnesses(g: ColoredGraph, a: int, b: int, cap: int = DEFAULT_CAP) -> dict[int, ColoredCycle | None]:
    """One rainbow cycle per length 3..n, or None after exhaustive search."""
    _check_cap(g, cap)
    out: dict[int, ColoredCycle | None] = {}
    for L in range(3, g.n + 1):
        found = enumerate_rainbow_cycles(g, a, b, L, limit=1, cap=cap)
        out[L] = found[0] if found else None
    return out


def pancyclicity_table(g: ColoredGraph, a: int, b: int, cap: int = DEFAULT_CAP) -> dict[int, Verdict]:
    return {
        L: Verdict.ABSENT if cyc is None else Verdict.PRESENT
        for L, cyc in pancyclicity_witnesses(g, a, b, cap).items()
    }


def table_to_json(table: dict[int, Verdict]) -> dict:
    return {str(L): v.value for L, v in sorted(table.items())}
