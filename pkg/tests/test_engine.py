import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import (
    TYPE1_BLOCKED,
    TYPE1_BLOCKED_CYCLE,
    TYPE1_BLOCKED_PAIR,
    TYPE2_ONLY,
    TYPE2_ONLY_CYCLE,
    TYPE2_ONLY_PAIR,
    k_minus_edge,
    random_rainbow_cycle,
    strong_graphs,
    with_pendant,
)
from rainbowpair.clique import clique_from_vertices, find_maximal_fresh_clique
from rainbowpair.cycles import ColoredCycle
from rainbowpair.engine import (
    NoExtension,
    NoSeed,
    Status,
    all_pairs,
    extend_once,
    find_type1,
    find_type2,
    pair_pancyclicity,
    search_rainbow_cycle,
    seed_cycle,
)
from rainbowpair.generators import rainbow_complete, random_strong, threshold_degree
from rainbowpair.graph import from_edge_list
from rainbowpair.oracle import Verdict, pancyclicity_table, verify_rainbow_cycle


def test_seed_triangle_for_adjacent_pair():
    cyc = seed_cycle(rainbow_complete(9), 0, 1)
    assert cyc.vertices == (0, 1, 2)


def test_seed_four_cycle_for_nonadjacent_pair():
    cyc = seed_cycle(k_minus_edge(9), 0, 1)
    assert len(cyc) == 4 and cyc.is_rainbow()
    assert cyc.vertices[0] == 0 and cyc.vertices[2] == 1


def test_seed_four_cycle_when_no_common_neighbor():
    g = from_edge_list(4, [(0, 1, 0), (1, 2, 1), (2, 3, 2), (0, 3, 3)])
    assert seed_cycle(g, 0, 1).vertices == (0, 1, 2, 3)


def test_no_seed():
    g = from_edge_list(4, [(0, 1, 0), (1, 2, 1), (2, 3, 2)])
    with pytest.raises(NoSeed):
        seed_cycle(g, 0, 3)


def test_type1_on_rainbow_complete():
    g = rainbow_complete(6)
    cyc = ColoredCycle(g, range(4))
    ext = find_type1(g, cyc, 0, 2)
    assert ext.kind == "type1" and ext.splice == (0, 1)
    assert ext.inserted_vertices == (4,)
    assert ext.result.vertices == (0, 4, 1, 2, 3)


def test_type1_none_on_spanning_cycle():
    g = rainbow_complete(5)
    assert find_type1(g, ColoredCycle(g, range(5)), 0, 1) is None


def test_type1_none_when_outside_edges_reuse_cycle_colors():
    g, (a, b) = TYPE1_BLOCKED, TYPE1_BLOCKED_PAIR
    cyc = ColoredCycle(g, TYPE1_BLOCKED_CYCLE)
    # vertex 4 sees the consecutive pair 5, 0, but with C-colored edges
    assert g.has_edge(4, 5) and g.has_edge(4, 0)
    assert not cyc.is_fresh(4, 5) and not cyc.is_fresh(4, 0)
    assert find_type1(g, cyc, a, b) is None


def test_type2_replaces_arc_through_clique():
    g, (a, b) = TYPE2_ONLY, TYPE2_ONLY_PAIR
    cyc = ColoredCycle(g, TYPE2_ONLY_CYCLE)
    assert find_type1(g, cyc, a, b) is None
    h = find_maximal_fresh_clique(g, cyc)
    assert h.vertices == (1, 4)
    ext = find_type2(g, cyc, h, a, b)
    assert ext.kind == "type2"
    assert ext.inserted_vertices == (1, 4)
    assert ext.result.vertices == (3, 1, 4, 5, 2)
    assert ext.result.is_rainbow()
    assert extend_once(g, cyc, a, b).kind == "type2"


def test_type2_takes_smallest_gap():
    g = rainbow_complete(9)
    cyc = ColoredCycle(g, range(6))
    h = find_maximal_fresh_clique(g, cyc)
    assert h.k == 3
    ext = find_type2(g, cyc, h, 0, 3)
    assert ext.splice == (0, 2)
    assert len(ext.inserted_vertices) == 2
    assert len(ext.result) == 7 and verify_rainbow_cycle(g, ext.result.vertices, 0, 3, 7)


def test_type2_none_for_single_vertex_clique():
    g = rainbow_complete(6)
    cyc = ColoredCycle(g, range(5))
    assert find_type2(g, cyc, clique_from_vertices(g, [5]), 0, 2) is None


def test_type2_keeps_pair_off_replaced_arc():
    g = rainbow_complete(9)
    cyc = ColoredCycle(g, range(6))
    h = find_maximal_fresh_clique(g, cyc)
    ext = find_type2(g, cyc, h, 1, 4)
    assert 1 in ext.result and 4 in ext.result


@pytest.mark.parametrize("n", [6, 9, 12])
def test_extend_once_on_rainbow_complete_uses_type1(n):
    g = rainbow_complete(n)
    for l in range(3, n):
        ext = extend_once(g, ColoredCycle(g, range(l)), 0, 1)
        assert ext.kind == "type1" and len(ext.result) == l + 1


def test_extend_once_certifies_absence():
    # the pendant vertex lies on no cycle, so no 6-cycle exists
    g = with_pendant(rainbow_complete(5))
    with pytest.raises(NoExtension) as info:
        extend_once(g, ColoredCycle(g, range(5)), 0, 1)
    assert info.value.certified and info.value.length == 6
    assert pancyclicity_table(g, 0, 1)[6] is Verdict.ABSENT


def test_extend_once_budget_exhaustion_is_not_certified():
    g = with_pendant(rainbow_complete(5))
    with pytest.raises(NoExtension) as info:
        extend_once(g, ColoredCycle(g, range(5)), 0, 1, budget=0)
    assert not info.value.certified


def test_extend_once_rejects_bad_input():
    g = rainbow_complete(5)
    with pytest.raises(ValueError):
        extend_once(g, ColoredCycle(g, range(5)), 0, 1)
    with pytest.raises(ValueError):
        extend_once(g, ColoredCycle(g, [2, 3, 4]), 0, 1)


@given(strong_graphs(min_n=6, max_n=11), st.integers(0, 2**32))
@settings(max_examples=80, deadline=None)
def test_extension_invariants(g, seed):
    rng = random.Random(seed)
    a, b = rng.sample(range(g.n), 2)
    vs = random_rainbow_cycle(g, a, b, rng.randint(3, g.n - 1), rng)
    if vs is None:
        return
    cyc = ColoredCycle(g, vs)
    try:
        ext = extend_once(g, cyc, a, b)
    except NoExtension as exc:
        assert exc.certified
        assert search_rainbow_cycle(g, a, b, len(cyc) + 1).cycle is None
        return
    assert len(ext.result) == len(cyc) + 1
    assert verify_rainbow_cycle(g, ext.result.vertices, a, b, len(cyc) + 1)
    assert ext.apply() == ext.result
    if ext.kind == "type1":
        assert len(ext.inserted_vertices) == 1
    elif ext.kind == "type2":
        i, j = ext.splice
        # the replaced arc has gap - 1 vertices, the clique path gap
        assert len(ext.inserted_vertices) == (j - i) % len(cyc)


def test_search_finds_or_exhausts():
    g = k_minus_edge(6)
    assert search_rainbow_cycle(g, 0, 1, 3).exhausted
    out = search_rainbow_cycle(g, 0, 1, 6)
    assert out.cycle is not None and verify_rainbow_cycle(g, out.cycle.vertices, 0, 1, 6)
    assert not search_rainbow_cycle(g, 0, 1, 6, budget=1).exhausted


def test_pair_pancyclicity_adjacent_pair():
    cert = pair_pancyclicity(rainbow_complete(9), 0, 1)
    assert cert.l_min == 3 and cert.complete
    assert sorted(cert.cycles) == list(range(3, 10))
    assert cert.mechanisms[3] == "seed"


def test_pair_pancyclicity_nonadjacent_pair():
    g = k_minus_edge(9)
    cert = pair_pancyclicity(g, 0, 1)
    assert cert.l_min == 4
    assert cert.status[3] is Status.IMPOSSIBLE and cert.mechanisms[3] == "nonadjacent"
    assert all(cert.status[L] is Status.FOUND for L in range(4, 10))
    table = pancyclicity_table(g, 0, 1)
    assert {L: s is Status.FOUND for L, s in cert.status.items()} == {
        L: v is Verdict.PRESENT for L, v in table.items()
    }


def test_small_threshold_graphs_use_direct_search():
    cert = pair_pancyclicity(rainbow_complete(6), 2, 4)
    assert cert.complete and set(cert.mechanisms.values()) == {"direct"}


def test_pair_pancyclicity_threshold_instance():
    n = 11
    g = random_strong(n, threshold_degree(n), 5)
    for a, b in [(0, 1), (3, 9), (4, 10)]:
        cert = pair_pancyclicity(g, a, b)
        assert cert.complete and not cert.failed
        for L, cyc in cert.cycles.items():
            assert verify_rainbow_cycle(g, cyc.vertices, a, b, L)


def test_pair_pancyclicity_certifies_absence_at_the_top_length():
    cert = pair_pancyclicity(with_pendant(rainbow_complete(5)), 0, 1)
    assert [cert.status[L] for L in range(3, 7)] == [Status.FOUND] * 3 + [Status.IMPOSSIBLE]


def test_pair_pancyclicity_resumes_after_absent_length():
    # pair (5, 6) has rainbow 5- and 7-cycles but no rainbow 6-cycle
    g = random_strong(7, 3, 3)
    cert = pair_pancyclicity(g, 5, 6)
    assert [cert.status[L].value for L in range(3, 8)] == ["impossible", "impossible", "found", "impossible", "found"]
    assert cert.mechanisms[7] == "direct"
    table = pancyclicity_table(g, 5, 6)
    assert all((cert.status[L] is Status.FOUND) == (table[L] is Verdict.PRESENT) for L in table)


def test_pair_pancyclicity_records_budget_failure():
    g = with_pendant(rainbow_complete(5))
    cert = pair_pancyclicity(g, 0, 1, budget=0)
    assert cert.failed == [6]


def test_pair_pancyclicity_rejects_bad_pair():
    with pytest.raises(ValueError):
        pair_pancyclicity(rainbow_complete(4), 1, 1)


def test_pair_pancyclicity_is_deterministic():
    g = random_strong(12, 7, 3)
    assert pair_pancyclicity(g, 2, 7).to_json() == pair_pancyclicity(g, 2, 7).to_json()


def test_all_pairs_order_and_workers():
    g = random_strong(9, threshold_degree(9), 1)
    one = [c.to_json() for c in all_pairs(g)]
    four = [c.to_json() for c in all_pairs(g, workers=4)]
    assert one == four
    assert [tuple(c["pair"]) for c in one] == [(a, b) for a in range(9) for b in range(a + 1, 9)]
