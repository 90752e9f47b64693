import random

import pytest

from bimotif import (
    NotAPath,
    Side,
    SixCycleClass,
    TooLarge,
    brute_force_census,
    canonical_four_path,
    census,
    classify_four_path,
    closures_of,
    mirror,
    opsahl,
)
from graphs import c6, divisor_gadget, k33, random_bipartite, ring_plus_chords
from oracles import naive_opsahl


def test_c6_census():
    cen = census(c6())
    assert cen.path_totals == (3, 0, 0)
    assert cen.path_closed_totals == (3, 0, 0, 0)
    assert cen.config_totals == (3, 0, 0)
    assert cen.config_closed_totals == (3, 0, 0, 0)
    # one path per center, each closed by the opposite ring node
    assert all(row == (1, 0, 0) for row in cen.path_counts)


def test_k33_census():
    cen = census(k33())
    assert cen.path_totals == (0, 0, 18)
    assert cen.path_closed_totals == (0, 0, 0, 18)
    assert all(row == (0, 0, 6) for row in cen.path_counts)
    assert cen.config_totals == (0, 0, 3)
    assert cen.config_closed_totals == (0, 0, 0, 3)


def test_classify_four_path_examples():
    g = c6()
    assert classify_four_path(g, 0, 0, 1, 1, 2) == 0
    assert classify_four_path(k33(), 0, 0, 1, 1, 2) == 2
    one = ring_plus_chords(1)  # ring plus the chord v0-w1
    # the chord crosses the path centered at v1 exactly once
    assert classify_four_path(one, 2, 1, 1, 0, 0) == 1
    paths = [classify_four_path(one, *t) for t in [(0, 0, 1, 1, 2), (1, 1, 2, 2, 0), (2, 2, 0, 0, 1)]]
    assert sorted(paths) == [0, 1, 1]


def test_classify_four_path_rejects_non_paths():
    g = c6()
    with pytest.raises(NotAPath):
        classify_four_path(g, 0, 0, 0, 1, 2)  # repeated node
    with pytest.raises(NotAPath):
        classify_four_path(g, 0, 1, 1, 0, 2)  # missing edge v0-w1
    with pytest.raises(NotAPath):
        classify_four_path(g, 0, 0, 1, 1, 9)  # out of range


def test_canonical_form_is_reversal_invariant():
    rng = random.Random(7)
    for _ in range(50):
        g = random_bipartite(rng, rng.randint(3, 8), rng.randint(3, 8), 0.5)
        adj = [set(t) for t in g.adjacency_primary]
        na = len(adj)
        ns = len(g.secondary_labels)
        for v0 in range(na):
            for w0 in range(ns):
                for v1 in range(na):
                    for w1 in range(ns):
                        for v2 in range(na):
                            try:
                                p = canonical_four_path(g, v0, w0, v1, w1, v2)
                            except NotAPath:
                                continue
                            q = canonical_four_path(g, v2, w1, v1, w0, v0)
                            assert p == q
                            if p.extra_edges == 1:
                                # the orientation rule: extra edge sits at v0-w1
                                assert p.vias[1] in adj[p.ends[0]]


def test_closures_of_classes():
    g = c6()
    p = canonical_four_path(g, 0, 0, 1, 1, 2)
    assert closures_of(g, p) == [(2, SixCycleClass.UNCONNECTED)]
    gk = k33()
    p = canonical_four_path(gk, 0, 0, 1, 1, 2)
    assert closures_of(gk, p) == [(2, SixCycleClass.COMPLETE)]


def test_closures_match_naive_scan():
    rng = random.Random(99)
    for _ in range(20):
        g = random_bipartite(rng, 8, 8, 0.4)
        adj = [set(t) for t in g.adjacency_primary]
        cen = brute_force_census(g)
        na = len(adj)
        ns = len(g.secondary_labels)
        for v0 in range(na):
            for w0 in range(ns):
                for v1 in range(na):
                    for w1 in range(ns):
                        for v2 in range(na):
                            try:
                                p = canonical_four_path(g, v0, w0, v1, w1, v2)
                            except NotAPath:
                                continue
                            expected = []
                            for w2 in range(ns):
                                if w2 in p.vias:
                                    continue
                                if w2 in adj[p.ends[0]] and w2 in adj[p.ends[1]]:
                                    bump = 1 if w2 in adj[p.center] else 0
                                    expected.append((w2, p.extra_edges + bump))
                            got = [(w, int(c)) for w, c in closures_of(g, p)]
                            assert got == expected
                            # closure class never strays from e or e+1
                            for _, c in got:
                                assert c in (p.extra_edges, p.extra_edges + 1)
        assert cen.node_count == na


def test_census_equals_brute_force_small_batch():
    rng = random.Random(4242)
    for _ in range(30):
        g = random_bipartite(rng, rng.randint(3, 10), rng.randint(3, 10), rng.uniform(0.15, 0.55))
        for side in (Side.PRIMARY, Side.SECONDARY):
            assert census(g, side) == brute_force_census(g, side)


def test_side_symmetry():
    rng = random.Random(31)
    for _ in range(15):
        g = random_bipartite(rng, rng.randint(3, 9), rng.randint(3, 9), 0.4)
        assert census(g, Side.SECONDARY) == census(mirror(g), Side.PRIMARY)


def test_brute_force_guard():
    g = random_bipartite(random.Random(0), 17, 4, 0.3)
    with pytest.raises(TooLarge):
        brute_force_census(g)


def test_opsahl_trivial_cases():
    assert opsahl(c6()).c_star == 1
    # a bare 4-path has nothing to close it
    from bimotif import from_edge_list

    path_graph, _ = from_edge_list([("a", "x"), ("b", "x"), ("b", "y"), ("c", "y")])
    stats = opsahl(path_graph)
    assert stats.tau_star == 1
    assert stats.c_star == 0


def test_opsahl_matches_naive_recount():
    rng = random.Random(555)
    for _ in range(10):
        g = random_bipartite(rng, 10, 10, rng.uniform(0.2, 0.5))
        for side in (Side.PRIMARY, Side.SECONDARY):
            stats = opsahl(g, side)
            tau, closed, per_tau, per_closed = naive_opsahl(g, side)
            assert stats.tau_star == tau
            assert stats.tau_star_closed == closed
            assert list(stats.per_node_tau) == per_tau
            assert list(stats.per_node_closed) == per_closed


def test_path_counts_partition_tau(davis):
    for side in (Side.PRIMARY, Side.SECONDARY):
        cen = census(davis, side)
        stats = opsahl(davis, side)
        assert sum(cen.path_totals) == stats.tau_star
        for i in range(cen.node_count):
            assert sum(cen.path_counts[i]) == stats.per_node_tau[i]
        assert cen.path_closed_any_total == stats.tau_star_closed


def test_path_and_config_counts_are_linked(davis):
    # classes 0 and 1 have one path per (config, center); class 2 has two
    for side in (Side.PRIMARY, Side.SECONDARY):
        cen = census(davis, side)
        for i in range(cen.node_count):
            assert cen.path_counts[i][0] == cen.config_counts[i][0]
            assert cen.path_counts[i][1] == cen.config_counts[i][1]
            assert cen.path_counts[i][2] == 2 * cen.config_counts[i][2]
        assert cen.path_totals[1] == 2 * cen.config_totals[1]
        assert cen.path_totals[2] == 6 * cen.config_totals[2]


def test_config_closed_bounded_by_counts(davis):
    cen = census(davis)
    n0, n1, n2 = cen.config_totals
    x0, x1, x2, x3 = cen.config_closed_totals
    assert x0 <= n0
    assert x1 <= n0 + n1
    assert x2 <= n1 + n2
    assert x3 <= n2
    for i in range(cen.node_count):
        p = cen.path_counts[i]
        c = cen.path_closed[i]
        assert c[0] <= p[0]
        assert c[1] <= p[0] + p[1]
        assert c[2] <= p[1] + p[2]
        assert c[3] <= p[2]


def test_divisor_gadget_counts():
    g = divisor_gadget()
    cen = census(g)
    i = g.primary_labels.index("v1")
    assert cen.config_counts[i] == (0, 2, 1)
    assert cen.config_closed[i] == (0, 0, 3, 0)
