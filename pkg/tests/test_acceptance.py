"""The twelve acceptance criteria, each with its time limit.

Every test prints one line ``criterion N PASS|FAIL ...`` whether or not
output capture is on.
"""

import random
import time
from contextlib import contextmanager
from itertools import combinations_with_replacement

import pytest

from vankampen.combinatorics import (Hypergraph2, complete_2_hypergraph, complete_bipartite, complete_graph,
                                     contains_subdivision, grid_graph, petersen_graph, spherical_partitions,
                                     subdivide, wheel_graph)
from vankampen.cohomology import (cochain_difference_in_span, elementary_coboundary, in_coboundary_span_int)
from vankampen.drawings import (GF2, Z, canonical_convex_drawing, integral_intersection_cocycle,
                                intersection_cocycle_mod2, radon_number, random_general_position_drawing,
                                van_kampen_number)
from vankampen.geometry import (Polyline, algebraic_intersection_number, crossing_count, general_position,
                                mod2_interior_contains, point, winding_number)
from vankampen.planarity import is_planar, is_planar_hyper
from vankampen.tverberg import (SignMap, _canonical, chessboard_sign_map, check_topological_witness,
                                convex_hull, intersect_hulls, radon_partition_4, regular_polygon,
                                sign_map_experiment, topological_tverberg_witness, triple_terms, triple_vk_number,
                                triple_vk_sum, tverberg_partitions)

from conftest import all_graphs, random_closed_pair, random_points

K4, K5, K6, K7, K33 = complete_graph(4), complete_graph(5), complete_graph(6), complete_graph(7), complete_bipartite(3, 3)
D3, D4 = complete_2_hypergraph(3), complete_2_hypergraph(4)
FOUR_PARTITIONS = [point(0, 4), point(5, 4), point(15, 19), point(3, 17), point(1, 10), point(16, 16), point(17, 15)]


@pytest.fixture
def criterion(capsys):
    @contextmanager
    def run(n, title, limit):
        start = time.perf_counter()
        ok = False
        try:
            yield
            ok = True
        finally:
            elapsed = time.perf_counter() - start
            passed = ok and elapsed < limit
            with capsys.disabled():
                print(f"\ncriterion {n:2d} {'PASS' if passed else 'FAIL'}  {title}  "
                      f"({elapsed:.1f} s, limit {limit} s)")
        assert elapsed < limit, f"criterion {n} took {elapsed:.1f} s"
    return run


def subdivisions(g, extra):
    """Every subdivision of ``g`` with at most ``extra`` new vertices."""
    out = []
    for k in range(extra + 1):
        for chosen in combinations_with_replacement(g.edges, k):
            h = g
            for e in set(chosen):
                a, b = e
                for _ in range(chosen.count(e)):
                    h = subdivide(h, (a, b))
                    b = h.n
            out.append(h)
    return out


def test_01_planarity_corpus(criterion):
    with criterion(1, "planarity corpus", 10):
        nonplanar = [K5, K33, petersen_graph()] + subdivisions(K5, 3) + subdivisions(K33, 3)
        planar = [K4, K5.without_edge((1, 2))] + [wheel_graph(k) for k in range(4, 9)] + [grid_graph(4, 4)]
        assert len(nonplanar) == 3 + 286 + 220
        assert [g for g in nonplanar if is_planar(g)] == []
        assert [g for g in planar if not is_planar(g)] == []


def test_02_exhaustive_kuratowski_agreement(criterion):
    with criterion(2, "graphs on <= 6 vertices vs Kuratowski subgraphs", 300):
        graphs = [g for n in range(1, 7) for g in all_graphs(n)]
        assert len(graphs) == 1 + 2 + 4 + 11 + 34 + 156
        for g in graphs:
            kuratowski_free = contains_subdivision(g, K5) is None and contains_subdivision(g, K33) is None
            assert bool(is_planar(g)) == kuratowski_free, g


def test_03_hypergraph_planarity(criterion):
    with criterion(3, "hypergraph planarity", 1):
        assert not is_planar_hyper(D3)
        assert is_planar_hyper(Hypergraph2(3, ((1, 2, 3),)))
        assert is_planar_hyper(Hypergraph2(4, ((1, 2, 3), (2, 3, 4))))


def test_04_van_kampen_number_is_odd(criterion):
    with criterion(4, "van Kampen number of 1000 K5 and 1000 K3,3 drawings", 60):
        for g in (K5, K33):
            bad = [s for s in range(1000)
                   if van_kampen_number(random_general_position_drawing(g, s, bends_per_edge=s % 3)) != 1]
            assert bad == []


def test_05_radon_number_is_odd(criterion):
    with criterion(5, "Radon number of 1000 K4 drawings", 60):
        bad = [s for s in range(1000) if radon_number(random_general_position_drawing(K4, s, bends_per_edge=s % 3)) != 1]
        assert bad == []


def test_06_geometry_lemmas(criterion):
    with criterion(6, "closed curves, Stokes identity, chessboard parity", 60):
        rng = random.Random(2024)
        for _ in range(1000):
            l1, l2 = random_closed_pair(rng)
            assert crossing_count(l1, l2) % 2 == 0
            assert algebraic_intersection_number(l1, l2) == 0
            verts = random_points(rng, rng.randint(5, 9))
            k = rng.randint(3, len(verts) - 2)
            loop, path = Polyline(tuple(verts[:k]), closed=True), Polyline(tuple(verts[k:]))
            assert algebraic_intersection_number(loop, path) == \
                winding_number(loop, path.end) - winding_number(loop, path.start)
            same = mod2_interior_contains(loop, path.start) == mod2_interior_contains(loop, path.end)
            assert same == (crossing_count(loop, path) % 2 == 0)


def test_07_cocycle_fixtures(criterion):
    with criterion(7, "convex cocycles and elementary coboundaries", 10):
        assert intersection_cocycle_mod2(canonical_convex_drawing(K4)).support() == [((1, 3), (2, 4))]
        assert sorted(intersection_cocycle_mod2(canonical_convex_drawing(K5)).support()) == [
            ((1, 3), (2, 4)), ((1, 3), (2, 5)), ((1, 4), (2, 5)), ((1, 4), (3, 5)), ((2, 4), (3, 5))]
        assert elementary_coboundary(K4, 1, (2, 4), "graph-mod2").support() == [((1, 3), (2, 4))]
        assert elementary_coboundary(K5, 3, (1, 2), "graph-mod2").support() == [((1, 2), (3, 4)), ((1, 2), (3, 5))]
        assert elementary_coboundary(D3, 1, (2, 3), "hyper-mod2").support() == [((1, 4), (2, 3)), ((1,), (2, 3, 4))]


def test_08_cohomology_invariance(criterion):
    with criterion(8, "random drawings are cohomologous", 300):
        for host in (K5, K6, D4):
            for s in range(100):
                d1 = random_general_position_drawing(host, 2 * s, bends_per_edge=1)
                d2 = random_general_position_drawing(host, 2 * s + 1, bends_per_edge=1)
                assert cochain_difference_in_span(d1, d2, GF2), (host, s)
        for s in range(20):
            host = (K5, D4)[s % 2]
            d1 = random_general_position_drawing(host, 1000 + 2 * s, bends_per_edge=1)
            d2 = random_general_position_drawing(host, 1001 + 2 * s, bends_per_edge=1)
            assert cochain_difference_in_span(d1, d2, Z), (host, s)


def test_09_doubled_cocycle_is_trivial(criterion):
    with criterion(9, "twice the integral cocycle is a coboundary", 120):
        for host, n in ((K5, 20), (D3, 10)):
            for s in range(n):
                nu = integral_intersection_cocycle(random_general_position_drawing(host, s, bends_per_edge=1))
                assert in_coboundary_span_int(nu.scale(2), host), (host, s)


def test_10_counting_fixtures(criterion):
    with criterion(10, "216 spherical partitions, 7 and 4 Tverberg partitions, unique Radon partitions", 120):
        assert len(spherical_partitions(6, 3)) == 216
        hept = regular_polygon(7)
        assert general_position(hept).ok
        assert len(tverberg_partitions(hept, 3)) == 7
        assert len(tverberg_partitions(FOUR_PARTITIONS, 3)) == 4
        rng = random.Random(10)
        splits = [({1}, {2, 3, 4}), ({2}, {1, 3, 4}), ({3}, {1, 2, 4}), ({4}, {1, 2, 3}),
                  ({1, 2}, {3, 4}), ({1, 3}, {2, 4}), ({1, 4}, {2, 3})]
        for _ in range(10 ** 4):
            pts = random_points(rng, 4, -1000, 1000)
            meeting = [s for s in splits
                       if intersect_hulls(convex_hull(pts[i - 1] for i in s[0]),
                                          convex_hull(pts[i - 1] for i in s[1]))]
            assert len(meeting) == 1
            assert radon_partition_4(pts) == _canonical(meeting[0])


def test_11_topological_tverberg(criterion):
    with criterion(11, "topological Tverberg witness on 100 K7 drawings", 600):
        for s in range(100):
            d = random_general_position_drawing(K7, s, bends_per_edge=1 + s % 2)
            w = topological_tverberg_witness(d)
            assert w is not None and check_topological_witness(d, w), s


def test_12_triple_number_properties(criterion):
    with criterion(12, "triple number invariants and experiment determinism (no sign map claimed valid)", 120):
        rng = random.Random(12)
        maps = [SignMap.constant(1), chessboard_sign_map(),
                SignMap.from_function(lambda p: rng.choice((1, -1)))]
        for s in range(10):
            d = random_general_position_drawing(K7, s, bends_per_edge=1)
            terms = triple_terms(d)
            for m in maps:
                total = triple_vk_sum(d, m, terms)
                assert triple_vk_sum(d, m.flipped(), terms) == -total
                assert triple_vk_number(d, m.flipped()) == (-total) % 3
                # linearity: the sum is the dot product of signs with terms
                assert total == sum(v * t for (_, v), t in zip(m.items(), terms))
            assert triple_vk_sum(d, SignMap.constant(1), [0] * len(terms)) == 0
        a = sign_map_experiment(SignMap.constant(1), 6, seed=3)
        b = sign_map_experiment(SignMap.constant(1), 6, seed=3)
        assert a == b and len(a.values) == 6
        assert len(sign_map_experiment(chessboard_sign_map(), 1, seed=3).histogram) == 1
        # the all-(+1) map is not an invariant: its values differ across drawings
        assert not sign_map_experiment(SignMap.constant(1), 10, seed=1).constant
