import itertools
from fractions import Fraction

import pytest

from vankampen.combinatorics import complete_2_hypergraph, complete_graph, pair_index
from vankampen.cohomology import (cochain_difference_in_span, combine, elementary_coboundary,
                                  in_coboundary_span_gf2, in_coboundary_span_int, r_fold_elementary_coboundary,
                                  supersymmetric_coboundaries, supersymmetric_formula, vertex_edge_pairs)
from vankampen.drawings import (GF2, Z, canonical_convex_drawing, integral_intersection_cocycle,
                                intersection_cocycle_mod2, make_drawing, r_fold_intersection_cocycle,
                                random_general_position_drawing)
from vankampen.errors import HostMismatch, Incidence
from vankampen.geometry import intersection_points, point, winding_number

K4, K5 = complete_graph(4), complete_graph(5)
D3, D4, D6 = complete_2_hypergraph(3), complete_2_hypergraph(4), complete_2_hypergraph(6)


def test_elementary_coboundary_fixtures():
    assert elementary_coboundary(K4, 1, (2, 4), "graph-mod2").support() == [((1, 3), (2, 4))]
    assert elementary_coboundary(K5, 3, (1, 2), "graph-mod2").support() == [((1, 2), (3, 4)), ((1, 2), (3, 5))]
    assert elementary_coboundary(D3, 1, (2, 3), "hyper-mod2").support() == [((1, 4), (2, 3)), ((1,), (2, 3, 4))]


def test_elementary_coboundary_rejects_incident_pairs():
    with pytest.raises(Incidence):
        elementary_coboundary(K5, 1, (1, 2), "graph-mod2")
    with pytest.raises(ValueError):
        elementary_coboundary(K5, 3, (1, 2), "nonsense")


@pytest.mark.parametrize("host,flavor", [(K5, "graph-skew"), (D4, "hyper-supersym")])
def test_bullet_rules_formula_and_product_construction_agree(host, flavor):
    index, cols = supersymmetric_coboundaries(host, 2, geometric=False,
                                              index=pair_index(host, "hyper-Ktilde" if host is D4 else "graph-Ktilde"))
    for a, e in vertex_edge_pairs(host):
        lit = elementary_coboundary(host, a, e, flavor)
        assert supersymmetric_formula(host, a, e).values == lit.values
        col = cols[((a,), e)]
        assert tuple(col.get(i, 0) for i in range(len(index))) == lit.values


def test_geometric_generators_twist_vertex_tuples():
    idx, plain = supersymmetric_coboundaries(D4, 2, geometric=False)
    _, geo = supersymmetric_coboundaries(D4, 2, geometric=True)
    for label in plain:
        for row, v in plain[label].items():
            has_vertex = any(len(c) == 1 for c in idx.entries[row])
            assert geo[label][row] == (-v if has_vertex else v)


def test_coboundary_support_adds_one_vertex_to_the_label():
    idx, cols = supersymmetric_coboundaries(D6, 3)
    assert len(cols) > 0
    for label, col in itertools.islice(cols.items(), 60):
        verts = {v for c in label for v in c}
        for row in col:
            entry = idx.entries[row]
            covered = {v for c in entry for v in c}
            assert verts < covered and len(covered - verts) == 1


def _vertex_across_edge(host, a, sigma, base_seed, eps=Fraction(1, 10 ** 7)):
    base = random_general_position_drawing(host, base_seed)
    p, q = base.vertex_points[sigma[0]], base.vertex_points[sigma[1]]
    mid = point(Fraction(p.x + q.x, 2), Fraction(p.y + q.y, 2))
    nx, ny = -(q.y - p.y), q.x - p.x
    vp0, vp1 = dict(base.vertex_points), dict(base.vertex_points)
    vp0[a] = point(mid.x - eps * nx, mid.y - eps * ny)
    vp1[a] = point(mid.x + eps * nx, mid.y + eps * ny)
    d0, d1 = make_drawing(host, vp0), make_drawing(host, vp1)
    assert d0.gp.ok and d1.gp.ok
    return d0, d1, mid


@pytest.mark.parametrize("seed", range(4))
def test_graph_move_changes_cocycle_by_one_coboundary(seed):
    d0, d1, _ = _vertex_across_edge(K5, 1, (2, 3), seed)
    diff = intersection_cocycle_mod2(d1) - intersection_cocycle_mod2(d0)
    assert diff.values == elementary_coboundary(K5, 1, (2, 3), "graph-mod2").values
    zdiff = integral_intersection_cocycle(d1) - integral_intersection_cocycle(d0)
    delta = elementary_coboundary(K5, 1, (2, 3), "graph-skew")
    assert zdiff.values in (delta.values, (-delta).values)


def test_hypergraph_move_for_r2_and_r3():
    """Moving vertex A across edge s changes the r-fold cocycle by exactly
    -sum_F wind(F, P) G(A, s, F) with the geometric generators."""
    a, sigma = 1, (2, 3)
    nontrivial = {2: 0, 3: 0}
    for seed in range(5, 11):
        _check_vertex_move(a, sigma, seed, nontrivial)
    assert nontrivial[2] == 6 and nontrivial[3] >= 2


def _check_vertex_move(a, sigma, seed, nontrivial):
    d0, d1, mid = _vertex_across_edge(D6, a, sigma, seed)
    for r in (2, 3):
        if r == 2:
            diff = integral_intersection_cocycle(d1) - integral_intersection_cocycle(d0)
            idx, cols = supersymmetric_coboundaries(D6, 2, index=diff.index)
        else:
            diff = r_fold_intersection_cocycle(d1, 3) - r_fold_intersection_cocycle(d0, 3)
            idx, cols = supersymmetric_coboundaries(D6, 3)
        predicted = [0] * len(idx)
        for label, col in cols.items():
            if (a,) not in label or sigma not in label:
                continue
            w = 1
            for f in (c for c in label if len(c) == 3):
                w *= winding_number(d0.cycle_image(f), mid)
            for row, v in col.items():
                predicted[row] -= w * v
        assert tuple(predicted) == diff.values
        nontrivial[r] += any(predicted)


def test_edge_bend_across_a_crossing_for_r3():
    """Pushing edge e3 across the crossing of e1 and e2 changes the r = 3
    cocycle by plus or minus G(e1, e2, e3)."""
    idx, cols = supersymmetric_coboundaries(D6, 3)
    checked = 0
    for seed in range(40):
        base = random_general_position_drawing(D6, seed)
        for e1, e2 in itertools.combinations(D6.edges, 2):
            if set(e1) & set(e2):
                continue
            pts = intersection_points(base.edge_polylines[e1], base.edge_polylines[e2])
            if not pts:
                continue
            x, _ = pts[0]
            rest = [v for v in D6.vertices if v not in e1 + e2]
            e3 = tuple(rest[:2])
            # push along the line from the chord's midpoint through x, which
            # separates the ends of e3, so the bend sweeps across x
            u, w = base.vertex_points[e3[0]], base.vertex_points[e3[1]]
            dx, dy = x.x - Fraction(u.x + w.x, 2), x.y - Fraction(u.y + w.y, 2)
            eps = Fraction(1, 10 ** 6)
            b0 = {e3: [point(x.x - eps * dx, x.y - eps * dy)]}
            b1 = {e3: [point(x.x + eps * dx, x.y + eps * dy)]}
            d0 = make_drawing(D6, base.vertex_points, b0)
            d1 = make_drawing(D6, base.vertex_points, b1)
            if not (d0.gp.ok and d1.gp.ok):
                continue
            diff = r_fold_intersection_cocycle(d1, 3) - r_fold_intersection_cocycle(d0, 3)
            g = [0] * len(idx)
            for row, v in cols[tuple(sorted((e1, e2, e3)))].items():
                g[row] = v
            assert diff.values in (tuple(g), tuple(-v for v in g))
            assert any(g)
            checked += 1
            break
        if checked >= 4:
            break
    assert checked >= 4


def test_convex_k5_cocycle_is_not_a_coboundary():
    nu = intersection_cocycle_mod2(canonical_convex_drawing(K5))
    res = in_coboundary_span_gf2(nu, K5)
    assert not res
    cert = set(res.certificate)
    assert sum(nu[e] for e in cert) % 2 == 1
    for a, e in vertex_edge_pairs(K5):
        delta = elementary_coboundary(K5, a, e, "graph-mod2")
        assert sum(delta[c] for c in cert) % 2 == 0


def test_convex_k4_cocycle_is_a_coboundary():
    nu = intersection_cocycle_mod2(canonical_convex_drawing(K4))
    res = in_coboundary_span_gf2(nu, K4)
    assert res
    assert combine(K4, res.terms, nu).values == nu.values


@pytest.mark.parametrize("host", [K5, complete_graph(6), D4])
def test_random_drawings_are_cohomologous(host):
    for seed in range(8):
        d1 = random_general_position_drawing(host, 2 * seed, 1)
        d2 = random_general_position_drawing(host, 2 * seed + 1, 1)
        assert cochain_difference_in_span(d1, d2, GF2)
        if seed < 3:
            res = cochain_difference_in_span(d1, d2, Z)
            assert res
            nu = integral_intersection_cocycle(d1) - integral_intersection_cocycle(d2)
            assert combine(host, res.terms, nu).values == nu.values


@pytest.mark.parametrize("host", [K5, D3])
def test_doubled_cocycle_is_trivial_but_cocycle_is_not(host):
    nu = integral_intersection_cocycle(random_general_position_drawing(host, 4, 1))
    assert in_coboundary_span_int(nu.scale(2), host)
    assert not in_coboundary_span_int(nu, host)
    assert not in_coboundary_span_gf2(nu.mod2(), host)


def test_r3_cocycles_of_the_5_simplex_skeleton_are_decided():
    # Recorded finding: with these generators the r = 3 span is everything,
    # so the cocycle of any drawing is decided trivial.
    nu = r_fold_intersection_cocycle(random_general_position_drawing(D6, 1), 3)
    res = in_coboundary_span_int(nu, D6)
    assert res
    assert combine(D6, res.terms, nu).values == nu.values


def test_r_fold_elementary_coboundary_matches_columns():
    c = r_fold_elementary_coboundary(D6, 3, [(1,), (2, 3), (4, 5, 6)])
    assert c.weight() > 0 and c.ring == Z


def test_host_mismatch():
    with pytest.raises(HostMismatch):
        cochain_difference_in_span(random_general_position_drawing(K4, 1), random_general_position_drawing(K5, 1))
