"""Elementary coboundaries and decision procedures for cohomologous cochains.

Two cochains are cohomologous when their difference is a sum (with integer
coefficients, or over GF(2)) of elementary coboundaries.  Membership is decided
by GF(2) elimination or by exact integer lattice reduction.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Tuple

from .combinatorics import Cell, CellPairIndex, Hypergraph2, incidence_sign, pair_index
from .drawings import (GF2, Z, Cochain, Drawing, integral_intersection_cocycle,
                       intersection_cocycle_mod2, r_fold_intersection_cocycle)
from .errors import HostMismatch, Incidence, IndexMismatch
from .linalg import IntegerLattice, gf2_solve_rows

FLAVORS = ("graph-mod2", "graph-skew", "hyper-mod2", "hyper-supersym", "hyper-r-supersym")

_FLAVOR_KIND = {
    "graph-mod2": "graph-Kstar",
    "graph-skew": "graph-Ktilde",
    "hyper-mod2": "hyper-Kstar",
    "hyper-supersym": "hyper-Ktilde",
}


def _oriented(cell, orientations):
    if orientations and cell in orientations:
        return tuple(orientations[cell])
    return cell


def _sign(oriented_cell, sub, orientations) -> int:
    """[R : R'] with R' = ``sub`` in its own orientation; [X : X] = 1."""
    if tuple(sorted(oriented_cell)) == tuple(sorted(sub)):
        return 1
    return incidence_sign(oriented_cell, _oriented(sub, orientations))


def vertex_edge_pairs(host) -> List[Tuple[int, Cell]]:
    """Variables of the elementary coboundaries: vertex A and edge e with A not in e."""
    return [(a, e) for a in host.vertices for e in host.edges if a not in e]


def elementary_coboundary(host, a: int, sigma, flavor: str,
                          orientations: Optional[Mapping] = None) -> Cochain:
    """The elementary coboundary of the pair (vertex ``a``, edge ``sigma``)."""
    sigma = tuple(sorted(sigma))
    if a in sigma:
        raise Incidence(f"vertex {a} is an end of {sigma}")
    if sigma not in host.edges:
        raise Incidence(f"{sigma} is not an edge")
    if flavor not in _FLAVOR_KIND:
        raise ValueError(f"unknown flavor {flavor!r}")
    index = pair_index(host, _FLAVOR_KIND[flavor])
    A = (a,)
    vals = []
    if flavor in ("graph-mod2", "hyper-mod2"):
        for r1, r2 in index:
            hit = (a in r1 and set(sigma) <= set(r2)) or (a in r2 and set(sigma) <= set(r1))
            vals.append(int(hit))
        return Cochain(index, tuple(vals), GF2)
    for r1, r2 in index:
        o1 = _oriented(r1, orientations)
        o2 = _oriented(r2, orientations)
        if len(r1) == 2:
            # edge pair: -[t:A] on (sigma, t), [t:A] on (t, sigma)
            if r1 == sigma:
                vals.append(-incidence_sign(o2, A))
            elif r2 == sigma:
                vals.append(incidence_sign(o1, A))
            else:
                vals.append(0)
        else:
            v, f = (r1, o2) if len(r1) == 1 else (r2, o1)
            vals.append(incidence_sign(f, _oriented(sigma, orientations)) if v == A else 0)
    return Cochain(index, tuple(vals), Z)


def supersymmetric_formula(host, a: int, sigma, orientations: Optional[Mapping] = None) -> Cochain:
    """[R1:A][R2:s] + (-1)^((|R1|-1)(|R2|-1)) [R2:A][R1:s], with [X:X] = 1."""
    sigma = tuple(sorted(sigma))
    index = pair_index(host, "hyper-Ktilde" if isinstance(host, Hypergraph2) else "graph-Ktilde")
    A = (a,)
    vals = []
    for r1, r2 in index:
        o1 = _oriented(r1, orientations)
        o2 = _oriented(r2, orientations)
        sgn = -1 if ((len(r1) - 1) * (len(r2) - 1)) % 2 else 1
        vals.append(_sign(o1, A, orientations) * _sign(o2, sigma, orientations)
                    + sgn * _sign(o2, A, orientations) * _sign(o1, sigma, orientations))
    return Cochain(index, tuple(vals), Z)


# ---------------------------------------------------------------------------
# r-fold super-symmetric coboundaries

def _dim(cell) -> int:
    return len(cell) - 1


def _cell_key(c):
    return (len(c), c)


def _koszul_to_canonical(cells) -> Tuple[Tuple[Cell, ...], int]:
    """Sort the cells canonically; the sign is that of the induced permutation
    of the odd-dimensional (edge) cells."""
    canon = tuple(sorted(cells, key=_cell_key))
    odd = [c for c in cells if _dim(c) % 2]
    inv = sum(1 for i, j in itertools.combinations(range(len(odd)), 2) if odd[i] > odd[j])
    return canon, -1 if inv % 2 else 1


def _facets(cell):
    if len(cell) == 1:
        return []
    return [tuple(x for x in cell if x != v) for v in cell]


def supersymmetric_coboundaries(host, r: int = 2, orientations: Optional[Mapping] = None,
                                index: Optional[CellPairIndex] = None, geometric: bool = True
                                ) -> Tuple[CellPairIndex, Dict[Tuple[Cell, ...], Dict[int, int]]]:
    """All elementary super-symmetric coboundaries on ordered r-tuples.

    Each generator is labelled by an unordered tuple of disjoint cells of total
    dimension 2r - 3 (canonically sorted) and equals the symmetrized product
    coboundary of that cell, summed over its orderings with the Koszul sign.
    For r = 2 this is exactly :func:`supersymmetric_formula`.

    The intersection cocycle carries an extra minus sign on tuples containing
    a vertex.  With ``geometric=True`` (the default) the generators carry the
    same sign, so they are the changes actually produced by moving an edge
    across a vertex, and span membership is meaningful for cocycles.

    Returned as sparse columns ``label -> {row: value}``.
    """
    if index is None:
        index = pair_index(host, "hyper-Kunderline", r)
    cols: Dict[Tuple[Cell, ...], Dict[int, int]] = {}
    for row, entry in enumerate(index):
        shift = 0
        flip = geometric and any(len(c) == 1 for c in entry)
        for i, ri in enumerate(entry):
            oi = _oriented(ri, orientations)
            for c in _facets(ri):
                coef = incidence_sign(oi, _oriented(c, orientations))
                if not coef:
                    continue
                if shift % 2 != flip:
                    coef = -coef
                label, kappa = _koszul_to_canonical(entry[:i] + (c,) + entry[i + 1:])
                col = cols.setdefault(label, {})
                w = col.get(row, 0) + kappa * coef
                if w:
                    col[row] = w
                else:
                    col.pop(row, None)
            shift += _dim(ri)
    return index, {k: v for k, v in sorted(cols.items()) if v}


def r_fold_elementary_coboundary(host, r: int, cells, orientations: Optional[Mapping] = None,
                                 geometric: bool = True) -> Cochain:
    """The super-symmetric coboundary labelled by the unordered tuple ``cells``."""
    label = tuple(sorted((tuple(sorted(c)) for c in cells), key=_cell_key))
    index, cols = supersymmetric_coboundaries(host, r, orientations, geometric=geometric)
    col = cols.get(label, {})
    vals = [0] * len(index)
    for row, v in col.items():
        vals[row] = v
    return Cochain(index, tuple(vals), Z)


# ---------------------------------------------------------------------------
# span membership

@dataclass(frozen=True)
class SpanResult:
    """Outcome of a span membership query.

    ``terms`` lists ``(label, coefficient)`` when the cochain is a combination
    of elementary coboundaries.  For a negative GF(2) answer ``certificate``
    lists index entries on which every coboundary has even support while the
    cochain has odd total.
    """

    member: bool
    terms: Optional[Tuple[Tuple[object, int], ...]] = None
    certificate: Optional[Tuple[Tuple[Cell, ...], ...]] = None

    def __bool__(self):
        return self.member


def _mod2_columns(host, nu: Cochain, orientations):
    kind = nu.index.kind
    if kind in ("graph-Kstar", "hyper-Kstar"):
        flavor = "graph-mod2" if kind == "graph-Kstar" else "hyper-mod2"
        labels = vertex_edge_pairs(host)
        cols = []
        for a, e in labels:
            cob = elementary_coboundary(host, a, e, flavor)
            cols.append({i: 1 for i, v in enumerate(cob.values) if v})
        return labels, cols
    labels, cols = _int_columns(host, nu, orientations)
    return labels, [{i: v & 1 for i, v in c.items() if v & 1} for c in cols]


def _int_columns(host, nu: Cochain, orientations):
    kind = nu.index.kind
    r = nu.index.r if kind == "hyper-Kunderline" else 2
    index = pair_index(host, kind, r)
    if index.entries != nu.index.entries:
        raise IndexMismatch("cochain is not indexed by the host's index set")
    if kind in ("graph-Kstar", "hyper-Kstar"):
        raise IndexMismatch("integral coboundaries live on ordered index sets")
    _, cols = supersymmetric_coboundaries(host, r, orientations, index)
    labels = list(cols)
    return labels, [cols[k] for k in labels]


def _pretty_label(label):
    # the r = 2 label (vertex, edge) is reported as (A, sigma)
    if isinstance(label[0], int):
        return label
    if len(label) == 2 and len(label[0]) == 1 and len(label[1]) == 2:
        return (label[0][0], label[1])
    return label


def in_coboundary_span_gf2(nu: Cochain, host, orientations: Optional[Mapping] = None) -> SpanResult:
    """Decide whether ``nu`` (mod 2) is a sum of elementary coboundaries."""
    expected = pair_index(host, nu.index.kind, nu.index.r)
    if expected.entries != nu.index.entries:
        raise IndexMismatch("cochain is not indexed by the host's index set")
    labels, cols = _mod2_columns(host, nu, orientations)
    rows = [0] * len(nu.index)
    for j, col in enumerate(cols):
        for i in col:
            rows[i] |= 1 << j
    rhs = [v & 1 for v in nu.values]
    res = gf2_solve_rows(rows, rhs)
    if res.solvable:
        terms = tuple((_pretty_label(labels[j]), 1) for j in res.assignment())
        return SpanResult(True, terms)
    cert = tuple(nu.index.entries[i] for i in res.certificate)
    return SpanResult(False, certificate=cert)


def in_coboundary_span_int(nu: Cochain, host, orientations: Optional[Mapping] = None) -> SpanResult:
    """Decide integer span membership by exact lattice reduction.

    The flavor follows the index set: skew-symmetric for ordered edge pairs of
    a graph, super-symmetric for 2-hypergraphs and for r-tuples.
    """
    if nu.ring != Z:
        raise IndexMismatch("integral span needs an integer cochain")
    labels, cols = _int_columns(host, nu, orientations)
    lat = IntegerLattice()
    for col in cols:
        lat.add(col)
    coeffs = lat.express({i: v for i, v in enumerate(nu.values) if v})
    if coeffs is None:
        return SpanResult(False)
    terms = tuple((_pretty_label(labels[g]), k) for g, k in sorted(coeffs.items()) if k)
    return SpanResult(True, terms)


def combine(host, terms, template: Cochain, orientations: Optional[Mapping] = None) -> Cochain:
    """Evaluate a linear combination of coboundaries on ``template``'s index set."""
    out = Cochain.zero(template.index, template.ring)
    if not terms:
        return out
    kind = template.index.kind
    if kind in ("graph-Kstar", "hyper-Kstar"):
        flavor = "graph-mod2" if kind == "graph-Kstar" else "hyper-mod2"
        for (a, e), k in terms:
            out = out + elementary_coboundary(host, a, e, flavor).scale(k)
        return out
    _, cols = supersymmetric_coboundaries(host, template.index.r, orientations, template.index)
    vals = [0] * len(template.index)
    for label, k in terms:
        if len(label) == 2 and isinstance(label[0], int):
            label = ((label[0],), tuple(label[1]))
        for row, v in cols[label].items():
            vals[row] += k * v
    return Cochain(template.index, tuple(vals), template.ring)


def cochain_difference_in_span(d1: Drawing, d2: Drawing, ring: str = GF2, r: int = 2,
                               orientations: Optional[Mapping] = None) -> SpanResult:
    """Decide whether the cocycles of two drawings of one host are cohomologous."""
    if d1.host != d2.host:
        raise HostMismatch("drawings have different hosts")
    host = d1.host
    if r > 2:
        nu = (r_fold_intersection_cocycle(d1, r, orientations)
              - r_fold_intersection_cocycle(d2, r, orientations))
        if ring == GF2:
            return in_coboundary_span_gf2(nu.mod2(), host, orientations)
        return in_coboundary_span_int(nu, host, orientations)
    if ring == GF2:
        nu = intersection_cocycle_mod2(d1) - intersection_cocycle_mod2(d2)
        return in_coboundary_span_gf2(nu, host)
    nu = (integral_intersection_cocycle(d1, orientations)
          - integral_intersection_cocycle(d2, orientations))
    return in_coboundary_span_int(nu, host, orientations)


def parity(nu: Cochain) -> int:
    """Number of ones of a GF(2) cochain, mod 2."""
    return sum(nu.values) & 1


__all__ = [
    "FLAVORS", "SpanResult", "vertex_edge_pairs", "elementary_coboundary",
    "supersymmetric_formula", "supersymmetric_coboundaries", "r_fold_elementary_coboundary",
    "in_coboundary_span_gf2", "in_coboundary_span_int", "combine",
    "cochain_difference_in_span", "parity",
]
