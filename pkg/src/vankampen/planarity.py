"""Planarity of graphs and 2-hypergraphs by linear algebra over GF(2).

A graph is planar iff some drawing has zero intersection cocycle mod 2, and
the cocycles of all drawings differ by sums of elementary coboundaries.  So
planarity reduces to solving one linear system: the right-hand side is the
cocycle of a convenient drawing (vertices in convex position), the columns are
the elementary coboundaries.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from .combinatorics import Cell, CellPairIndex, Graph, Hypergraph2, pair_index
from .cohomology import vertex_edge_pairs
from .drawings import canonical_convex_drawing, intersection_cocycle_mod2
from .linalg import Gf2Result, gf2_solve_rows


@dataclass(frozen=True)
class GF2System:
    """Rows are indexed by ``index`` entries, columns by ``variables``.

    ``matrix[i]`` is a bit mask over columns; ``rhs[i]`` is 0 or 1.
    """

    variables: Tuple[Tuple[int, Cell], ...]
    index: CellPairIndex
    matrix: Tuple[int, ...]
    rhs: Tuple[int, ...]

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.matrix), len(self.variables)

    def column(self, j: int) -> Tuple[int, ...]:
        return tuple((row >> j) & 1 for row in self.matrix)


@dataclass(frozen=True)
class PlanarityVerdict:
    """``witness`` is the set of variables equal to 1 in a solution;
    ``certificate`` the index entries whose equations sum to 0 = 1."""

    planar: bool
    witness: Optional[Tuple[Tuple[int, Cell], ...]] = None
    certificate: Optional[Tuple[Tuple[Cell, ...], ...]] = None

    def __bool__(self):
        return self.planar


def _coefficients(index, variables, touches):
    rows = []
    for r1, r2 in index:
        mask = 0
        for j, (a, e) in enumerate(variables):
            if touches(a, e, r1, r2):
                mask |= 1 << j
        rows.append(mask)
    return tuple(rows)


def _graph_rule(a, e, s, t):
    return (a in s and e == t) or (a in t and e == s)


def _hyper_rule(a, e, r1, r2):
    return (a in r1 and set(e) <= set(r2)) or (a in r2 and set(e) <= set(r1))


def build_ht_system(g: Graph, ordering: Optional[Sequence[int]] = None) -> GF2System:
    """Linear system whose solvability is equivalent to planarity of ``g``."""
    index = pair_index(g, "graph-Kstar")
    variables = tuple(vertex_edge_pairs(g))
    matrix = _coefficients(index, variables, _graph_rule)
    rhs = intersection_cocycle_mod2(canonical_convex_drawing(g, ordering)).values
    return GF2System(variables, index, matrix, tuple(rhs))


def convex_rhs(g: Graph, ordering: Optional[Sequence[int]] = None) -> Tuple[int, ...]:
    """Right-hand side from endpoint interleaving along the convex order:
    the number of ends of one edge strictly between the ends of the other, mod 2."""
    order = list(ordering) if ordering is not None else list(g.vertices)
    pos = {v: i for i, v in enumerate(order)}
    out = []
    for s, t in pair_index(g, "graph-Kstar"):
        lo, hi = sorted((pos[t[0]], pos[t[1]]))
        out.append(sum(1 for v in s if lo < pos[v] < hi) & 1)
    return tuple(out)


def build_ht_system_hyper(k: Hypergraph2, ordering: Optional[Sequence[int]] = None) -> GF2System:
    """The 2-hypergraph system: one equation per unordered disjoint pair of
    cells with four vertices in total."""
    index = pair_index(k, "hyper-Kstar")
    variables = tuple(vertex_edge_pairs(k))
    matrix = _coefficients(index, variables, _hyper_rule)
    # convex position: no vertex lies inside a triangle, so the vertex-face
    # entries of this cocycle vanish (extension by zeroes)
    rhs = intersection_cocycle_mod2(canonical_convex_drawing(k, ordering)).values
    return GF2System(variables, index, matrix, tuple(rhs))


def gf2_solve(system: GF2System) -> Gf2Result:
    return gf2_solve_rows(system.matrix, system.rhs)


def _verdict(system: GF2System) -> PlanarityVerdict:
    res = gf2_solve(system)
    if res.solvable:
        return PlanarityVerdict(True, witness=tuple(system.variables[j] for j in res.assignment()))
    return PlanarityVerdict(False, certificate=tuple(system.index.entries[i] for i in res.certificate))


def is_planar(g: Graph, ordering: Optional[Sequence[int]] = None) -> PlanarityVerdict:
    return _verdict(build_ht_system(g, ordering))


def is_planar_hyper(k: Hypergraph2, ordering: Optional[Sequence[int]] = None) -> PlanarityVerdict:
    return _verdict(build_ht_system_hyper(k, ordering))


def check_verdict(system: GF2System, verdict: PlanarityVerdict) -> bool:
    """Independently verify a witness or a certificate against the system."""
    if verdict.planar:
        chosen = set(verdict.witness)
        x = 0
        for j, var in enumerate(system.variables):
            if var in chosen:
                x |= 1 << j
        return all(bin(row & x).count("1") % 2 == b for row, b in zip(system.matrix, system.rhs))
    pos = system.index.position
    acc, b = 0, 0
    for entry in verdict.certificate:
        i = pos[entry]
        acc ^= system.matrix[i]
        b ^= system.rhs[i]
    return acc == 0 and b == 1


__all__ = [
    "GF2System", "PlanarityVerdict", "build_ht_system", "build_ht_system_hyper",
    "convex_rhs", "gf2_solve", "is_planar", "is_planar_hyper", "check_verdict",
]
