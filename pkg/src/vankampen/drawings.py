"""Piecewise-linear drawings and the invariants computed from them."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Dict, Mapping, Optional, Sequence, Tuple

from .combinatorics import Cell, CellPairIndex, Graph, Hypergraph2, pair_index
from .errors import BadProfile, BadSize, Degenerate, Exhausted, IndexMismatch, OnCurve
from .geometry import (GeneralPositionCertificate, Point, Polyline, as_point,
                       algebraic_intersection_number, crossing_count, general_position,
                       intersection_points, point, reflect, winding_number)

GF2 = "GF2"
Z = "Z"


# ---------------------------------------------------------------------------
# cochains

@dataclass(frozen=True)
class Cochain:
    """A function from an index set of disjoint cell tuples to GF(2) or Z.

    ``values`` is aligned with ``index.entries``.
    """

    index: CellPairIndex
    values: Tuple[int, ...]
    ring: str = Z

    def __post_init__(self):
        if self.ring not in (GF2, Z):
            raise ValueError(f"unknown ring {self.ring!r}")
        vals = tuple(int(v) for v in self.values)
        if len(vals) != len(self.index):
            raise IndexMismatch("value vector does not match the index set")
        if self.ring == GF2:
            vals = tuple(v & 1 for v in vals)
        object.__setattr__(self, "values", vals)

    @classmethod
    def zero(cls, index: CellPairIndex, ring: str = Z) -> "Cochain":
        return cls(index, (0,) * len(index), ring)

    @classmethod
    def from_dict(cls, index: CellPairIndex, mapping: Mapping, ring: str = Z) -> "Cochain":
        vals = [0] * len(index)
        for entry, v in mapping.items():
            key = index.normalize(entry)
            if key not in index.position:
                raise IndexMismatch(f"{entry} is not in the index set")
            vals[index.position[key]] += int(v)
        return cls(index, tuple(vals), ring)

    def __getitem__(self, entry) -> int:
        key = self.index.normalize(entry)
        try:
            return self.values[self.index.position[key]]
        except KeyError:
            raise IndexMismatch(f"{entry} is not in the index set") from None

    def items(self):
        return zip(self.index.entries, self.values)

    def support(self):
        return [e for e, v in self.items() if v]

    def as_dict(self) -> Dict:
        return dict(self.items())

    def _check(self, other):
        if self.index.entries != other.index.entries or self.ring != other.ring:
            raise IndexMismatch("cochains live on different index sets")

    def __add__(self, other):
        self._check(other)
        return Cochain(self.index, tuple(a + b for a, b in zip(self.values, other.values)), self.ring)

    def __sub__(self, other):
        self._check(other)
        return Cochain(self.index, tuple(a - b for a, b in zip(self.values, other.values)), self.ring)

    def __neg__(self):
        return Cochain(self.index, tuple(-a for a in self.values), self.ring)

    def scale(self, k: int) -> "Cochain":
        return Cochain(self.index, tuple(k * a for a in self.values), self.ring)

    def mod2(self) -> "Cochain":
        return Cochain(self.index, self.values, GF2)

    def weight(self) -> int:
        return sum(1 for v in self.values if v)


# ---------------------------------------------------------------------------
# drawings

def _default_orientation(cell, orientations):
    if orientations and cell in orientations:
        o = tuple(orientations[cell])
        if sorted(o) != list(cell):
            raise ValueError(f"orientation {o} does not match cell {cell}")
        return o
    return cell


@dataclass(frozen=True, eq=False)
class Drawing:
    """A PL drawing of a graph, or of the 1-skeleton of a 2-hypergraph.

    ``edge_polylines[(a, b)]`` with ``a < b`` runs from ``f(a)`` to ``f(b)``.
    """

    host: object
    vertex_points: Dict[int, Point]
    edge_polylines: Dict[Cell, Polyline]
    gp: Optional[GeneralPositionCertificate] = None

    def __post_init__(self):
        vp = {v: as_point(p) for v, p in self.vertex_points.items()}
        if set(vp) != set(self.host.vertices):
            raise ValueError("vertex points do not cover the host's vertices")
        object.__setattr__(self, "vertex_points", vp)
        polys = {}
        for e, pl in self.edge_polylines.items():
            e = tuple(sorted(e))
            if not isinstance(pl, Polyline):
                pl = Polyline(tuple(pl))
            if pl.closed:
                raise ValueError(f"edge {e} drawn as a closed curve")
            if pl.start != vp[e[0]] or pl.end != vp[e[1]]:
                if pl.start == vp[e[1]] and pl.end == vp[e[0]]:
                    pl = pl.reversed()
                else:
                    raise ValueError(f"edge {e} endpoints do not match its vertices")
            polys[e] = pl
        if set(polys) != set(self.host.edges):
            raise ValueError("edge polylines do not match the host's edges")
        object.__setattr__(self, "edge_polylines", polys)
        if self.gp is None:
            object.__setattr__(self, "gp", general_position(self.all_points()))

    def all_points(self):
        pts = [self.vertex_points[v] for v in sorted(self.vertex_points)]
        for e in sorted(self.edge_polylines):
            pts.extend(self.edge_polylines[e].vertices[1:-1])
        return pts

    def bends(self, e) -> Tuple[Point, ...]:
        return self.edge_polylines[tuple(sorted(e))].vertices[1:-1]

    def require_gp(self):
        if not self.gp.ok:
            raise Degenerate("drawing is not in general position", self.gp.violation)

    def edge_image(self, oriented_edge) -> Polyline:
        a, b = oriented_edge
        pl = self.edge_polylines[tuple(sorted((a, b)))]
        return pl if a < b else pl.reversed()

    def cycle_image(self, oriented_cycle) -> Polyline:
        """Closed polyline traversing the edges of a vertex cycle in the given order."""
        verts = []
        cyc = tuple(oriented_cycle)
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            verts.extend(self.edge_image((a, b)).vertices[:-1])
        return Polyline(tuple(verts), closed=True)

    def reflected(self) -> "Drawing":
        """Mirror image; reverses every crossing sign and winding number."""
        return Drawing(self.host,
                       {v: reflect(p) for v, p in self.vertex_points.items()},
                       {e: pl.reflected() for e, pl in self.edge_polylines.items()})


def make_drawing(host, vertex_points, bends: Optional[Mapping] = None) -> Drawing:
    """Build a drawing from vertex positions and optional interior bend points.

    ``vertex_points`` is a mapping or a sequence indexed by ``v - 1``.  Bends of
    edge ``(a, b)`` are listed in the direction from the smaller vertex.
    """
    if not isinstance(vertex_points, Mapping):
        vertex_points = {i + 1: p for i, p in enumerate(vertex_points)}
    vp = {v: as_point(p) for v, p in vertex_points.items()}
    bends = {tuple(sorted(e)): b for e, b in (bends or {}).items()}
    polys = {}
    for e in host.edges:
        mids = tuple(as_point(p) for p in bends.get(e, ()))
        polys[e] = Polyline((vp[e[0]],) + mids + (vp[e[1]],))
    return Drawing(host, vp, polys)


def random_general_position_drawing(k, seed, bends_per_edge: int = 0, grid: int = 1 << 16,
                                    max_tries: int = 100) -> Drawing:
    """Seeded random drawing on the integer grid ``[0, grid]^2``.

    Bends are placed at increasing parameters along the chord between the edge's
    endpoints and displaced by up to ``grid / 4`` in each coordinate.  The whole
    drawing is resampled until it is in general position.
    """
    if not 0 <= bends_per_edge <= 3:
        raise ValueError("bends_per_edge must be between 0 and 3")
    rng = random.Random(seed)
    spread = grid // 4
    for _ in range(max_tries):
        vp = {v: point(rng.randint(0, grid), rng.randint(0, grid)) for v in k.vertices}
        bends = {}
        for a, b in k.edges:
            p, q = vp[a], vp[b]
            ts = sorted(rng.random() for _ in range(bends_per_edge))
            mids = []
            for t in ts:
                x = round(p.x + t * (q.x - p.x)) + rng.randint(-spread, spread)
                y = round(p.y + t * (q.y - p.y)) + rng.randint(-spread, spread)
                mids.append(point(min(max(x, 0), grid), min(max(y, 0), grid)))
            bends[(a, b)] = mids
        try:
            d = make_drawing(k, vp, bends)
        except ValueError:
            continue  # repeated consecutive vertex
        if d.gp.ok:
            return d
    raise Exhausted(f"no general-position drawing after {max_tries} attempts")


def canonical_convex_drawing(k, ordering: Optional[Sequence[int]] = None) -> Drawing:
    """Straight-line drawing with the vertices on the parabola y = x^2, in the
    given order (``ordering[i]`` is the i-th vertex along the curve)."""
    order = list(ordering) if ordering is not None else list(k.vertices)
    if sorted(order) != list(k.vertices):
        raise ValueError("ordering must be a permutation of the vertices")
    n = len(order)
    xs = list(range(n))
    rng = random.Random(0)
    for _ in range(1000):
        d = make_drawing(k, {v: point(x, x * x) for v, x in zip(order, xs)})
        if d.gp.ok:
            return d
        xs = sorted(rng.sample(range(8 * n * n), n))
    raise Exhausted("could not place vertices in general position")


# ---------------------------------------------------------------------------
# cocycles

def _index_kind(host, ordered: bool) -> str:
    if isinstance(host, Hypergraph2):
        return "hyper-Ktilde" if ordered else "hyper-Kstar"
    return "graph-Ktilde" if ordered else "graph-Kstar"


def _winding(curve: Polyline, p) -> int:
    try:
        return winding_number(curve, p)
    except OnCurve as exc:
        raise Degenerate(str(exc), p) from None


def intersection_cocycle_mod2(d: Drawing) -> Cochain:
    """Crossing parities of disjoint edge pairs; for 2-hypergraphs also the
    parity of each vertex inside each disjoint face's boundary image."""
    d.require_gp()
    index = pair_index(d.host, _index_kind(d.host, False))
    vals = []
    for s, t in index:
        if len(s) == 2:
            vals.append(crossing_count(d.edge_polylines[s], d.edge_polylines[t]) & 1)
        else:
            vals.append(_winding(d.cycle_image(t), d.vertex_points[s[0]]) & 1)
    return Cochain(index, tuple(vals), GF2)


def integral_intersection_cocycle(d: Drawing, orientations: Optional[Mapping] = None) -> Cochain:
    """Signed cocycle on ordered pairs: ``f(s) . f(t)`` for edge pairs and
    ``-wind(f(dR), f(A))`` on both ``(A, R)`` and ``(R, A)``."""
    d.require_gp()
    index = pair_index(d.host, _index_kind(d.host, True))
    vals = []
    for s, t in index:
        if len(s) == 2 and len(t) == 2:
            p = d.edge_image(_default_orientation(s, orientations))
            q = d.edge_image(_default_orientation(t, orientations))
            vals.append(algebraic_intersection_number(p, q))
        else:
            v, f = (s, t) if len(s) == 1 else (t, s)
            curve = d.cycle_image(_default_orientation(f, orientations))
            vals.append(-_winding(curve, d.vertex_points[v[0]]))
    return Cochain(index, tuple(vals), Z)


def van_kampen_number(d: Drawing) -> int:
    """Parity of the total number of crossings between non-adjacent edges."""
    d.require_gp()
    total = 0
    for s, t in pair_index(d.host, "graph-Kstar"):
        total += crossing_count(d.edge_polylines[s], d.edge_polylines[t])
    return total & 1


def radon_terms(d: Drawing) -> Tuple[int, int]:
    """(crossing parity of opposite edges, number of vertices inside the
    mod-2 interior of the opposite triangle) for a drawing of K4."""
    d.require_gp()
    if list(d.host.vertices) != [1, 2, 3, 4] or len(d.host.edges) != 6:
        raise BadSize("radon number needs a drawing of K4")
    cross = 0
    for s, t in pair_index(Graph(4, d.host.edges), "graph-Kstar"):
        cross += crossing_count(d.edge_polylines[s], d.edge_polylines[t])
    inside = 0
    for v in range(1, 5):
        tri = tuple(u for u in range(1, 5) if u != v)
        inside += _winding(d.cycle_image(tri), d.vertex_points[v]) & 1
    return cross & 1, inside


def radon_number(d: Drawing) -> int:
    cross, inside = radon_terms(d)
    return (cross + inside) & 1


# ---------------------------------------------------------------------------
# r-fold intersection numbers

def _shape(obj):
    if isinstance(obj, Polyline):
        return "closed" if obj.closed else "open"
    return "point"


def r_fold_intersection_number(objects: Sequence) -> int:
    """Signed r-fold intersection of points, open and closed polylines.

    Two open curves ``P_i, P_j`` (i < j) and closed curves otherwise: sum over
    crossings X of ``P_i`` and ``P_j`` of ``sgn X`` times the winding numbers of
    the closed curves around X.  One point and closed curves otherwise: the
    product of the winding numbers around the point.
    """
    shapes = [_shape(o) for o in objects]
    opens = [i for i, s in enumerate(shapes) if s == "open"]
    pts = [i for i, s in enumerate(shapes) if s == "point"]
    closed = [objects[i] for i, s in enumerate(shapes) if s == "closed"]
    if len(opens) == 2 and not pts:
        i, j = opens
        total = 0
        for x, sign in intersection_points(objects[i], objects[j]):
            term = sign
            for c in closed:
                term *= _winding(c, x)
                if not term:
                    break
            total += term
        return total
    if len(pts) == 1 and not opens:
        p = as_point(objects[pts[0]])
        value = 1
        for c in closed:
            value *= _winding(c, p)
            if not value:
                break
        return value
    raise BadProfile(f"profile {shapes} is neither two open curves nor one point")


def r_fold_intersection_cocycle(d: Drawing, r: int, orientations: Optional[Mapping] = None) -> Cochain:
    """Cocycle on ordered r-tuples of disjoint cells: the r-fold intersection
    number for (two edges, faces) tuples and its negative for (vertex, faces)."""
    d.require_gp()
    if r < 2:
        raise ValueError("r must be at least 2")
    index = pair_index(d.host, "hyper-Kunderline", r)
    cycles = {}
    windings = {}
    crossings = {}

    def cycle(f):
        if f not in cycles:
            cycles[f] = d.cycle_image(_default_orientation(f, orientations))
        return cycles[f]

    def wind(f, p):
        key = (f, p)
        if key not in windings:
            windings[key] = _winding(cycle(f), p)
        return windings[key]

    def cross(e1, e2):
        key = (e1, e2)
        if key not in crossings:
            p = d.edge_image(_default_orientation(e1, orientations))
            q = d.edge_image(_default_orientation(e2, orientations))
            crossings[key] = intersection_points(p, q)
        return crossings[key]

    vals = []
    for entry in index:
        faces = [c for c in entry if len(c) == 3]
        edges = [c for c in entry if len(c) == 2]
        if edges:
            total = 0
            for x, sign in cross(edges[0], edges[1]):
                term = sign
                for f in faces:
                    term *= wind(f, x)
                    if not term:
                        break
                total += term
            vals.append(total)
        else:
            (v,) = [c for c in entry if len(c) == 1]
            p = d.vertex_points[v[0]]
            value = 1
            for f in faces:
                value *= wind(f, p)
                if not value:
                    break
            vals.append(-value)
    return Cochain(index, tuple(vals), Z)


__all__ = [
    "GF2", "Z", "Cochain", "Drawing", "make_drawing", "random_general_position_drawing",
    "canonical_convex_drawing", "intersection_cocycle_mod2", "integral_intersection_cocycle",
    "van_kampen_number", "radon_terms", "radon_number", "r_fold_intersection_number",
    "r_fold_intersection_cocycle",
]
