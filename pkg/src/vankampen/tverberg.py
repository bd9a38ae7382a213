"""Radon and Tverberg partitions of planar point sets, their topological
analogue for drawings of K7, and the triple van Kampen number.

Convex hulls are kept as tuples of vertices in counterclockwise order; a hull
of one or two points is a point or a segment.  Intersections are computed by
exact clipping, so every reported common point is a rational point.
"""

from __future__ import annotations

import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple

from .combinatorics import (
    Cell, Partition, complete_graph, set_partitions,
    spherical_partitions,
)
from .drawings import Drawing, _winding, random_general_position_drawing, r_fold_intersection_number
from .errors import BadSize, Degenerate, TooLarge
from .geometry import Point, _on_segment, as_point, general_position, intersection_points, orient, point

Hull = Tuple[Point, ...]


# ---------------------------------------------------------------------------
# exact convex hulls

def convex_hull(points) -> Hull:
    """Vertices of the convex hull, counterclockwise from the lowest-leftmost,
    with collinear boundary points dropped."""
    pts = sorted(set(as_point(p) for p in points))
    if len(pts) <= 2:
        return tuple(pts)

    def chain(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and orient(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = chain(pts)
    upper = chain(reversed(pts))
    return tuple(lower[:-1] + upper[:-1])


def hull_contains(hull: Hull, p) -> bool:
    """Closed membership test."""
    p = as_point(p)
    if not hull:
        return False
    if len(hull) == 1:
        return hull[0] == p
    if len(hull) == 2:
        a, b = hull
        return orient(a, b, p) == 0 and _on_segment(a, b, p)
    return all(orient(a, b, p) >= 0 for a, b in zip(hull, hull[1:] + hull[:1]))


def _line_cut(p, q, a, b) -> Point:
    """Point of segment pq on the line ab (p and q on different sides)."""
    sp = (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0])
    sq = (b[0] - a[0]) * (q[1] - a[1]) - (b[1] - a[1]) * (q[0] - a[0])
    t = Fraction(sp) / (sp - sq)
    return point(p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1]))


def _clip(poly: Sequence[Point], a: Point, b: Point) -> List[Point]:
    """Keep the part of ``poly`` in the closed left halfplane of a->b."""
    out = []
    n = len(poly)
    for i in range(n):
        cur, prev = poly[i], poly[i - 1]
        cin = orient(a, b, cur) >= 0
        pin = orient(a, b, prev) >= 0
        if cin:
            if not pin:
                out.append(_line_cut(prev, cur, a, b))
            out.append(cur)
        elif pin:
            out.append(_line_cut(prev, cur, a, b))
    return out


def _small_intersection(c1: Hull, c2: Hull) -> Hull:
    """Intersection of two convex sets of dimension <= 1."""
    if len(c1) > len(c2):
        c1, c2 = c2, c1
    if len(c1) == 1:
        return c1 if hull_contains(c2, c1[0]) else ()
    (a, b), (c, d) = c1, c2
    o1, o2 = orient(a, b, c), orient(a, b, d)
    if o1 == 0 and o2 == 0:
        pts = [p for p in (a, b) if _on_segment(c, d, p)] + [p for p in (c, d) if _on_segment(a, b, p)]
        return convex_hull(pts)
    o3, o4 = orient(c, d, a), orient(c, d, b)
    if o1 * o2 > 0 or o3 * o4 > 0:
        return ()
    if o1 == 0:
        return (c,)
    if o2 == 0:
        return (d,)
    if o3 == 0:
        return (a,)
    if o4 == 0:
        return (b,)
    return (_line_cut(a, b, c, d),)


def intersect_hulls(c1: Hull, c2: Hull) -> Hull:
    if not c1 or not c2:
        return ()
    if len(c2) < 3 and len(c1) >= 3:
        c1, c2 = c2, c1
    if len(c2) < 3:
        return _small_intersection(c1, c2)
    poly = list(c1)
    for a, b in zip(c2, c2[1:] + c2[:1]):
        poly = _clip(poly, a, b)
        if not poly:
            return ()
    return convex_hull(poly)


def common_region(hulls: Sequence[Hull]) -> Hull:
    region = hulls[0]
    for h in hulls[1:]:
        region = intersect_hulls(region, h)
        if not region:
            break
    return region


# ---------------------------------------------------------------------------
# Radon and Tverberg partitions

def _canonical(blocks) -> Partition:
    return Partition(tuple(sorted((frozenset(b) for b in blocks), key=min)))


def radon_partition_4(points: Sequence) -> Partition:
    """The unique partition of four points (labelled 1..4) into two parts
    whose convex hulls meet."""
    pts = [as_point(p) for p in points]
    if len(pts) != 4:
        raise BadSize(f"expected 4 points, got {len(pts)}")
    for i in range(4):
        a, b, c = (pts[j] for j in range(4) if j != i)
        if orient(a, b, c) == 0:
            raise Degenerate("three of the points are collinear", (a, b, c))
    for i in range(4):
        rest = [j for j in range(4) if j != i]
        a, b, c = (pts[j] for j in rest)
        p = pts[i]
        s = orient(a, b, c)
        if orient(a, b, p) == s and orient(b, c, p) == s and orient(c, a, p) == s:
            return _canonical([{j + 1 for j in rest}, {i + 1}])
    for x, y, z, w in ((0, 1, 2, 3), (0, 2, 1, 3), (0, 3, 1, 2)):
        if orient(pts[x], pts[y], pts[z]) != orient(pts[x], pts[y], pts[w]) and \
                orient(pts[z], pts[w], pts[x]) != orient(pts[z], pts[w], pts[y]):
            return _canonical([{x + 1, y + 1}, {z + 1, w + 1}])
    raise AssertionError("four points in general position always have a Radon partition")


@dataclass(frozen=True)
class TverbergWitness:
    """A partition of point labels (1-based) with a point common to all hulls.

    ``region`` is the whole intersection of the hulls; ``common_point`` is its
    lexicographically least vertex.
    """

    partition: Partition
    common_point: Point
    region: Hull = ()

    def check(self, points: Sequence) -> bool:
        pts = [as_point(p) for p in points]
        return all(hull_contains(convex_hull(pts[i - 1] for i in b), self.common_point)
                   for b in self.partition.blocks)


def _witness(pts, blocks) -> Optional[TverbergWitness]:
    hulls = [convex_hull(pts[i - 1] for i in b) for b in blocks]
    region = common_region(hulls)
    if not region:
        return None
    w = TverbergWitness(_canonical(blocks), min(region), region)
    assert all(hull_contains(h, w.common_point) for h in hulls)
    return w


def tverberg_partitions(points: Sequence, r: int) -> List[TverbergWitness]:
    """All unordered partitions into r blocks whose convex hulls share a point.

    Accepts between r and 3r-2 points; with exactly 3r-2 points in the plane the
    list is never empty.
    """
    pts = [as_point(p) for p in points]
    if r < 2:
        raise BadSize("r must be at least 2")
    if r > 4:
        raise TooLarge(f"r = {r} exceeds the enumeration guard r <= 4")
    if not r <= len(pts) <= 3 * r - 2:
        raise BadSize(f"expected between {r} and {3 * r - 2} points, got {len(pts)}")
    out = []
    for blocks in set_partitions(range(1, len(pts) + 1), r):
        w = _witness(pts, blocks)
        if w is not None:
            out.append(w)
    out.sort(key=lambda w: w.partition.cells())
    return out


def spherical_tverberg_witness(points: Sequence, r: int = 3) -> Optional[TverbergWitness]:
    """First spherical ordered partition (in enumeration order) with a common
    hull point.  Empty blocks never qualify."""
    pts = [as_point(p) for p in points]
    if r not in (2, 3):
        raise TooLarge("spherical search is implemented for r = 2 and r = 3")
    if len(pts) != 3 * r - 2:
        raise BadSize(f"expected {3 * r - 2} points, got {len(pts)}")
    for p in spherical_partitions(len(pts), r):
        if any(not b for b in p.blocks):
            continue
        hulls = [convex_hull(pts[i - 1] for i in sorted(b)) for b in p.blocks]
        region = common_region(hulls)
        if region:
            return TverbergWitness(p, min(region), region)
    return None


def regular_polygon(n: int, denominator: int = 10 ** 6) -> List[Point]:
    """Rational approximation of the regular n-gon on the unit circle,
    certified to be in general position."""
    pts = [point(Fraction(round(math.cos(2 * math.pi * k / n) * denominator), denominator),
                 Fraction(round(math.sin(2 * math.pi * k / n) * denominator), denominator))
           for k in range(n)]
    cert = general_position(pts)
    if not cert.ok:
        raise Degenerate("approximation is not in general position", cert.violation)
    return pts


# ---------------------------------------------------------------------------
# topological Tverberg for drawings of K7

@dataclass(frozen=True)
class TopologicalWitness:
    """A numbering of the vertices of K7 realizing one of the two patterns.

    ``labels[i]`` is the original vertex receiving number ``i + 1``.  In the
    vertex pattern the triangles 234 and 567 wind around f(1); in the crossing
    pattern the triangle 567 winds around ``point``, a crossing of f(12) and
    f(34).
    """

    kind: str
    labels: Tuple[int, ...]
    point: Point
    windings: Tuple[int, ...]

    @property
    def partition(self) -> Partition:
        l = self.labels
        if self.kind == "vertex":
            return _canonical([{l[0]}, l[1:4], l[4:7]])
        return _canonical([l[0:2], l[2:4], l[4:7]])


def _triangles(rest):
    first = rest[0]
    others = rest[1:]
    for i in range(len(others)):
        for j in range(i + 1, len(others)):
            t1 = (first, others[i], others[j])
            t2 = tuple(x for x in others if x not in t1)
            yield t1, t2


def topological_tverberg_witness(d: Drawing) -> Optional[TopologicalWitness]:
    """Search the two patterns directly: a vertex with two disjoint triangles
    winding around it, then two disjoint edges with a crossing point around
    which the triangle on the remaining vertices winds."""
    d.require_gp()
    verts = tuple(d.host.vertices)
    if len(verts) != 7 or len(d.host.edges) != 21:
        raise BadSize("expected a drawing of K7")
    cycles: Dict[Cell, object] = {}

    def wind(tri, p):
        if tri not in cycles:
            cycles[tri] = d.cycle_image(tri)
        return _winding(cycles[tri], p)

    for v in verts:
        p = d.vertex_points[v]
        rest = tuple(x for x in verts if x != v)
        for t1, t2 in _triangles(rest):
            w1 = wind(t1, p)
            if not w1:
                continue
            w2 = wind(t2, p)
            if w2:
                return TopologicalWitness("vertex", (v,) + t1 + t2, p, (w1, w2))
    edges = sorted(d.host.edges)
    for i, e1 in enumerate(edges):
        for e2 in edges[i + 1:]:
            if set(e1) & set(e2):
                continue
            tri = tuple(x for x in verts if x not in e1 and x not in e2)
            for x, _ in intersection_points(d.edge_polylines[e1], d.edge_polylines[e2]):
                w = wind(tri, x)
                if w:
                    return TopologicalWitness("crossing", e1 + e2 + tri, x, (w,))
    return None


def check_topological_witness(d: Drawing, w: TopologicalWitness) -> bool:
    l = w.labels
    if sorted(l) != sorted(d.host.vertices):
        return False
    if w.kind == "vertex":
        p = d.vertex_points[l[0]]
        return p == w.point and all(_winding(d.cycle_image(t), p) for t in (l[1:4], l[4:7]))
    pts = [x for x, _ in intersection_points(d.edge_image(l[0:2]), d.edge_image(l[2:4]))]
    return w.point in pts and _winding(d.cycle_image(l[4:7]), w.point) != 0


# ---------------------------------------------------------------------------
# sign maps and the triple van Kampen number

@lru_cache(maxsize=None)
def sign_domain() -> Tuple[Partition, ...]:
    """Spherical partitions (T1, T2, T3) of [7] with 7 in T3."""
    return tuple(p for p in spherical_partitions(7, 3) if 7 in p.blocks[2])


def _key(p: Partition) -> Tuple[Cell, ...]:
    return p.cells()


@dataclass(frozen=True)
class SignMap:
    """A sign for every partition of the domain; keys are ``Partition.cells()``."""

    values: Mapping[Tuple[Cell, ...], int]

    def __post_init__(self):
        vals = {tuple(tuple(c) for c in k): int(v) for k, v in self.values.items()}
        expected = {_key(p) for p in sign_domain()}
        if set(vals) != expected:
            missing = expected - set(vals)
            extra = set(vals) - expected
            raise ValueError(f"sign map domain mismatch: {len(missing)} missing, {len(extra)} extra")
        if any(v not in (1, -1) for v in vals.values()):
            raise ValueError("signs must be +1 or -1")
        object.__setattr__(self, "values", vals)

    def __getitem__(self, p) -> int:
        return self.values[_key(p) if isinstance(p, Partition) else p]

    def __eq__(self, other):
        return isinstance(other, SignMap) and self.values == other.values

    def __hash__(self):
        return hash(tuple(sorted(self.values.items())))

    @classmethod
    def constant(cls, sign: int = 1) -> "SignMap":
        return cls({_key(p): sign for p in sign_domain()})

    @classmethod
    def from_function(cls, fn: Callable[[Partition], int]) -> "SignMap":
        return cls({_key(p): fn(p) for p in sign_domain()})

    def flipped(self) -> "SignMap":
        return SignMap({k: -v for k, v in self.values.items()})

    def items(self):
        """(partition, sign) pairs in domain order."""
        return [(p, self.values[_key(p)]) for p in sign_domain()]


def _block_image(d: Drawing, block: Cell):
    if len(block) == 1:
        return d.vertex_points[block[0]]
    if len(block) == 2:
        return d.edge_image(block)
    return d.cycle_image(block)


_PROFILES = {(1, 3, 3), (2, 2, 3)}


def triple_terms(d: Drawing) -> Tuple[int, ...]:
    """The triple intersection number f(T1).f(T2).f(T3) for every domain
    partition, in domain order.  Partitions whose block sizes are neither
    {1,3,3} nor {2,2,3} have no such number and contribute 0."""
    d.require_gp()
    out = []
    for p in sign_domain():
        cells = p.cells()
        if tuple(sorted(map(len, cells))) not in _PROFILES:
            out.append(0)
            continue
        out.append(r_fold_intersection_number([_block_image(d, c) for c in cells]))
    return tuple(out)


def triple_vk_sum(d: Drawing, s: SignMap, terms: Optional[Sequence[int]] = None) -> int:
    terms = triple_terms(d) if terms is None else terms
    return sum(sign * t for (_, sign), t in zip(s.items(), terms))


def triple_vk_number(d: Drawing, s: SignMap) -> int:
    """The signed sum of triple intersection numbers, reduced mod 3."""
    return triple_vk_sum(d, s) % 3


@dataclass(frozen=True)
class ExperimentReport:
    seeds: Tuple[int, ...]
    sums: Tuple[int, ...]
    values: Tuple[int, ...]
    constant: bool
    nonzero: bool
    histogram: Dict[int, int] = field(default_factory=dict)


def _trial(args):
    seed, signs, bends = args
    d = random_general_position_drawing(complete_graph(7), seed, bends_per_edge=bends)
    terms = triple_terms(d)
    return sum(s * t for s, t in zip(signs, terms))


def trial_seeds(seed: int, trials: int) -> Tuple[int, ...]:
    rng = random.Random(seed)
    return tuple(rng.getrandbits(48) for _ in range(trials))


def sign_map_experiment(s: SignMap, trials: int, seed: int = 0, threads: int = 1,
                        bends_per_edge: int = 1) -> ExperimentReport:
    """Evaluate the triple number on ``trials`` seeded random drawings of K7.

    Each trial draws its own seed from ``seed``, so the report does not depend
    on ``threads``.
    """
    if trials < 1:
        raise ValueError("trials must be positive")
    seeds = trial_seeds(seed, trials)
    signs = tuple(v for _, v in s.items())
    jobs = [(t, signs, bends_per_edge) for t in seeds]
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            sums = tuple(pool.map(_trial, jobs))
    else:
        sums = tuple(map(_trial, jobs))
    values = tuple(v % 3 for v in sums)
    hist = {k: values.count(k) for k in sorted(set(values))}
    return ExperimentReport(seeds, sums, values, len(hist) == 1, 0 not in hist, hist)


# ---------------------------------------------------------------------------
# experimental: sign maps from chessboard colorings

def chessboard_coloring(m: int = 6, r: int = 3) -> Dict[Tuple[Cell, ...], int]:
    """2-coloring of the spherical partitions of [m] in which the two
    extensions of any spherical partition of [m] - {j} get different colors.

    Raises ValueError if no such coloring exists.
    """
    parts = spherical_partitions(m, r)
    keys = [_key(p) for p in parts]
    groups: Dict[tuple, List[int]] = {}
    for i, p in enumerate(parts):
        for j in range(1, m + 1):
            restricted = tuple(tuple(x for x in c if x != j) for c in keys[i])
            groups.setdefault((j, restricted), []).append(i)
    adj: Dict[int, List[int]] = {i: [] for i in range(len(parts))}
    for members in groups.values():
        if len(members) == 2:
            a, b = members
            adj[a].append(b)
            adj[b].append(a)
        elif len(members) > 2:
            raise ValueError("a restriction has more than two spherical extensions")
    color: Dict[int, int] = {}
    for start in range(len(parts)):
        if start in color:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            u = queue.pop()
            for v in adj[u]:
                if v not in color:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    raise ValueError("spherical partitions admit no chessboard coloring")
    return {keys[i]: color[i] for i in range(len(parts))}


def chessboard_sign_map() -> SignMap:
    """EXPERIMENTAL.  Sign of T is given by the chessboard color of its
    restriction to [6].  No claim is made that this solves anything."""
    colors = chessboard_coloring(6, 3)

    def sign(p):
        restricted = tuple(tuple(x for x in c if x != 7) for c in _key(p))
        return 1 if colors[restricted] == 0 else -1

    return SignMap.from_function(sign)


def _score(signs, term_rows):
    vals = [sum(s * t for s, t in zip(signs, row)) % 3 for row in term_rows]
    counts = [vals.count(k) for k in range(3)]
    # best achievable: every value equal and nonzero
    return len(vals) - max(counts[1], counts[2])


def search_sign_maps(start: SignMap, trials: int = 20, seed: int = 0, iterations: int = 2000,
                     bends_per_edge: int = 1) -> Tuple[SignMap, int]:
    """EXPERIMENTAL hill climb over single sign flips.

    Score is the number of sample drawings whose value mod 3 differs from the
    most common nonzero value (0 means constant and nonzero on the sample).
    Returns the best map found and its score; a score of 0 on a sample proves
    nothing about other drawings.
    """
    term_rows = [triple_terms(random_general_position_drawing(complete_graph(7), t, bends_per_edge))
                 for t in trial_seeds(seed, trials)]
    domain = sign_domain()
    signs = [start[p] for p in domain]
    best = _score(signs, term_rows)
    rng = random.Random(seed)
    for _ in range(iterations):
        if best == 0:
            break
        i = rng.randrange(len(signs))
        signs[i] = -signs[i]
        sc = _score(signs, term_rows)
        if sc <= best:
            best = sc
        else:
            signs[i] = -signs[i]
    return SignMap({_key(p): v for p, v in zip(domain, signs)}), best


__all__ = [
    "convex_hull", "hull_contains", "intersect_hulls", "common_region",
    "radon_partition_4", "TverbergWitness", "tverberg_partitions", "spherical_tverberg_witness",
    "regular_polygon", "TopologicalWitness", "topological_tverberg_witness",
    "check_topological_witness", "sign_domain", "SignMap", "triple_terms", "triple_vk_sum",
    "triple_vk_number", "ExperimentReport", "trial_seeds", "sign_map_experiment",
    "chessboard_coloring", "chessboard_sign_map", "search_sign_maps",
]
