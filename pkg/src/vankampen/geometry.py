"""Exact planar predicates on rational points.

Every predicate here is evaluated in exact arithmetic: coordinates are Python
``int`` or :class:`fractions.Fraction`, never floats.  The sign of a crossing
follows the convention "+1 when ABC is clockwise", i.e. ``orient(A, B, C) == -1``
in the usual x-right, y-up frame.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple, Optional, Union

import numpy as np

from .errors import Degenerate, NotCrossing, OnCurve

Number = Union[int, Fraction]


def rat(value) -> Number:
    """Convert ``value`` to an exact rational; integral values become ``int``."""
    if isinstance(value, bool):
        raise TypeError("bool is not a coordinate")
    if isinstance(value, int):
        return value
    f = value if isinstance(value, Fraction) else Fraction(value)
    return f.numerator if f.denominator == 1 else f


class Point(NamedTuple):
    x: Number
    y: Number

    def __str__(self):
        return f"{self.x} {self.y}"


def point(x, y) -> Point:
    return Point(rat(x), rat(y))


def as_point(obj) -> Point:
    if isinstance(obj, Point):
        return obj
    x, y = obj
    return point(x, y)


def orient(a: Point, b: Point, c: Point) -> int:
    """+1 if (a, b, c) turns counterclockwise, -1 if clockwise, 0 if collinear."""
    d = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (d > 0) - (d < 0)


def _on_segment(a, b, p) -> bool:
    # assumes a, b, p collinear
    return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


def reflect(p: Point) -> Point:
    """Mirror image in the y-axis (reverses the orientation of the plane)."""
    return Point(-p[0], p[1])


@dataclass(frozen=True)
class Polyline:
    """A polygonal line given by its vertex chain.

    For a closed polyline the closing segment from the last vertex back to the
    first is implicit.  The traversal order is the orientation.
    """

    vertices: tuple
    closed: bool = False
    oriented: bool = True

    def __post_init__(self):
        verts = tuple(as_point(v) for v in self.vertices)
        object.__setattr__(self, "vertices", verts)
        if len(verts) < 2 or (self.closed and len(verts) < 3):
            raise ValueError("polyline has too few vertices")
        for a, b in zip(verts, verts[1:]):
            if a == b:
                raise ValueError(f"repeated consecutive vertex {a}")
        if self.closed and verts[0] == verts[-1]:
            raise ValueError("closed polyline must not repeat its first vertex")

    def segments(self):
        v = self.vertices
        segs = list(zip(v, v[1:]))
        if self.closed:
            segs.append((v[-1], v[0]))
        return segs

    def reversed(self) -> "Polyline":
        return Polyline(self.vertices[::-1], self.closed, self.oriented)

    def reflected(self) -> "Polyline":
        return Polyline(tuple(reflect(p) for p in self.vertices), self.closed, self.oriented)

    @property
    def start(self) -> Point:
        return self.vertices[0]

    @property
    def end(self) -> Point:
        return self.vertices[-1]


def _crossing_kind(a, b, c, d) -> int:
    """0 if closed segments ab, cd are disjoint, 1 if they cross properly.

    Any other contact (shared point, endpoint on the other segment, overlap)
    raises :class:`Degenerate`.
    """
    o1 = orient(a, b, c)
    o2 = orient(a, b, d)
    if o1 == o2 != 0:
        return 0
    o3 = orient(c, d, a)
    o4 = orient(c, d, b)
    if o3 == o4 != 0:
        return 0
    if o1 * o2 < 0 and o3 * o4 < 0:
        return 1
    if ((o1 == 0 and _on_segment(a, b, c)) or (o2 == 0 and _on_segment(a, b, d))
            or (o3 == 0 and _on_segment(c, d, a)) or (o4 == 0 and _on_segment(c, d, b))):
        raise Degenerate("segments touch without crossing", ((a, b), (c, d)))
    return 0


def _crossing_point(a, b, c, d) -> Point:
    den = (b[0] - a[0]) * (d[1] - c[1]) - (b[1] - a[1]) * (d[0] - c[0])
    num = (c[0] - a[0]) * (d[1] - c[1]) - (c[1] - a[1]) * (d[0] - c[0])
    t = Fraction(num, 1) / den
    return point(a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]))


def crossing_sign(ab, cd) -> int:
    """Sign of the crossing of oriented segments ``ab`` and ``cd``.

    +1 iff the triangle (A, B, C) is clockwise.
    """
    a, b = map(as_point, ab)
    c, d = map(as_point, cd)
    if len({a, b, c, d}) < 4 or 0 in (orient(a, b, c), orient(a, b, d),
                                      orient(c, d, a), orient(c, d, b)):
        raise Degenerate("endpoints not in general position", (a, b, c, d))
    if not _crossing_kind(a, b, c, d):
        raise NotCrossing(f"segments {a}-{b} and {c}-{d} do not cross")
    return 1 if orient(a, b, c) < 0 else -1


def _pairs(p: Polyline, q: Polyline):
    for a, b in p.segments():
        for c, d in q.segments():
            if _crossing_kind(a, b, c, d):
                yield a, b, c, d


def crossing_count(p: Polyline, q: Polyline) -> int:
    """Number of crossing points of two polylines (raises on degenerate contact)."""
    return sum(1 for _ in _pairs(p, q))


def intersection_points(p: Polyline, q: Polyline):
    """Proper crossings of ``p`` and ``q`` as a list of ``(point, sign)``."""
    return [(_crossing_point(a, b, c, d), 1 if orient(a, b, c) < 0 else -1)
            for a, b, c, d in _pairs(p, q)]


def algebraic_intersection_number(p: Polyline, q: Polyline) -> int:
    """Sum of crossing signs, ``P . Q``."""
    if not (p.oriented and q.oriented):
        raise ValueError("algebraic intersection needs oriented polylines")
    return sum(1 if orient(a, b, c) < 0 else -1 for a, b, c, d in _pairs(p, q))


def winding_number(l: Polyline, o) -> int:
    """Winding number of the closed oriented polyline ``l`` around ``o``.

    Counted as signed crossings of the horizontal ray from ``o`` to the right,
    with the half-open rule on vertices (equivalent to lifting the ray by an
    infinitesimal, so no vertex is ever hit).
    """
    if not l.closed:
        raise ValueError("winding number needs a closed polyline")
    o = as_point(o)
    w = 0
    for a, b in l.segments():
        s = orient(a, b, o)
        if s == 0 and _on_segment(a, b, o):
            raise OnCurve(f"point {o} lies on the polyline")
        if a[1] <= o[1]:
            if b[1] > o[1] and s > 0:
                w += 1
        elif b[1] <= o[1] and s < 0:
            w -= 1
    return w


def mod2_interior_contains(l: Polyline, o) -> bool:
    return winding_number(l, o) % 2 == 1


# ---------------------------------------------------------------------------
# general position

@dataclass(frozen=True)
class GeneralPositionCertificate:
    points: tuple
    ok: bool
    violation: Optional[tuple] = None

    def __bool__(self):
        return self.ok


def _integerize(pts):
    """Scale and translate to nonnegative integer coordinates (same incidences)."""
    lcm = 1
    for p in pts:
        for v in p:
            if isinstance(v, Fraction):
                lcm = lcm * v.denominator // math.gcd(lcm, v.denominator)
    xs = [int(p[0] * lcm) for p in pts]
    ys = [int(p[1] * lcm) for p in pts]
    mx, my = min(xs), min(ys)
    return [x - mx for x in xs], [y - my for y in ys]


_NUMPY_LIMIT = 2 ** 29


def general_position(points: Iterable) -> GeneralPositionCertificate:
    """Certify that no 3 points are collinear and no 3 spanned segments share
    an interior point.  On failure the certificate carries a witness."""
    pts = tuple(as_point(p) for p in points)
    seen = set()
    for p in pts:
        if p in seen:
            return GeneralPositionCertificate(pts, False, ("coincident", (p, p)))
        seen.add(p)
    if len(pts) < 3:
        return GeneralPositionCertificate(pts, True)
    xs, ys = _integerize(pts)
    if max(max(xs), max(ys)) <= _NUMPY_LIMIT:
        bad = _gp_numpy(xs, ys)
    else:
        bad = _gp_python(xs, ys)
    if bad is None:
        return GeneralPositionCertificate(pts, True)
    kind, idx = bad
    if kind == "collinear":
        witness = ("collinear", tuple(pts[i] for i in idx))
    else:
        witness = ("concurrent", tuple((pts[i], pts[j]) for i, j in idx))
    return GeneralPositionCertificate(pts, False, witness)


def _gp_python(xs, ys):
    pts = list(zip(xs, ys))
    n = len(pts)
    for i, j, k in itertools.combinations(range(n), 3):
        if orient(pts[i], pts[j], pts[k]) == 0:
            return "collinear", (i, j, k)
    segs = list(itertools.combinations(range(n), 2))
    hits = {}
    for s, t in itertools.combinations(range(len(segs)), 2):
        (i, j), (k, l) = segs[s], segs[t]
        if len({i, j, k, l}) < 4:
            continue
        a, b, c, d = pts[i], pts[j], pts[k], pts[l]
        if _crossing_kind(a, b, c, d):
            x = _crossing_point(a, b, c, d)
            for own, other in ((s, t), (t, s)):
                key = (own, x)
                if key in hits and hits[key] != other:
                    return "concurrent", (segs[own], segs[hits[key]], segs[other])
                hits[key] = other
    return None


def _gp_numpy(xs, ys):
    x = np.asarray(xs, dtype=np.int64)
    y = np.asarray(ys, dtype=np.int64)
    n = len(x)
    # collinear triples, one anchor at a time
    for i in range(n - 2):
        j, k = np.triu_indices(n - i - 1, 1)
        j = j + i + 1
        k = k + i + 1
        cr = (x[j] - x[i]) * (y[k] - y[i]) - (y[j] - y[i]) * (x[k] - x[i])
        z = np.flatnonzero(cr == 0)
        if z.size:
            return "collinear", (i, int(j[z[0]]), int(k[z[0]]))

    si, sj = np.triu_indices(n, 1)
    nseg = si.size
    ax, ay, bx, by = x[si], y[si], x[sj], y[sj]
    dx, dy = bx - ax, by - ay
    rows_seg, rows_num, rows_den, rows_partner = [], [], [], []
    block = max(1, (1 << 20) // max(nseg, 1))
    for s0 in range(0, nseg, block):
        s = np.arange(s0, min(nseg, s0 + block))[:, None]
        t = np.arange(nseg)[None, :]
        mask = t > s
        s_b, t_b = np.broadcast_arrays(s, t)
        s_b, t_b = s_b[mask], t_b[mask]
        if s_b.size == 0:
            continue
        share = ((si[s_b] == si[t_b]) | (si[s_b] == sj[t_b])
                 | (sj[s_b] == si[t_b]) | (sj[s_b] == sj[t_b]))
        s_b, t_b = s_b[~share], t_b[~share]
        pax, pay, pdx, pdy = ax[s_b], ay[s_b], dx[s_b], dy[s_b]
        qax, qay, qdx, qdy = ax[t_b], ay[t_b], dx[t_b], dy[t_b]
        o1 = np.sign(pdx * (qay - pay) - pdy * (qax - pax))
        o2 = np.sign(pdx * (qay + qdy - pay) - pdy * (qax + qdx - pax))
        o3 = np.sign(qdx * (pay - qay) - qdy * (pax - qax))
        o4 = np.sign(qdx * (pay + pdy - qay) - qdy * (pax + pdx - qax))
        cross = (o1 * o2 < 0) & (o3 * o4 < 0)
        if not cross.any():
            continue
        s_b, t_b = s_b[cross], t_b[cross]
        pax, pay, pdx, pdy = pax[cross], pay[cross], pdx[cross], pdy[cross]
        qax, qay, qdx, qdy = qax[cross], qay[cross], qdx[cross], qdy[cross]
        den = pdx * qdy - pdy * qdx
        tnum = (qax - pax) * qdy - (qay - pay) * qdx
        unum = (qax - pax) * pdy - (qay - pay) * pdx
        for seg, num, partner in ((s_b, tnum, t_b), (t_b, unum, s_b)):
            d = den.copy()
            nn = num.copy()
            neg = d < 0
            d[neg] = -d[neg]
            nn[neg] = -nn[neg]
            g = np.gcd(nn, d)
            rows_seg.append(seg)
            rows_num.append(nn // g)
            rows_den.append(d // g)
            rows_partner.append(partner)
    if not rows_seg:
        return None
    seg = np.concatenate(rows_seg)
    num = np.concatenate(rows_num)
    den = np.concatenate(rows_den)
    partner = np.concatenate(rows_partner)
    order = np.lexsort((den, num, seg))
    seg, num, den, partner = seg[order], num[order], den[order], partner[order]
    dup = np.flatnonzero((seg[1:] == seg[:-1]) & (num[1:] == num[:-1]) & (den[1:] == den[:-1]))
    if dup.size == 0:
        return None
    k = int(dup[0])
    trio = (int(seg[k]), int(partner[k]), int(partner[k + 1]))
    return "concurrent", tuple((int(si[s]), int(sj[s])) for s in trio)


def straight_line_drawing_crossfree(g, placement) -> bool:
    """True iff no edge segment meets the interior of another edge segment."""
    if isinstance(placement, Mapping):
        pos = {v: as_point(p) for v, p in placement.items()}
    else:
        pos = {v + 1: as_point(p) for v, p in enumerate(placement)}
    edges = list(g.edges)
    for (a, b), (c, d) in itertools.combinations(edges, 2):
        common = {a, b} & {c, d}
        if common:
            (v,) = common
            u = b if a == v else a
            w = d if c == v else c
            pv, pu, pw = pos[v], pos[u], pos[w]
            if orient(pv, pu, pw) == 0 and (_on_segment(pv, pu, pw) or _on_segment(pv, pw, pu)):
                return False
            continue
        try:
            if _crossing_kind(pos[a], pos[b], pos[c], pos[d]):
                return False
        except Degenerate:
            return False
    return True

