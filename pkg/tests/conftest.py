import os
import random
from itertools import combinations, permutations

import pytest
from hypothesis import HealthCheck, settings

from vankampen.combinatorics import Graph
from vankampen.geometry import Polyline, general_position, point

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=500, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

DATA = os.path.join(os.path.dirname(__file__), "..", "demos", "data")


def random_points(rng, n, lo=0, hi=60):
    """n integer points in general position."""
    while True:
        pts = [point(rng.randint(lo, hi), rng.randint(lo, hi)) for _ in range(n)]
        if general_position(pts).ok:
            return pts


def random_closed_pair(rng, hi=60):
    while True:
        a = rng.randint(3, 6)
        b = rng.randint(3, 6)
        pts = [point(rng.randint(0, hi), rng.randint(0, hi)) for _ in range(a + b)]
        if general_position(pts).ok:
            return Polyline(tuple(pts[:a]), closed=True), Polyline(tuple(pts[a:]), closed=True)


def all_graphs(n):
    """One representative per isomorphism class of graphs on n labelled
    vertices, by marking whole orbits of edge masks."""
    pairs = list(combinations(range(n), 2))
    pos = {p: i for i, p in enumerate(pairs)}
    perms = list(permutations(range(n)))
    images = []
    for pi in perms:
        images.append([pos[tuple(sorted((pi[a], pi[b])))] for a, b in pairs])
    seen = set()
    reps = []
    for mask in range(1 << len(pairs)):
        if mask in seen:
            continue
        reps.append(mask)
        for img in images:
            m = 0
            for i in range(len(pairs)):
                if mask >> i & 1:
                    m |= 1 << img[i]
            seen.add(m)
    return [Graph(n, tuple((a + 1, b + 1) for i, (a, b) in enumerate(pairs) if m >> i & 1)) for m in reps]


@pytest.fixture
def rng():
    return random.Random(12345)


def _in_triangle_or_less(pts, x):
    """x in the convex hull of pts, by Caratheodory: some triangle, segment
    or point of pts contains x."""
    from vankampen.geometry import orient
    from itertools import combinations as comb
    if x in pts:
        return True
    for a, b in comb(pts, 2):
        if orient(a, b, x) == 0 and min(a[0], b[0]) <= x[0] <= max(a[0], b[0]) \
                and min(a[1], b[1]) <= x[1] <= max(a[1], b[1]):
            return True
    for a, b, c in comb(pts, 3):
        s = [orient(a, b, x), orient(b, c, x), orient(c, a, x)]
        if all(v >= 0 for v in s) or all(v <= 0 for v in s):
            if orient(a, b, c) != 0:
                return True
    return False


def hulls_meet(blocks):
    """Brute-force oracle: do the convex hulls of the point blocks share a point?

    A nonempty intersection of planar convex polygons has a vertex that is
    either an input point or a crossing of two segments spanned by input
    points, so those candidates suffice."""
    from vankampen.geometry import point
    from fractions import Fraction
    from itertools import combinations as comb
    allpts = [p for b in blocks for p in b]
    cands = set(allpts)
    segs = [s for b in blocks for s in comb(b, 2)]
    for (a, b), (c, d) in comb(segs, 2):
        den = (b[0] - a[0]) * (d[1] - c[1]) - (b[1] - a[1]) * (d[0] - c[0])
        if den == 0:
            continue
        t = Fraction((c[0] - a[0]) * (d[1] - c[1]) - (c[1] - a[1]) * (d[0] - c[0]), den)
        u = Fraction((c[0] - a[0]) * (b[1] - a[1]) - (c[1] - a[1]) * (b[0] - a[0]), den)
        if 0 <= t <= 1 and 0 <= u <= 1:
            cands.add(point(a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])))
    return any(all(_in_triangle_or_less(list(b), x) for b in blocks) for x in cands)
