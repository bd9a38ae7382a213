"""Graphs, 2-hypergraphs, cell-pair index sets and partitions.

Cells are sorted vertex tuples: ``(a,)`` is a vertex, ``(a, b)`` an edge,
``(a, b, c)`` a face.  The stored order is also the default orientation
(edge ``ab`` runs from ``a`` to ``b``, face ``abc`` is traversed a->b->c).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import BadSize, TooLarge

Cell = Tuple[int, ...]


def _norm_edges(edges, size):
    out = set()
    for e in edges:
        e = tuple(sorted(e))
        if len(e) != size or len(set(e)) != size:
            raise ValueError(f"bad cell {e}")
        out.add(e)
    return tuple(sorted(out))


@dataclass(frozen=True)
class Graph:
    n: int
    edges: Tuple[Cell, ...]

    def __post_init__(self):
        edges = _norm_edges(self.edges, 2)
        for e in edges:
            if not (1 <= e[0] and e[1] <= self.n):
                raise ValueError(f"edge {e} outside vertex range 1..{self.n}")
        object.__setattr__(self, "edges", edges)

    @property
    def vertices(self):
        return range(1, self.n + 1)

    @property
    def faces(self):
        return ()

    def neighbors(self) -> Dict[int, set]:
        adj = {v: set() for v in self.vertices}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def without_edge(self, e) -> "Graph":
        e = tuple(sorted(e))
        return Graph(self.n, tuple(x for x in self.edges if x != e))


@dataclass(frozen=True)
class Hypergraph2:
    """2-hypergraph: vertices 1..n and 3-element faces; edges are derived."""

    n: int
    faces: Tuple[Cell, ...]
    edges: Tuple[Cell, ...] = field(init=False)

    def __post_init__(self):
        faces = _norm_edges(self.faces, 3)
        for f in faces:
            if not (1 <= f[0] and f[2] <= self.n):
                raise ValueError(f"face {f} outside vertex range 1..{self.n}")
        object.__setattr__(self, "faces", faces)
        edges = sorted({e for f in faces for e in itertools.combinations(f, 2)})
        object.__setattr__(self, "edges", tuple(edges))

    @property
    def vertices(self):
        return range(1, self.n + 1)

    @property
    def skeleton(self) -> Graph:
        return Graph(self.n, self.edges)


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple(itertools.combinations(range(1, n + 1), 2)))


def complete_bipartite(m: int, n: int) -> Graph:
    return Graph(m + n, tuple((a, b) for a in range(1, m + 1)
                              for b in range(m + 1, m + n + 1)))


def complete_2_hypergraph(n: int) -> Hypergraph2:
    """The complete 2-hypergraph on n+1 vertices."""
    return Hypergraph2(n + 1, tuple(itertools.combinations(range(1, n + 2), 3)))


def cycle_graph(n: int) -> Graph:
    return Graph(n, tuple(tuple(sorted((i, i % n + 1))) for i in range(1, n + 1)))


def wheel_graph(k: int) -> Graph:
    """Hub 1 joined to a k-cycle on 2..k+1."""
    rim = [(i, i + 1) for i in range(2, k + 1)] + [(2, k + 1)]
    return Graph(k + 1, tuple(rim) + tuple((1, i) for i in range(2, k + 2)))


def grid_graph(rows: int, cols: int) -> Graph:
    def v(r, c):
        return r * cols + c + 1
    edges = []
    for r in range(rows):
        for c in range(cols):
            if c + 1 < cols:
                edges.append((v(r, c), v(r, c + 1)))
            if r + 1 < rows:
                edges.append((v(r, c), v(r + 1, c)))
    return Graph(rows * cols, tuple(edges))


def petersen_graph() -> Graph:
    outer = [(i, i % 5 + 1) for i in range(1, 6)]
    spokes = [(i, i + 5) for i in range(1, 6)]
    inner = [(i + 5, (i + 1) % 5 + 6) for i in range(1, 6)]
    return Graph(10, tuple(outer + spokes + inner))


def subdivide(g: Graph, edge) -> Graph:
    """Insert a new vertex n+1 in the middle of ``edge``."""
    a, b = sorted(edge)
    w = g.n + 1
    rest = tuple(e for e in g.edges if e != (a, b))
    if len(rest) == len(g.edges):
        raise ValueError(f"{edge} is not an edge")
    return Graph(w, rest + ((a, w), (b, w)))


# ---------------------------------------------------------------------------
# index sets of disjoint cell tuples

KINDS = ("graph-Kstar", "graph-Ktilde", "hyper-Kstar", "hyper-Ktilde", "hyper-Kunderline")


@dataclass(frozen=True)
class CellPairIndex:
    kind: str
    entries: Tuple[Tuple[Cell, ...], ...]
    r: int = 2
    position: Dict = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "position", {e: i for i, e in enumerate(self.entries)})

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __contains__(self, entry):
        return entry in self.position

    @property
    def ordered(self) -> bool:
        return self.kind not in ("graph-Kstar", "hyper-Kstar")

    def normalize(self, entry) -> Tuple[Cell, ...]:
        """Canonical form of ``entry`` (sorted cells, and sorted pair if unordered)."""
        entry = tuple(tuple(sorted(c)) for c in entry)
        if not self.ordered:
            entry = tuple(sorted(entry, key=lambda c: (len(c), c)))
        return entry


def _cells(k) -> List[Cell]:
    return [(v,) for v in k.vertices] + list(k.edges) + list(k.faces)


def _disjoint(*cells) -> bool:
    seen = set()
    for c in cells:
        for v in c:
            if v in seen:
                return False
            seen.add(v)
    return True


def pair_index(k, kind: str, r: int = 2) -> CellPairIndex:
    """Enumerate K*, K-tilde or the r-fold index set of a graph or 2-hypergraph."""
    if kind in ("graph-Kstar", "graph-Ktilde"):
        pairs = [(s, t) for s, t in itertools.combinations(k.edges, 2) if _disjoint(s, t)]
        if kind == "graph-Ktilde":
            pairs = sorted(pairs + [(t, s) for s, t in pairs])
        return CellPairIndex(kind, tuple(pairs))
    if kind in ("hyper-Kstar", "hyper-Ktilde"):
        faces = getattr(k, "faces", ())
        edge_pairs = [(s, t) for s, t in itertools.combinations(k.edges, 2) if _disjoint(s, t)]
        vf = [((v,), f) for v in k.vertices for f in faces if v not in f]
        if kind == "hyper-Kstar":
            return CellPairIndex(kind, tuple(edge_pairs + vf))
        ordered = edge_pairs + [(t, s) for s, t in edge_pairs] + vf + [(f, v) for v, f in vf]
        return CellPairIndex(kind, tuple(sorted(ordered, key=_tuple_key)))
    if kind == "hyper-Kunderline":
        return CellPairIndex(kind, tuple(_r_tuples(k, r)), r)
    raise ValueError(f"unknown index kind {kind!r}")


def _tuple_key(t):
    return tuple((len(c), c) for c in t)


def _r_tuples(k, r):
    """Ordered r-tuples of pairwise disjoint cells: two edges and r-2 faces, or
    one vertex and r-1 faces."""
    faces = list(getattr(k, "faces", ()))
    out = []
    if r < 2:
        raise ValueError("r must be at least 2")
    # unordered choices first, then all orderings
    choices = []
    for fs in itertools.combinations(faces, r - 2):
        if not _disjoint(*fs):
            continue
        used = set().union(*fs) if fs else set()
        free = [e for e in k.edges if not used.intersection(e)]
        for s, t in itertools.combinations(free, 2):
            if _disjoint(s, t):
                choices.append((s, t) + fs)
    for fs in itertools.combinations(faces, r - 1):
        if not _disjoint(*fs):
            continue
        used = set().union(*fs)
        for v in k.vertices:
            if v not in used:
                choices.append(((v,),) + fs)
    for ch in choices:
        out.extend(itertools.permutations(ch))
    return sorted(out, key=_tuple_key)


def dim(cell: Cell) -> int:
    return len(cell) - 1


def incidence_sign(r: Sequence[int], rp: Sequence[int]) -> int:
    """Incidence number [R : R'] of oriented cells (tuples in orientation order).

    [AB:B] = 1, [AB:A] = -1; for a face ABC, [ABC:BA] = [ABC:CB] = [ABC:AC] = 1
    and [ABC:AB] = [ABC:BC] = [ABC:CA] = -1.  Zero otherwise.
    """
    r, rp = tuple(r), tuple(rp)
    if len(r) == 2 and len(rp) == 1:
        if rp[0] == r[1]:
            return 1
        if rp[0] == r[0]:
            return -1
        return 0
    if len(r) == 3 and len(rp) == 2:
        a, b, c = r
        forward = {(a, b), (b, c), (c, a)}
        backward = {(b, a), (c, b), (a, c)}
        if rp in forward:
            return -1
        if rp in backward:
            return 1
        return 0
    return 0


# ---------------------------------------------------------------------------
# partitions

@dataclass(frozen=True)
class Partition:
    blocks: Tuple[frozenset, ...]

    def __post_init__(self):
        blocks = tuple(frozenset(b) for b in self.blocks)
        seen = set()
        for b in blocks:
            if seen & b:
                raise ValueError("partition blocks overlap")
            seen |= b
        object.__setattr__(self, "blocks", blocks)

    @property
    def support(self) -> frozenset:
        return frozenset().union(*self.blocks)

    def block_of(self, x) -> Optional[int]:
        for i, b in enumerate(self.blocks):
            if x in b:
                return i
        return None

    def cells(self) -> Tuple[Cell, ...]:
        return tuple(tuple(sorted(b)) for b in self.blocks)

    def __str__(self):
        return "(" + ",".join("{" + ",".join(map(str, sorted(b))) + "}" for b in self.blocks) + ")"


def _pair_limit(r: int) -> int:
    return (3 * r - 3) // 2


def is_spherical(p: Partition) -> bool:
    """Consecutive pairs 2j-1, 2j present in the support sit in cyclically
    adjacent blocks."""
    r = len(p.blocks)
    for j in range(1, _pair_limit(r) + 1):
        s = p.block_of(2 * j - 1)
        t = p.block_of(2 * j)
        if s is None or t is None:
            continue
        if t not in ((s - 1) % r, (s + 1) % r) or t == s:
            return False
    return True


def spherical_partitions(m: int, r: int) -> List[Partition]:
    """All ordered partitions of [m] into r possibly empty blocks that are spherical."""
    if r < 2 or m not in (3 * r - 3, 3 * r - 2):
        raise BadSize(f"m must be 3r-3 or 3r-2, got m={m}, r={r}")
    npairs = min(_pair_limit(r), m // 2)
    paired = set(range(1, 2 * npairs + 1))
    singles = [x for x in range(1, m + 1) if x not in paired]
    pair_moves = [(s, t) for s in range(r) for t in range(r)
                  if t != s and t in ((s - 1) % r, (s + 1) % r)]
    out = []
    for choice in itertools.product(pair_moves, repeat=npairs):
        for single in itertools.product(range(r), repeat=len(singles)):
            blocks = [set() for _ in range(r)]
            for j, (s, t) in enumerate(choice, start=1):
                blocks[s].add(2 * j - 1)
                blocks[t].add(2 * j)
            for x, s in zip(singles, single):
                blocks[s].add(x)
            out.append(Partition(tuple(blocks)))
    return out


def spherical_extensions(p: Partition, x: int) -> List[Partition]:
    """Spherical partitions obtained from ``p`` by adding element ``x`` to one block."""
    out = []
    for i in range(len(p.blocks)):
        blocks = list(p.blocks)
        blocks[i] = blocks[i] | {x}
        q = Partition(tuple(blocks))
        if is_spherical(q):
            out.append(q)
    return out


def set_partitions(items: Sequence, r: int) -> Iterable[Tuple[tuple, ...]]:
    """Unordered partitions of ``items`` into exactly r nonempty blocks."""
    items = list(items)
    if r <= 0 or len(items) < r:
        return
    if r == 1:
        yield (tuple(items),)
        return
    first, rest = items[0], items[1:]
    # first in its own block
    for p in set_partitions(rest, r - 1):
        yield ((first,),) + p
    # first joins an existing block
    for p in set_partitions(rest, r):
        for i in range(r):
            yield p[:i] + ((first,) + p[i],) + p[i + 1:]


# ---------------------------------------------------------------------------
# subdivision search (exponential test oracle)

@dataclass(frozen=True)
class SubdivisionWitness:
    branch: Dict[int, int]
    paths: Dict[Cell, Tuple[int, ...]]


def contains_subdivision(g: Graph, h: Graph, limit: int = 12) -> Optional[SubdivisionWitness]:
    """Search for a subgraph of ``g`` homeomorphic to ``h`` (brute force)."""
    if g.n > limit:
        raise TooLarge(f"graph has {g.n} vertices, guard is {limit}")
    adj = g.neighbors()
    hadj = h.neighbors()
    hdeg = {v: len(hadj[v]) for v in h.vertices}
    hverts = sorted(h.vertices, key=lambda v: -hdeg[v])
    order = {v: i for i, v in enumerate(hverts)}
    # route each h-edge as soon as its later endpoint is placed
    edges_at = {v: [] for v in hverts}
    for a, b in h.edges:
        later = a if order[a] > order[b] else b
        edges_at[later].append((a, b))

    branch: Dict[int, int] = {}
    used: set = set()
    paths: Dict[Cell, Tuple[int, ...]] = {}

    def route(pending, k):
        if not pending:
            return place(k + 1)
        (a, b), rest = pending[0], pending[1:]
        src, dst = branch[a], branch[b]
        stack = [(src, (src,))]
        # depth-first over simple paths with unused interiors
        def dfs(v, path):
            for w in sorted(adj[v]):
                if w == dst:
                    if len(path) == 1 and _edge_taken(paths, src, dst):
                        continue
                    paths[(a, b)] = path + (w,)
                    if route(rest, k):
                        return True
                    del paths[(a, b)]
                elif w not in used and w not in path:
                    used.add(w)
                    if dfs(w, path + (w,)):
                        return True
                    used.discard(w)
            return False
        del stack
        return dfs(src, (src,))

    def place(k):
        if k == len(hverts):
            return True
        hv = hverts[k]
        for gv in g.vertices:
            if gv in used or len(adj[gv]) < hdeg[hv]:
                continue
            branch[hv] = gv
            used.add(gv)
            if route(edges_at[hv], k):
                return True
            used.discard(gv)
            del branch[hv]
        return False

    if h.n > g.n or len(h.edges) > len(g.edges):
        return None
    if place(0):
        return SubdivisionWitness(dict(branch), dict(paths))
    return None


def _edge_taken(paths, u, v):
    for p in paths.values():
        if len(p) == 2 and {p[0], p[1]} == {u, v}:
            return True
    return False
