"""Text formats for points, graphs, hypergraphs, drawings, cochains and sign maps.

All parsers ignore blank lines and ``#`` comments and raise ParseError with a
1-based line and column.  Every ``format_*`` output parses back to an equal
value.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Dict, List, Sequence

from .combinatorics import Cell, CellPairIndex, Graph, Hypergraph2, pair_index
from .drawings import GF2, Z, Cochain, Drawing, make_drawing
from .errors import ParseError
from .geometry import Point, point

_NUM = re.compile(r"-?\d+(?:/\d+)?\Z")


def _lines(text: str):
    """Yield (line number, stripped content, column offset) of meaningful lines."""
    for no, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        stripped = body.strip()
        if stripped:
            yield no, stripped, len(body) - len(body.lstrip()) + 1


def _tokens(s: str, col0: int):
    for m in re.finditer(r"\S+", s):
        yield m.group(), col0 + m.start()


def _number(tok: str, line: int, col: int) -> Fraction:
    if not _NUM.match(tok):
        raise ParseError(f"not a rational number: {tok!r}", line, col)
    try:
        return Fraction(tok)
    except ZeroDivisionError:
        raise ParseError(f"zero denominator in {tok!r}", line, col) from None


def _int(tok: str, line: int, col: int) -> int:
    if not re.fullmatch(r"\d+", tok):
        raise ParseError(f"not a vertex label: {tok!r}", line, col)
    return int(tok)


def fmt_number(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _point(toks, line) -> Point:
    if len(toks) != 2:
        col = toks[2][1] if len(toks) > 2 else (toks[0][1] if toks else None)
        raise ParseError(f"expected two coordinates, got {len(toks)}", line, col)
    return point(*(_number(t, line, c) for t, c in toks))


# ---------------------------------------------------------------------------
# points

def parse_points(text: str) -> List[Point]:
    return [_point(list(_tokens(s, c)), no) for no, s, c in _lines(text)]


def format_points(points: Sequence) -> str:
    return "".join(f"{fmt_number(p[0])} {fmt_number(p[1])}\n" for p in points)


# ---------------------------------------------------------------------------
# graphs and hypergraphs

def _header(lines, what):
    try:
        no, s, c = next(lines)
    except StopIteration:
        raise ParseError(f"empty {what} file", 1, 1) from None
    return no, s, c


def _labels(s, c, no, n, k):
    toks = list(_tokens(s, c))
    if len(toks) != k:
        raise ParseError(f"expected {k} vertex labels", no, c)
    out = []
    for t, col in toks:
        v = _int(t, no, col)
        if not 1 <= v <= n:
            raise ParseError(f"vertex {v} outside 1..{n}", no, col)
        out.append(v)
    if len(set(out)) != k:
        raise ParseError("repeated vertex in a cell", no, c)
    return tuple(out)


def _parse_cells(text, k, what):
    lines = _lines(text)
    no, s, c = _header(lines, what)
    n = _int(s, no, c)
    return n, [_labels(s, c, no, n, k) for no, s, c in lines]


def parse_graph(text: str) -> Graph:
    n, edges = _parse_cells(text, 2, "graph")
    return Graph(n, tuple(edges))


def parse_hypergraph(text: str) -> Hypergraph2:
    n, faces = _parse_cells(text, 3, "hypergraph")
    return Hypergraph2(n, tuple(faces))


def format_graph(g: Graph) -> str:
    return f"{g.n}\n" + "".join(f"{a} {b}\n" for a, b in g.edges)


def format_hypergraph(k: Hypergraph2) -> str:
    return f"{k.n}\n" + "".join(f"{a} {b} {c}\n" for a, b, c in k.faces)


# ---------------------------------------------------------------------------
# drawings

_VERTEX = re.compile(r"vertex\s+(\S+)\s*:(.*)\Z")
_EDGE = re.compile(r"edge\s+(\S+)\s+(\S+)\s*:(.*)\Z")
_FACE = re.compile(r"face\s+(.*)\Z")


def parse_drawing(text: str) -> Drawing:
    """Header ``n`` (graph) or ``hypergraph n`` followed by ``face a b c`` lines,
    then ``vertex i: x y`` and ``edge a b: x1 y1 ; x2 y2 ; ...`` lines.

    A graph's edges are exactly the listed edges.  For a hypergraph, skeleton
    edges without an ``edge`` line are drawn straight.
    """
    lines = _lines(text)
    no, s, c = _header(lines, "drawing")
    hyper = s.startswith("hypergraph")
    if hyper:
        rest = s[len("hypergraph"):]
        n = _int(rest.strip(), no, c + len(s) - len(rest.lstrip()))
    else:
        n = _int(s, no, c)
    faces, verts, bends = [], {}, {}
    for no, s, c in lines:
        m = _FACE.match(s)
        if m:
            if not hyper:
                raise ParseError("face line in a graph drawing", no, c)
            faces.append(_labels(m.group(1), c + m.start(1), no, n, 3))
            continue
        m = _VERTEX.match(s)
        if m:
            v = _int(m.group(1), no, c + m.start(1))
            if not 1 <= v <= n:
                raise ParseError(f"vertex {v} outside 1..{n}", no, c + m.start(1))
            if v in verts:
                raise ParseError(f"vertex {v} placed twice", no, c)
            verts[v] = _point(list(_tokens(m.group(2), c + m.start(2))), no)
            continue
        m = _EDGE.match(s)
        if m:
            e = _labels(f"{m.group(1)} {m.group(2)}", c + m.start(1), no, n, 2)
            key = tuple(sorted(e))
            if key in bends:
                raise ParseError(f"edge {key} listed twice", no, c)
            pts = []
            body, off = m.group(3), c + m.start(3)
            if body.strip():
                pos = 0
                for chunk in body.split(";"):
                    pts.append(_point(list(_tokens(chunk, off + pos)), no))
                    pos += len(chunk) + 1
            if e[0] > e[1]:
                pts.reverse()
            bends[key] = pts
            continue
        raise ParseError(f"unrecognized line {s!r}", no, c)
    if hyper:
        host = Hypergraph2(n, tuple(faces))
        extra = set(bends) - set(host.edges)
        if extra:
            raise ParseError(f"edge {min(extra)} is not in the hypergraph's skeleton")
    else:
        host = Graph(n, tuple(sorted(bends)))
    missing = [v for v in range(1, n + 1) if v not in verts]
    if missing:
        raise ParseError(f"vertex {missing[0]} has no position")
    try:
        return make_drawing(host, verts, bends)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_drawing(d: Drawing) -> str:
    host = d.host
    out = []
    if isinstance(host, Hypergraph2):
        out.append(f"hypergraph {host.n}")
        out.extend(f"face {a} {b} {c}" for a, b, c in host.faces)
    else:
        out.append(f"{host.n}")
    for v in sorted(d.vertex_points):
        p = d.vertex_points[v]
        out.append(f"vertex {v}: {fmt_number(p.x)} {fmt_number(p.y)}")
    for e in sorted(d.edge_polylines):
        mids = " ; ".join(f"{fmt_number(p.x)} {fmt_number(p.y)}" for p in d.bends(e))
        out.append(f"edge {e[0]} {e[1]}: {mids}".rstrip())
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# cell labels and cochain dumps

def format_cell(cell: Cell, dotted: bool = False) -> str:
    return ".".join(map(str, cell)) if dotted else "".join(map(str, cell))


def parse_cell(tok: str, dotted: bool = False, line=None, col=None) -> Cell:
    parts = tok.split(".") if dotted else list(tok)
    if not tok or not all(p.isdigit() for p in parts):
        raise ParseError(f"bad cell label {tok!r}", line, col)
    return tuple(int(p) for p in parts)


def format_entry(entry, ordered: bool, dotted: bool = False) -> str:
    body = ",".join(format_cell(c, dotted) for c in entry)
    return f"({body})" if ordered else f"{{{body}}}"


def _entry_tokens(s: str, no: int, col: int):
    if not s or s[0] not in "({" or s[-1] != {"(": ")", "{": "}"}[s[0]]:
        raise ParseError(f"bad entry {s!r}", no, col)
    return s[0] == "(", s[1:-1].split(",")


def format_cochain(c: Cochain) -> str:
    host_n = max((v for e in c.index for cell in e for v in cell), default=0)
    dotted = host_n >= 10
    lines = [f"# cochain kind={c.index.kind} r={c.index.r} ring={c.ring} labels={'dotted' if dotted else 'digits'}"]
    for entry, v in c.items():
        lines.append(f"{format_entry(entry, c.index.ordered, dotted)} = {v}")
    return "\n".join(lines) + "\n"


_COCHAIN_HEADER = re.compile(r"#\s*cochain\s+(.*)")


def parse_cochain(text: str, host) -> Cochain:
    """Parse a cochain dump over ``host``.  The header comment written by
    :func:`format_cochain` fixes the index kind and ring; without it the kind is
    inferred from the brackets and the ring is Z."""
    meta: Dict[str, str] = {}
    for raw in text.splitlines():
        m = _COCHAIN_HEADER.match(raw.strip())
        if m:
            meta = dict(kv.split("=", 1) for kv in m.group(1).split() if "=" in kv)
            break
    dotted = meta.get("labels") == "dotted"
    values: Dict[tuple, int] = {}
    seen_ordered = None
    width = 2
    for no, s, c in _lines(text):
        if "=" not in s:
            raise ParseError("expected `entry = value`", no, c)
        lhs, rhs = s.split("=", 1)
        lhs = lhs.strip()
        ordered, toks = _entry_tokens(lhs, no, c)
        seen_ordered = ordered
        width = len(toks)
        entry = tuple(parse_cell(t.strip(), dotted, no, c) for t in toks)
        rtok = rhs.strip()
        if not re.fullmatch(r"[+-]?\d+", rtok):
            raise ParseError(f"bad value {rtok!r}", no, c + s.index("=") + 1)
        if entry in values:
            raise ParseError(f"entry {lhs} listed twice", no, c)
        values[entry] = int(rtok)
    kind = meta.get("kind")
    r = int(meta.get("r", width))
    if kind is None:
        hyper = isinstance(host, Hypergraph2)
        if r > 2:
            kind = "hyper-Kunderline"
        elif hyper:
            kind = "hyper-Ktilde" if seen_ordered else "hyper-Kstar"
        else:
            kind = "graph-Ktilde" if seen_ordered else "graph-Kstar"
    index = pair_index(host, kind, r)
    ring = meta.get("ring", Z)
    if ring not in (GF2, Z):
        raise ParseError(f"unknown ring {ring!r}", 1, 1)
    unknown = [e for e in values if index.normalize(e) not in index.position]
    if unknown:
        raise ParseError(f"entry {unknown[0]} is not in the {kind} index set")
    return Cochain.from_dict(index, values, ring)


def format_entries(entries: Sequence, index: CellPairIndex) -> str:
    """One entry per line, used for certificates and witness lists."""
    dotted = any(v >= 10 for e in entries for c in e for v in c)
    return "".join(format_entry(e, index.ordered, dotted) + "\n" for e in entries)


# ---------------------------------------------------------------------------
# sign maps

_BLOCK = re.compile(r"\{([^{}]*)\}")
_SIGN_LINE = re.compile(r"\((.*)\)\s*=\s*([+-]1)\Z")


def parse_sign_map(text: str):
    from .tverberg import SignMap

    values = {}
    for no, s, c in _lines(text):
        m = _SIGN_LINE.match(s)
        if not m:
            raise ParseError("expected `({..},{..},{..}) = +1|-1`", no, c)
        blocks = _BLOCK.findall(m.group(1))
        if len(blocks) != 3 or re.sub(r"\s", "", m.group(1)).count("{") != 3:
            raise ParseError("a sign map entry has exactly three blocks", no, c + 1)
        cells = []
        for b in blocks:
            b = b.strip()
            if b and not re.fullmatch(r"\d+(\s*,\s*\d+)*", b):
                raise ParseError(f"bad block {{{b}}}", no, c)
            cells.append(tuple(sorted(int(x) for x in b.split(","))) if b else ())
        key = tuple(cells)
        if key in values:
            raise ParseError(f"partition {m.group(1)} listed twice", no, c)
        values[key] = int(m.group(2))
    try:
        return SignMap(values)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_sign_map(s) -> str:
    return "".join(f"{p} = {'+1' if v > 0 else '-1'}\n" for p, v in s.items())


__all__ = [
    "parse_points", "format_points", "parse_graph", "format_graph", "parse_hypergraph",
    "format_hypergraph", "parse_drawing", "format_drawing", "format_cell", "parse_cell",
    "format_entry", "format_cochain", "parse_cochain", "format_entries", "parse_sign_map",
    "format_sign_map", "fmt_number",
]
