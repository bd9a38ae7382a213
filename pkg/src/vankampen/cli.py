"""Command-line front end.

Exit status: 0 on success or a positive verdict, 1 on a negative verdict
(non-planar, not in span, no witness, not in general position), 2 on bad
input.  ``--json`` prints one record with a ``schema`` field.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import formats
from .combinatorics import complete_graph, spherical_partitions
from .cohomology import in_coboundary_span_gf2, in_coboundary_span_int
from .drawings import (GF2, Z, integral_intersection_cocycle, intersection_cocycle_mod2,
                       r_fold_intersection_cocycle, radon_number, random_general_position_drawing,
                       van_kampen_number)
from .errors import Degenerate, ParseError, VanKampenError
from .planarity import is_planar, is_planar_hyper
from .tverberg import (SignMap, chessboard_sign_map, sign_map_experiment, spherical_tverberg_witness,
                       topological_tverberg_witness, triple_vk_sum, tverberg_partitions)

SCHEMA = "vankampen/1"


class _Usage(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _ordering(text: Optional[str]):
    if not text:
        return None
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise _Usage(f"bad --ordering {text!r}") from None


def _num(x) -> str:
    return formats.fmt_number(x)


def _pt(p):
    return [_num(p[0]), _num(p[1])]


def _cells(entry):
    return [list(c) for c in entry]


def _host(text: str):
    """A graph file has two labels per line, a hypergraph file three."""
    lines = list(formats._lines(text))
    if len(lines) > 1 and len(lines[1][1].split()) == 3:
        return formats.parse_hypergraph(text)
    return formats.parse_graph(text)


def _drawing(args):
    if args.drawing:
        return formats.parse_drawing(_read(args.drawing))
    return random_general_position_drawing(complete_graph(7), args.seed, bends_per_edge=args.bends)


def _sign_map(args) -> SignMap:
    if getattr(args, "chessboard", False):
        return chessboard_sign_map()
    if args.sign_map:
        return formats.parse_sign_map(_read(args.sign_map))
    return SignMap.constant(1)


# ---------------------------------------------------------------------------
# commands: each returns (exit status, text lines, json result)

def cmd_planarity(args):
    host = formats.parse_hypergraph(_read(args.file)) if args.hyper else formats.parse_graph(_read(args.file))
    order = _ordering(args.ordering)
    v = is_planar_hyper(host, order) if args.hyper else is_planar(host, order)
    lines = ["planar" if v.planar else "non-planar"]
    rec = {"planar": v.planar}
    if args.witness and v.planar:
        lines += [_label((a, e)) for a, e in v.witness]
        rec["witness"] = [[a, list(e)] for a, e in v.witness]
    if args.certificate and not v.planar:
        lines += [formats.format_entry(e, False, host.n >= 10) for e in v.certificate]
        rec["certificate"] = [_cells(e) for e in v.certificate]
    return (0 if v.planar else 1), lines, rec


def cmd_vk_number(args):
    v = van_kampen_number(formats.parse_drawing(_read(args.file)))
    return 0, [str(v)], {"v": v}


def cmd_radon_number(args):
    v = radon_number(formats.parse_drawing(_read(args.file)))
    return 0, [str(v)], {"rho": v}


def cmd_cocycle(args):
    d = formats.parse_drawing(_read(args.file))
    if args.r > 2:
        c = r_fold_intersection_cocycle(d, args.r)
    elif args.ring == GF2:
        c = intersection_cocycle_mod2(d)
    else:
        c = integral_intersection_cocycle(d)
    text = formats.format_cochain(c)
    rec = {"kind": c.index.kind, "r": c.index.r, "ring": c.ring,
           "entries": [[_cells(e), v] for e, v in c.items()]}
    return 0, text.rstrip("\n").split("\n"), rec


def cmd_coboundary_span(args):
    host = _host(_read(args.host))
    nu = formats.parse_cochain(_read(args.cochain), host)
    ring = args.ring or nu.ring
    res = in_coboundary_span_gf2(nu, host) if ring == GF2 else in_coboundary_span_int(nu, host)
    lines = ["in span" if res.member else "not in span"]
    rec = {"member": res.member, "ring": ring}
    if args.witness and res.member:
        lines += [f"{_label(lab)} * {k}" for lab, k in res.terms]
        rec["terms"] = [[_jlabel(lab), k] for lab, k in res.terms]
    if args.certificate and res.certificate:
        dotted = host.n >= 10
        lines += [formats.format_entry(e, nu.index.ordered, dotted) for e in res.certificate]
        rec["certificate"] = [_cells(e) for e in res.certificate]
    return (0 if res.member else 1), lines, rec


def _label(lab):
    if isinstance(lab[0], int):
        return f"({lab[0]},{formats.format_cell(lab[1])})"
    return "(" + ",".join(formats.format_cell(c) for c in lab) + ")"


def _jlabel(lab):
    if isinstance(lab[0], int):
        return [lab[0], list(lab[1])]
    return _cells(lab)


def cmd_check_drawing(args):
    d = formats.parse_drawing(_read(args.file))
    if d.gp.ok:
        return 0, ["general position"], {"general_position": True}
    w = d.gp.violation
    return 1, [f"not in general position: {w}"], {"general_position": False, "violation": repr(w)}


def cmd_tverberg(args):
    pts = formats.parse_points(_read(args.file))
    ws = tverberg_partitions(pts, args.r)
    if args.count:
        return 0, [str(len(ws))], {"count": len(ws)}
    lines = [f"{w.partition} at {_num(w.common_point.x)} {_num(w.common_point.y)}" for w in ws]
    rec = {"count": len(ws), "witnesses": [
        {"partition": [sorted(b) for b in w.partition.blocks], "point": _pt(w.common_point)} for w in ws]}
    return 0, lines, rec


def cmd_spherical(args):
    if args.file:
        pts = formats.parse_points(_read(args.file))
        w = spherical_tverberg_witness(pts, args.r)
        if w is None:
            return 1, ["no spherical witness"], {"witness": None}
        return 0, [f"{w.partition} at {_num(w.common_point.x)} {_num(w.common_point.y)}"], {
            "witness": {"partition": [sorted(b) for b in w.partition.blocks], "point": _pt(w.common_point)}}
    if args.m is None:
        raise _Usage("spherical needs --m or a points file")
    parts = spherical_partitions(args.m, args.r)
    if args.count:
        return 0, [str(len(parts))], {"count": len(parts)}
    return 0, [str(p) for p in parts], {"count": len(parts), "partitions": [[sorted(b) for b in p.blocks] for p in parts]}


def cmd_ttw(args):
    d = _drawing(args)
    w = topological_tverberg_witness(d)
    if w is None:
        return 1, ["no witness"], {"witness": None}
    text = f"{w.kind}: numbering {' '.join(map(str, w.labels))} at {_num(w.point.x)} {_num(w.point.y)}, windings {list(w.windings)}"
    return 0, [text], {"witness": {"kind": w.kind, "labels": list(w.labels), "point": _pt(w.point),
                                   "windings": list(w.windings)}}


def cmd_triple_vk(args):
    d = _drawing(args)
    total = triple_vk_sum(d, _sign_map(args))
    return 0, [f"{total % 3} (sum {total})"], {"value": total % 3, "sum": total}


def cmd_sign_experiment(args):
    rep = sign_map_experiment(_sign_map(args), args.trials, seed=args.seed, threads=args.threads,
                              bends_per_edge=args.bends)
    hist = ", ".join(f"{k}: {v}" for k, v in rep.histogram.items())
    lines = [f"values mod 3: {hist}", f"constant: {'yes' if rep.constant else 'no'}",
             f"nonzero: {'yes' if rep.nonzero else 'no'}"]
    rec = {"trials": args.trials, "seed": args.seed, "values": list(rep.values), "sums": list(rep.sums),
           "histogram": {str(k): v for k, v in rep.histogram.items()},
           "constant": rep.constant, "nonzero": rep.nonzero}
    return 0, lines, rec


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print a machine-readable record")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--threads", type=int, default=1)

    p = argparse.ArgumentParser(prog="vankampen", description="Planarity, intersection cocycles and Tverberg partitions.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(fn=fn)
        return sp

    for name, hyper in (("planarity", False), ("planarity-hyper", True)):
        sp = add(name, cmd_planarity, "decide planarity via the GF(2) system")
        sp.add_argument("file")
        sp.add_argument("--ordering", help="vertex order of the convex reference drawing")
        sp.add_argument("--witness", action="store_true")
        sp.add_argument("--certificate", action="store_true")
        sp.set_defaults(hyper=hyper)

    add("vk-number", cmd_vk_number, "van Kampen number of a drawing").add_argument("file")
    add("radon-number", cmd_radon_number, "Radon number of a drawing of K4").add_argument("file")

    sp = add("cocycle", cmd_cocycle, "dump the intersection cocycle of a drawing")
    sp.add_argument("file")
    sp.add_argument("--ring", choices=(GF2, Z), default=GF2)
    sp.add_argument("--r", type=int, default=2)

    sp = add("coboundary-span", cmd_coboundary_span, "is a cochain a sum of elementary coboundaries")
    sp.add_argument("host", help="graph or hypergraph file")
    sp.add_argument("cochain", help="cochain dump")
    sp.add_argument("--ring", choices=(GF2, Z))
    sp.add_argument("--witness", action="store_true")
    sp.add_argument("--certificate", action="store_true")

    add("check-drawing", cmd_check_drawing, "general position check").add_argument("file")

    sp = add("tverberg", cmd_tverberg, "Tverberg partitions of a point set")
    sp.add_argument("file")
    sp.add_argument("--r", type=int, default=3)
    sp.add_argument("--count", action="store_true")

    sp = add("spherical", cmd_spherical, "spherical partitions, or a spherical witness for a point file")
    sp.add_argument("file", nargs="?")
    sp.add_argument("--m", type=int)
    sp.add_argument("--r", type=int, default=3)
    sp.add_argument("--count", action="store_true")

    for name, fn, help_ in (("ttw", cmd_ttw, "topological Tverberg witness for a drawing of K7"),
                            ("triple-vk", cmd_triple_vk, "triple van Kampen number mod 3")):
        sp = add(name, fn, help_)
        sp.add_argument("drawing", nargs="?", help="drawing file; a seeded random K7 drawing if omitted")
        sp.add_argument("--bends", type=int, default=1)
        if name == "triple-vk":
            sp.add_argument("--sign-map")
            sp.add_argument("--chessboard", action="store_true", help="experimental chessboard sign map")

    sp = add("sign-experiment", cmd_sign_experiment, "evaluate a sign map on random drawings of K7")
    sp.add_argument("--sign-map")
    sp.add_argument("--chessboard", action="store_true")
    sp.add_argument("--trials", type=int, default=10)
    sp.add_argument("--bends", type=int, default=1)
    return p


def _emit(args, status, lines, rec):
    if args.json:
        out = {"schema": SCHEMA, "command": args.command, "status": status, "result": rec}
        print(json.dumps(out, sort_keys=True))
    else:
        for line in lines:
            print(line)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        status, lines, rec = args.fn(args)
    except Degenerate as exc:
        status, lines, rec = 2, [f"error: {exc}", f"witness: {exc.witness}"], {
            "error": "degenerate", "message": str(exc), "witness": repr(exc.witness)}
    except ParseError as exc:
        status, lines, rec = 2, [f"error: {exc}"], {
            "error": "parse", "message": str(exc), "line": exc.line, "column": exc.column}
    except (VanKampenError, _Usage, ValueError, OSError) as exc:
        status, lines, rec = 2, [f"error: {exc}"], {"error": type(exc).__name__, "message": str(exc)}
    if status == 2 and not args.json:
        for line in lines:
            print(line, file=sys.stderr)
    else:
        _emit(args, status, lines, rec)
    return status


if __name__ == "__main__":
    sys.exit(main())
