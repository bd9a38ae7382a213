import json
import subprocess
import sys
from pathlib import Path

from vankampen.cli import main
from vankampen.combinatorics import complete_graph
from vankampen.drawings import random_general_position_drawing
from vankampen.formats import format_drawing, parse_cochain

from conftest import DATA as _DATA

DATA = Path(_DATA)


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_planarity_examples(capsys):
    code, out, _ = run(capsys, "planarity", DATA / "k5.graph")
    assert (code, out.strip()) == (1, "non-planar")
    code, out, _ = run(capsys, "planarity", DATA / "petersen.graph")
    assert (code, out.strip()) == (1, "non-planar")
    code, out, _ = run(capsys, "planarity", DATA / "w6.graph", "--witness")
    assert code == 0 and out.splitlines()[0] == "planar"
    code, out, _ = run(capsys, "planarity", DATA / "k5.graph", "--certificate")
    assert out.splitlines()[1].startswith("{")
    for name in ("simplex3.hyper", "simplex4.hyper"):
        code, out, _ = run(capsys, "planarity-hyper", DATA / name)
        assert (code, out.strip()) == (1, "non-planar")


def test_planar_hypergraph(capsys, tmp_path):
    f = tmp_path / "strip.hyper"
    f.write_text("4\n1 2 3\n2 3 4\n")
    code, out, _ = run(capsys, "planarity-hyper", f, "--witness")
    assert code == 0 and out.splitlines()[0] == "planar"


def test_counting_examples(capsys):
    assert run(capsys, "tverberg", DATA / "heptagon.points", "--r", 3, "--count")[:2] == (0, "7\n")
    assert run(capsys, "tverberg", DATA / "four-partitions.points", "--r", 3, "--count")[:2] == (0, "4\n")
    assert run(capsys, "spherical", "--m", 6, "--r", 3, "--count")[:2] == (0, "216\n")


def test_numbers(capsys):
    code, out, _ = run(capsys, "vk-number", DATA / "k5-random.drawing")
    assert code == 0 and int(out) % 2 == 1
    code, out, _ = run(capsys, "radon-number", DATA / "k4-random.drawing")
    assert code == 0 and int(out) % 2 == 1
    assert run(capsys, "check-drawing", DATA / "k7-random.drawing")[:2] == (0, "general position\n")


def test_bad_input_exits_2(capsys, tmp_path):
    bad = tmp_path / "bad.points"
    bad.write_text("0 0\n1 zz\n")
    code, out, err = run(capsys, "tverberg", bad, "--r", 3)
    assert code == 2 and out == "" and "line 2" in err
    assert run(capsys, "planarity", tmp_path / "missing.graph")[0] == 2
    deg = tmp_path / "deg.drawing"
    deg.write_text("4\nvertex 1: 0 0\nvertex 2: 1 1\nvertex 3: 2 2\nvertex 4: 5 0\n"
                   "edge 1 2:\nedge 3 4:\n")
    code, _, err = run(capsys, "check-drawing", deg)
    assert code == 1
    code, _, err = run(capsys, "vk-number", deg)
    assert code == 2 and err
    assert run(capsys, "spherical")[0] == 2
    assert run(capsys, "planarity")[0] == 2


def test_json_schema_and_errors(capsys, tmp_path):
    code, out, _ = run(capsys, "planarity", DATA / "k33.graph", "--json")
    rec = json.loads(out)
    assert code == 1 and rec["schema"] == "vankampen/1" and rec["command"] == "planarity"
    assert rec["result"]["planar"] is False
    bad = tmp_path / "bad.graph"
    bad.write_text("3\n1 4\n")
    code, out, _ = run(capsys, "planarity", bad, "--json")
    rec = json.loads(out)
    assert code == 2 and rec["status"] == 2 and "error" in json.dumps(rec)


def test_json_output_is_deterministic(capsys):
    argv = ["sign-experiment", "--trials", 4, "--seed", 11, "--json"]
    _, a, _ = run(capsys, *argv)
    _, b, _ = run(capsys, *argv, "--threads", 2)
    assert a == b
    rec = json.loads(a)
    assert len(rec["result"]["values"]) == 4
    _, c, _ = run(capsys, "ttw", "--seed", 5, "--json")
    _, d, _ = run(capsys, "ttw", "--seed", 5, "--json")
    assert c == d and json.loads(c)["result"]["witness"] is not None


def test_cocycle_dump_round_trip(capsys, tmp_path):
    for ring in ("GF2", "Z"):
        code, out, _ = run(capsys, "cocycle", DATA / "k5-random.drawing", "--ring", ring)
        c = parse_cochain(out, complete_graph(5))
        assert code == 0 and c.ring == ring
        dump = tmp_path / f"k5-{ring}.cochain"
        dump.write_text(out)
        code, out, _ = run(capsys, "coboundary-span", DATA / "k5.graph", dump, "--certificate")
        assert code == 1 and out.startswith("not in span")
    code, out, _ = run(capsys, "coboundary-span", DATA / "k4.graph", DATA / "k4-convex.cochain", "--witness")
    assert code == 0 and out.splitlines()[0] == "in span" and len(out.splitlines()) > 1


def test_ttw_on_file_and_triple(capsys, tmp_path):
    f = tmp_path / "k7.drawing"
    f.write_text(format_drawing(random_general_position_drawing(complete_graph(7), 9, bends_per_edge=1)))
    code, out, _ = run(capsys, "ttw", f)
    assert code == 0 and out.startswith(("vertex", "crossing"))
    code, out, _ = run(capsys, "triple-vk", f, "--sign-map", DATA / "chessboard.signs")
    code2, out2, _ = run(capsys, "triple-vk", f, "--chessboard")
    assert code == code2 == 0 and out == out2


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "vankampen", "spherical", "--m", "6", "--count"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip() == "216"
