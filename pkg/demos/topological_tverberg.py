"""Topological Tverberg for K7 drawn in the plane, and the triple number.

Every general-position drawing of K7 has either a vertex inside two disjoint
triangles, or a crossing of two disjoint edges inside the remaining triangle.
The triple van Kampen number is an open problem: which signs on spherical
partitions make it a drawing invariant that is nonzero mod 3?  The demo runs
the experiment harness; it does not claim that any sign map works.
"""

from collections import Counter

from vankampen import SignMap, complete_graph, random_general_position_drawing, sign_map_experiment
from vankampen.tverberg import chessboard_sign_map, check_topological_witness, topological_tverberg_witness

K7 = complete_graph(7)
kinds = Counter()
for seed in range(30):
    d = random_general_position_drawing(K7, seed, bends_per_edge=2)
    w = topological_tverberg_witness(d)
    assert check_topological_witness(d, w)
    kinds[w.kind] += 1
    if seed < 3:
        print(f"drawing {seed}: {w.kind} witness {w.partition} at {tuple(map(str, w.point))}")
print("witness kinds over 30 drawings:", dict(kinds))

print()
for name, s in [("all +1", SignMap.constant(1)), ("chessboard", chessboard_sign_map())]:
    rep = sign_map_experiment(s, 20, seed=7)
    print(f"{name:10s} values mod 3 {rep.histogram}  constant: {rep.constant}")
