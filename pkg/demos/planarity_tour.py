"""Planarity by linear algebra over GF(2).

Draw the graph with its vertices in convex position, record which pairs of
disjoint edges cross an odd number of times, and ask whether that vector is a
sum of elementary coboundaries (moving a vertex across an edge).  Solvable
means planar.
"""

from vankampen import complete_bipartite, complete_graph, grid_graph, is_planar, petersen_graph, wheel_graph
from vankampen.combinatorics import contains_subdivision
from vankampen.planarity import build_ht_system, check_verdict


def show(name, g):
    system = build_ht_system(g)
    verdict = is_planar(g)
    rows, cols = system.shape
    word = "planar" if verdict else "non-planar"
    proof = "witness" if verdict else "certificate"
    print(f"{name:12s} {rows:4d} equations {cols:4d} unknowns  {word:10s} {proof} checks: {check_verdict(system, verdict)}")
    return verdict


print("Hanani-Tutte systems")
for name, g in [("K4", complete_graph(4)), ("K5", complete_graph(5)), ("K3,3", complete_bipartite(3, 3)),
                ("K5 - edge", complete_graph(5).without_edge((1, 2))), ("Petersen", petersen_graph()),
                ("W6", wheel_graph(6)), ("grid 4x4", grid_graph(4, 4))]:
    show(name, g)

print()
v = is_planar(complete_graph(5))
print("K5 certificate: these equations sum to 0 = 1")
for s, t in v.certificate:
    print("   ", s, t)

print()
print("The Petersen graph contains a subdivided K3,3:")
w = contains_subdivision(petersen_graph(), complete_bipartite(3, 3))
print("    branch vertices", w.branch)
for edge, path in sorted(w.paths.items()):
    print("    ", edge, "->", path)
