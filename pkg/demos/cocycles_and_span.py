"""Intersection cocycles of drawings and the coboundary span.

Different drawings of the same graph give cocycles that differ by a
combination of elementary coboundaries.  Whether the cocycle itself is such a
combination is the van Kampen obstruction.
"""

from vankampen import (GF2, Z, complete_2_hypergraph, complete_graph, in_coboundary_span_gf2,
                       in_coboundary_span_int, integral_intersection_cocycle, intersection_cocycle_mod2,
                       random_general_position_drawing, van_kampen_number)
from vankampen.cohomology import cochain_difference_in_span
from vankampen.formats import format_cochain

K5 = complete_graph(5)
d1 = random_general_position_drawing(K5, 1, bends_per_edge=2)
d2 = random_general_position_drawing(K5, 2, bends_per_edge=2)

print("mod-2 cocycle of a random drawing of K5:")
print(format_cochain(intersection_cocycle_mod2(d1)))
print("van Kampen numbers of two drawings:", van_kampen_number(d1), van_kampen_number(d2))

diff = cochain_difference_in_span(d1, d2, GF2)
print("their difference is a sum of", len(diff.terms), "elementary coboundaries (mod 2)")
res = cochain_difference_in_span(d1, d2, Z)
print("integral difference:", " + ".join(f"{k}*{lab}" for lab, k in res.terms))

nu = integral_intersection_cocycle(d1)
print()
print("the cocycle itself is in the span mod 2:", bool(in_coboundary_span_gf2(nu.mod2(), K5)))
print("over Z:", bool(in_coboundary_span_int(nu, K5)))
print("twice the cocycle, over Z:", bool(in_coboundary_span_int(nu.scale(2), K5)))

D3 = complete_2_hypergraph(3)
nu = integral_intersection_cocycle(random_general_position_drawing(D3, 3, bends_per_edge=1))
print()
print("boundary of the tetrahedron drawn in the plane")
print("  cocycle in span:", bool(in_coboundary_span_int(nu, D3)),
      " doubled cocycle in span:", bool(in_coboundary_span_int(nu.scale(2), D3)))
