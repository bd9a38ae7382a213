"""Exact invariants of planar drawings: intersection cocycles, van Kampen and
Radon numbers, Hanani-Tutte planarity over GF(2), and Tverberg partitions."""

from .combinatorics import (Graph, Hypergraph2, Partition, complete_2_hypergraph, complete_bipartite,
                            complete_graph, contains_subdivision, cycle_graph, grid_graph, is_spherical,
                            pair_index, petersen_graph, spherical_partitions, subdivide, wheel_graph)
from .cohomology import (cochain_difference_in_span, elementary_coboundary, in_coboundary_span_gf2,
                         in_coboundary_span_int, r_fold_elementary_coboundary)
from .drawings import (GF2, Z, Cochain, Drawing, canonical_convex_drawing, integral_intersection_cocycle,
                       intersection_cocycle_mod2, make_drawing, r_fold_intersection_cocycle,
                       r_fold_intersection_number, radon_number, random_general_position_drawing,
                       van_kampen_number)
from .errors import (BadProfile, BadSize, Degenerate, Exhausted, HostMismatch, Incidence, IndexMismatch,
                     NotCrossing, OnCurve, ParseError, TooLarge, VanKampenError)
from .geometry import (Point, Polyline, algebraic_intersection_number, crossing_count, crossing_sign,
                       general_position, orient, point, winding_number)
from .planarity import build_ht_system, build_ht_system_hyper, is_planar, is_planar_hyper
from .tverberg import (SignMap, TverbergWitness, radon_partition_4, sign_map_experiment,
                       spherical_tverberg_witness, topological_tverberg_witness, triple_vk_number,
                       tverberg_partitions)

__version__ = "0.1.0"
