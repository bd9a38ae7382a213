"""Radon and Tverberg partitions of planar point sets, computed exactly."""

from vankampen import radon_partition_4, spherical_tverberg_witness, tverberg_partitions
from vankampen.combinatorics import spherical_partitions
from vankampen.geometry import point
from vankampen.tverberg import regular_polygon

triangle_and_inner = [point(0, 0), point(4, 0), point(2, 1), point(2, 5)]
print("Radon partition of", [tuple(map(str, p)) for p in triangle_and_inner], "->", radon_partition_4(triangle_and_inner))

hept = regular_polygon(7)
print()
print("regular heptagon (rational approximation in general position)")
for w in tverberg_partitions(hept, 3):
    print("   ", w.partition, "meet at", tuple(map(str, w.common_point)))

six = [point(0, 0), point(1, 2), point(100, 3), point(99, 0), point(50, 80), point(52, 81)]
print()
print("two points at each corner of a triangle:", len(tverberg_partitions(six, 3)), "partitions")

print()
print("spherical partitions of [6] into 3 blocks:", len(spherical_partitions(6, 3)))
pts = [point(x, y) for x, y in [(0, 4), (5, 4), (15, 19), (3, 17), (1, 10), (16, 16), (17, 15)]]
w = spherical_tverberg_witness(pts, 3)
print("a spherical Tverberg partition of a 7-point set:", w.partition)
