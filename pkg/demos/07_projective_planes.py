"""
Projective planes as tight packings
===================================

Color each pair of points of a projective plane by the line through them.
Every line becomes a monochromatic complete cgraph, and every pair of
points is covered by exactly one of them.
"""

from cgraphs import build_projective_plane, monochromatic_clique_census, triangle_census, verify_packing

fano = build_projective_plane(2)
print("Fano lines:", [sorted(line) for line in fano.lines])
g = fano.to_cgraph()
print("packing check:", verify_packing(g).lines()[0])
total, mono, rainbow, other = triangle_census(g)
print(f"{total} triangles, {mono} monochromatic, {rainbow} with three colors, {other} other")

plane = build_projective_plane(3)
g3 = plane.to_cgraph()
k4 = monochromatic_clique_census(g3, 4)
print("order 3:", verify_packing(g3).lines()[0], "with K4 counts", [k4[j] for j in range(1, 14)])

# Breaking one edge's color breaks the packing.
coloring = dict(fano.coloring)
coloring[(0, 1)] = coloring[(0, 1)] % 7 + 1
broken = type(fano)(fano.order, fano.points, fano.lines, coloring)
print("after recoloring one edge:", verify_packing(broken).lines()[0])
