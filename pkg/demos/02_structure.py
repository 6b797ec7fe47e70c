"""
Monochromatic pieces, paths and components
==========================================

Splitting a cgraph by color gives one ordinary graph per color. Paths and
cycles inside a single color class, and connectivity that ignores color,
are the basic structural questions.
"""

from cgraphs import (
    CGraph,
    components,
    degree,
    find_k_cycle,
    find_k_path,
    is_j_connected,
    max_colored_edges,
    monochromatic_component,
    odd_degree_path,
)

g = CGraph.from_edges(
    6, 3,
    [(0, 1, 1), (1, 2, 1), (0, 2, 1), (2, 3, 2), (3, 4, 2), (4, 5, 1)],
)
for color in (1, 2):
    print(f"color {color} edges:", monochromatic_component(g, color).edges())

# Color-blind components and color-aware paths.
print("components:", components(g))
print("1-path 0 -> 2:", find_k_path(g, 1, 0, 2).vertices)
print("1-path 0 -> 5:", find_k_path(g, 1, 0, 5))
print("shortest 1-cycle:", find_k_cycle(g, 1).vertices)
print("every pair joined in color 1?", is_j_connected(g, 1))

# With exactly two odd-degree vertices, some path joins them.
odd = [v for v in range(g.m) if degree(g, v) % 2]
print("odd vertices", odd, "joined by", odd_degree_path(g).vertices)

# More components means fewer possible edges: with k components an n-vertex
# cgraph has at most (n-k)(n-k+1)/2 colored edges.
for k in range(1, 7):
    print(f"n=6, k={k}: edge bound {max_colored_edges(6, k)}")
