"""
Relabeling, canonical codes and witnesses
=========================================

Two cgraphs are cisomorphic when a vertex relabeling carries one onto the
other with every color preserved. A canonical code (the smallest color
string over all relabelings) decides this, and a direct search produces an
explicit relabeling as a witness.
"""

import random

from cgraphs import (
    CGraph,
    ColorPermutation,
    apply_vertex_perm,
    canonical_code,
    cautomorphisms,
    cisomorphic,
    complement_commutes_check,
    permutation_matrix,
    pi_complement,
)

rng = random.Random(1)
colors = [rng.choice([0, 1, 2]) for _ in range(21)]
g = CGraph(7, 3, colors)
sigma = list(range(7))
rng.shuffle(sigma)
h = apply_vertex_perm(g, sigma)

print("code of g:", canonical_code(g))
print("code of h:", canonical_code(h))

witness = cisomorphic(g, h)
print("witness:", witness)
m = permutation_matrix(witness.images)
print("A(g) == M A(h) M^T:", (g.matrix() == m @ h.matrix() @ m.T).all())

# Swapping the colors of a path's two edges gives a cgraph that no relabeling
# can match, since the colors are labels rather than interchangeable.
p11 = CGraph.from_edges(3, 3, [(0, 1, 1), (1, 2, 1)])
p12 = CGraph.from_edges(3, 3, [(0, 1, 1), (1, 2, 2)])
print("path(1,1) vs path(1,2):", cisomorphic(p11, p12))
print("automorphisms of path(1,2):", [str(a) for a in cautomorphisms(p12)])

# Recoloring through a color permutation commutes with cisomorphism.
swap = ColorPermutation.fixing_white(3, {1: 2, 2: 1})
print("complement of path(1,2):", pi_complement(p12, swap).edges())
print("commutes:", complement_commutes_check(g, h, swap))
