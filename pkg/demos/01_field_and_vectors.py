"""
Colors as field elements, cgraphs as vectors
============================================

Every color is an element of GF(p), with 0 standing for "no edge". An
m-vertex cgraph is then a vector in GF(p)^q with one coordinate per vertex
pair, and addition or scaling of cgraphs is ordinary vector arithmetic.
"""

from cgraphs import CGraph, CVector, classify_relative, make_modulus, scalar_mul, to_vector, vector_add

# Arithmetic in GF(5): every nonzero element has an inverse.
f5 = make_modulus(5)
for x in f5.elements()[1:]:
    print(f"{x.value} * {x.inverse().value} = {(x * x.inverse()).value} (mod 5)")

# A path with two colors over GF(3), read as a vector in GF(3)^3.
# Coordinates follow the pairs (0,1), (0,2), (1,2).
g = CGraph.from_edges(3, 3, [(0, 1, 1), (1, 2, 2)])
h = CGraph.from_edges(3, 3, [(0, 1, 2), (0, 2, 1)])
print("g =", to_vector(g).entries)
print("h =", to_vector(h).entries)
print("g + h =", vector_add(to_vector(g), to_vector(h)).entries)
print("2g =", scalar_mul(2, to_vector(g)).entries)

# Comparing two vectors coordinatewise tells whether one cgraph sits "below"
# the other (every color no larger) or neither.
vg = CVector(3, (1, 1))
for w in [(0, 0), (1, 1), (2, 2), (2, 0)]:
    print(f"(1, 1) against {w}: {classify_relative(vg, CVector(3, w)).value}")
