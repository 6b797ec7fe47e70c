"""
Counting cgraphs up to relabeling
=================================

Relabeling vertices permutes the vertex pairs, and Polya's theorem turns
the cycle structure of that pair action into a polynomial counting the
unlabeled cgraphs by how many edges carry each color.
"""

from cgraphs import (
    burnside_oracle,
    census,
    configuration_series,
    count_unlabeled,
    figure_series,
    pair_group_cycle_index,
)

# The pair group on three vertices.
print("Z(R_3) =", pair_group_cycle_index(3))
print("Z(R_4) =", pair_group_cycle_index(4))

# One edge slot can be white, red (x) or blue (y).
print("A =", figure_series(3))

# Substituting into the cycle index counts triangles by color content.
series = configuration_series(3, 3)
print("B =", series)
print("types on 3 vertices with 2 colors:", series.total())

# Three independent routes to the same numbers.
for n, p in [(3, 3), (4, 2), (4, 3), (5, 2)]:
    print(
        f"n={n} p={p}: polya={count_unlabeled(n, p)} "
        f"burnside={burnside_oracle(n, p)} census={len(census(n, p))}"
    )

# Ordinary graphs are the case p = 2.
print("graphs on 1..8 vertices:", [count_unlabeled(n, 2) for n in range(1, 9)])
