"""
Job assignment from determinantal monomials
===========================================

Persons and jobs form a bipartite cgraph whose edge into job v carries
color v. In the persons-by-jobs matrix, each permutation with a nonzero
product of entries is a way to give every person a different job.
"""

from cgraphs import AssignmentMatrix, find_assignments, pad_to_square
from cgraphs.apply import assignment_cgraph

mat = AssignmentMatrix([
    [1, 2, 0, 0],
    [1, 0, 3, 0],
    [0, 2, 0, 4],
    [0, 0, 0, 4],
])
g, persons, jobs = assignment_cgraph(mat)
print(f"bipartite cgraph over GF({g.p}) with {g.n_edges} edges")
for a in find_assignments(mat):
    print("assignment:", ", ".join(a.lines()))

# Two persons, three jobs: a wildcard dummy person soaks up the spare job.
wide = pad_to_square(AssignmentMatrix([[1, 2, 3], [0, 2, 0]]))
print(wide.entries)
for a in find_assignments(wide):
    print("assignment:", ", ".join(a.lines()))
