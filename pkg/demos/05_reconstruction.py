"""
Decks and the search for reconstruction counterexamples
=======================================================

Deleting each vertex in turn gives a deck of cards. Two cgraphs that are
not cisomorphic but have the same deck would refute reconstruction for
cgraphs. We look for such pairs exhaustively among small cases.
"""

from cgraphs import CGraph, conjecture_search, edge_deck, vertex_deck
from cgraphs.reconstruct import edge_count_from_deck

g = CGraph.from_edges(4, 3, [(0, 1, 1), (1, 2, 2), (2, 3, 1), (0, 3, 2)])
deck = vertex_deck(g)
print("vertex deck:", deck.lines())
print("edges recovered from the deck:", edge_count_from_deck(deck, g.m), "actual:", g.n_edges)
print("edge deck:", edge_deck(g).lines())

for n, p, mode in [(4, 2, "vertex"), (4, 3, "vertex"), (5, 2, "vertex"), (4, 3, "edge")]:
    report = conjecture_search(n, p, mode)
    print(report.lines()[0], "->", report.lines()[-1])
