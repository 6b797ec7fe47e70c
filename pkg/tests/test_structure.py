import random
from itertools import permutations

import pytest
from hypothesis import given

from cgraphs.core import CGraph, ColorPermutation, complete_cgraph, degree, monochromatic_component, pi_complement
from cgraphs.enumeration import labeled_cgraphs
from cgraphs.errors import InvalidArgs, PreconditionViolated, VertexOutOfRange, WhiteColorRequested
from cgraphs.structure import (
    KPath,
    components,
    find_k_cycle,
    find_k_path,
    is_connected,
    is_j_connected,
    max_colored_edges,
    odd_degree_path,
)

from conftest import cgraphs, random_cgraph


def all_k_cycles(g, k):
    """Every k-colored cycle as a vertex sequence starting at its least vertex (both directions)."""
    out = []
    for size in range(3, g.m + 1):
        for seq in permutations(range(g.m), size):
            if seq[0] != min(seq):
                continue
            if all(g.color(seq[i], seq[(i + 1) % size]) == k for i in range(size)):
                out.append(seq)
    return out


def test_components_examples():
    assert components(CGraph.empty(4, 3)) == [[0], [1], [2], [3]]
    assert components(complete_cgraph(5, 2, 3)) == [[0, 1, 2, 3, 4]]
    g = CGraph.from_edges(4, 3, [(0, 2, 1), (1, 3, 2)])
    assert components(g) == [[0, 2], [1, 3]]


def test_is_connected(fano):
    assert is_connected(CGraph.empty(1, 3))
    assert is_connected(fano.to_cgraph())
    # a nontrivial partition with no colored edge across it
    g = CGraph.from_edges(5, 3, [(0, 1, 1), (1, 2, 2), (3, 4, 1)])
    assert not is_connected(g)
    left, right = [0, 1, 2], [3, 4]
    assert all(g.color(u, v) == 0 for u in left for v in right)


@given(cgraphs())
def test_components_are_color_blind(g):
    for images in permutations(range(1, g.p)):
        pi = ColorPermutation((0,) + images)
        assert components(pi_complement(g, pi)) == components(g)


def test_find_k_path():
    g = CGraph.from_edges(4, 3, [(0, 1, 1), (1, 2, 1), (2, 3, 2), (0, 3, 2)])
    assert find_k_path(g, 1, 2, 2) == KPath(1, (2,))
    assert find_k_path(g, 1, 0, 1).vertices == (0, 1)
    assert find_k_path(g, 1, 0, 2).vertices == (0, 1, 2)
    assert find_k_path(g, 1, 0, 3) is None  # only reachable through 2-edges
    assert find_k_path(g, 2, 0, 2).vertices == (0, 3, 2)
    with pytest.raises(WhiteColorRequested):
        find_k_path(g, 0, 0, 1)
    with pytest.raises(VertexOutOfRange):
        find_k_path(g, 1, 0, 9)


def test_find_k_path_random_validity():
    rng = random.Random(5)
    for _ in range(300):
        g = random_cgraph(rng, rng.randint(1, 8), 3)
        k, s, t = rng.randint(1, 2), rng.randrange(g.m), rng.randrange(g.m)
        path = find_k_path(g, k, s, t)
        reachable = any(t in block and s in block for block in components(monochromatic_component(g, k)))
        assert (path is not None) == reachable
        if path:
            assert path.is_valid(g) and path.vertices[0] == s and path.vertices[-1] == t


def test_find_k_cycle_examples(fano):
    tri = complete_cgraph(3, 2, 3)
    assert find_k_cycle(tri, 2) == KPath(2, (0, 1, 2), closed=True)
    tree = CGraph.from_edges(5, 3, [(0, 1, 1), (0, 2, 1), (2, 3, 1), (2, 4, 1)])
    assert find_k_cycle(tree, 1) is None
    g = fano.to_cgraph()
    for color, line in enumerate(fano.lines, start=1):
        cyc = find_k_cycle(g, color)
        assert cyc.is_valid(g) and set(cyc.vertices) == set(line)


def test_find_k_cycle_is_shortest_and_least():
    rng = random.Random(9)
    for _ in range(200):
        g = random_cgraph(rng, rng.randint(3, 6), 3, density=0.8)
        cycles = all_k_cycles(g, 1)
        found = find_k_cycle(g, 1)
        if not cycles:
            assert found is None
            continue
        shortest = min(len(c) for c in cycles)
        best = min(c for c in cycles if len(c) == shortest)
        assert found.vertices == best


def test_is_j_connected(fano):
    assert is_j_connected(complete_cgraph(4, 1, 3), 1)
    assert is_j_connected(CGraph.empty(1, 3), 2)
    g = fano.to_cgraph()
    assert not any(is_j_connected(g, j) for j in range(1, 8))


@given(cgraphs())
def test_j_connected_implies_connected(g):
    for j in range(1, g.p):
        if is_j_connected(g, j):
            assert is_connected(g)


def test_odd_degree_path_examples():
    edge = CGraph.from_edges(3, 5, [(0, 2, 4)])
    assert odd_degree_path(edge).vertices == (0, 2)
    path = CGraph.from_edges(3, 3, [(0, 1, 1), (1, 2, 2)])
    assert odd_degree_path(path).vertices == (0, 1, 2)
    with pytest.raises(PreconditionViolated):
        odd_degree_path(complete_cgraph(4, 1, 3))


def test_odd_degree_path_random():
    rng = random.Random(21)
    checked = 0
    while checked < 1000:
        g = random_cgraph(rng, rng.randint(2, 8), rng.choice([3, 5]), density=rng.random())
        odd = [v for v in range(g.m) if degree(g, v) % 2]
        assert len(odd) % 2 == 0
        if len(odd) != 2:
            continue
        path = odd_degree_path(g)
        assert path.is_valid(g)
        assert {path.vertices[0], path.vertices[-1]} == set(odd)
        checked += 1


def test_max_colored_edges():
    assert max_colored_edges(7, 1) == 21
    assert max_colored_edges(5, 5) == 0
    with pytest.raises(InvalidArgs):
        max_colored_edges(3, 0)
    with pytest.raises(InvalidArgs):
        max_colored_edges(3, 4)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_bound_holds_exhaustively(n):
    for g in labeled_cgraphs(n, 3):
        assert g.n_edges <= max_colored_edges(n, len(components(g)))
