import random
from itertools import permutations, product
from math import prod

import numpy as np
import pytest
from hypothesis import given, settings

from cgraphs.core import (
    CDigraph,
    CGraph,
    ColorPermutation,
    CVector,
    Relation,
    adjacency_matrix,
    adjacency_matrix_directed,
    add_edge,
    classify_relative,
    complete_cgraph,
    degree,
    delete_edge,
    delete_vertex,
    from_matrix,
    from_vector,
    is_j_complete,
    is_k_bipartite,
    is_k_independent,
    k_complete_bipartite,
    monochromatic_component,
    pair_index,
    pair_list,
    pi_complement,
    scalar_mul,
    subgraph,
    to_vector,
    vector_add,
)
from cgraphs.errors import (
    EdgeAbsent,
    LengthMismatch,
    ModulusMismatch,
    NotAPartition,
    VertexOutOfRange,
    WhiteColorRequested,
)
from cgraphs.field import make_modulus

from conftest import cgraphs, random_cgraph

TRIANGLE = CGraph.from_edges(3, 3, {(0, 1): 1, (1, 2): 2, (0, 2): 1})


def test_pair_index_matches_pair_list():
    for m in range(2, 9):
        for k, (i, j) in enumerate(pair_list(m)):
            assert pair_index(i, j, m) == k
            assert pair_index(j, i, m) == k


def test_construction_rules():
    with pytest.raises(ValueError):
        CGraph.from_edges(3, 3, [(0, 0, 1)])
    with pytest.raises(ValueError):
        CGraph.from_edges(3, 3, [(0, 1, 1), (1, 0, 2)])
    with pytest.raises(ValueError):
        CGraph.from_edges(3, 3, [(0, 1, 3)])
    with pytest.raises(VertexOutOfRange):
        CGraph.from_edges(3, 3, [(0, 3, 1)])
    # white entries are simply absent
    g = CGraph.from_edges(3, 3, [(0, 1, 0), (1, 2, 1)])
    assert g.edges() == [(1, 2, 1)]
    f = make_modulus(3)
    assert CGraph.from_edges(2, 3, [(0, 1, f(2))]).color(1, 0) == 2


def test_adjacency_matrix_examples():
    assert np.array_equal(adjacency_matrix(CGraph.empty(3, 3)), np.zeros((3, 3)))
    assert adjacency_matrix(TRIANGLE).tolist() == [[0, 1, 1], [1, 0, 2], [1, 2, 0]]


@given(cgraphs())
def test_adjacency_roundtrip(g):
    a = adjacency_matrix(g)
    assert np.array_equal(a, a.T)
    assert not np.any(np.diag(a))
    assert from_matrix(a, g.p) == g


def test_from_matrix_rejects_bad_input():
    with pytest.raises(ValueError):
        from_matrix([[0, 1], [2, 0]], 3)
    with pytest.raises(ValueError):
        from_matrix([[1, 0], [0, 0]], 3)


def test_directed_adjacency():
    d = CDigraph.from_arcs(2, 3, [(0, 1, 2)])
    assert adjacency_matrix_directed(d).tolist() == [[0, 2], [0, 0]]
    d = CDigraph.from_arcs(2, 3, {(0, 1): 1, (1, 0): 2})
    assert adjacency_matrix_directed(d).tolist() == [[0, 1], [2, 0]]
    sym = CDigraph.from_arcs(3, 5, [(0, 1, 4), (1, 0, 4), (1, 2, 3), (2, 1, 3)])
    a = adjacency_matrix_directed(sym)
    assert np.array_equal(a, a.T)
    with pytest.raises(ValueError):
        CDigraph.from_arcs(2, 3, [(1, 1, 1)])


def test_monochromatic_component():
    g1 = monochromatic_component(TRIANGLE, 1)
    assert g1.edges() == [(0, 1, 1), (0, 2, 1)]
    assert monochromatic_component(CGraph.from_edges(3, 5, [(0, 1, 1)]), 4) == CGraph.empty(3, 5)
    with pytest.raises(WhiteColorRequested):
        monochromatic_component(TRIANGLE, 0)


@given(cgraphs(min_m=2))
def test_decomposition_sums_to_whole(g):
    parts = [adjacency_matrix(monochromatic_component(g, j)) for j in range(1, g.p)]
    assert np.array_equal(sum(parts), adjacency_matrix(g))
    support = sum((a != 0).astype(int) for a in parts)
    assert support.max(initial=0) <= 1


def test_degree():
    assert degree(CGraph.empty(3, 3), 0) == 0
    star = CGraph.from_edges(4, 3, [(0, 1, 1), (0, 2, 2), (0, 3, 1)])
    assert degree(star, 0) == 3
    with pytest.raises(VertexOutOfRange):
        degree(star, 4)


def test_handshake_on_random_samples():
    rng = random.Random(7)
    for _ in range(300):
        g = random_cgraph(rng, rng.randint(1, 8), rng.choice([2, 3, 5]))
        assert sum(degree(g, v) for v in range(g.m)) == 2 * g.n_edges


def test_j_complete(fano):
    k3 = complete_cgraph(3, 1, 3)
    assert is_j_complete(k3, 1)
    assert not is_j_complete(k3, 2)
    assert is_j_complete(CGraph.empty(1, 3), 2)
    g = fano.to_cgraph()
    for color, line in enumerate(fano.lines, start=1):
        assert is_j_complete(subgraph(g, line), color)


def test_k_independent():
    assert all(is_k_independent(TRIANGLE, [v], k) for v in range(3) for k in range(3))
    k4 = complete_cgraph(4, 2, 5)
    assert all(is_k_independent(k4, range(4), k) for k in (1, 3, 4))
    assert not is_k_independent(k4, range(4), 2)
    assert not is_k_independent(TRIANGLE, [1, 2], 2)


def test_k_bipartite():
    g = CGraph.from_edges(2, 3, [(0, 1, 2)])
    assert is_k_bipartite(g, ([0], [1]), 2)
    assert not is_k_bipartite(g, ([0], [1]), 1)  # needs at least one k-edge
    assert not is_k_bipartite(TRIANGLE, ([0, 1], [2]), 1)  # 1-edge inside a part
    with pytest.raises(NotAPartition):
        is_k_bipartite(TRIANGLE, ([0], [1]), 1)
    with pytest.raises(NotAPartition):
        is_k_bipartite(TRIANGLE, ([0, 1], [1, 2]), 1)


def test_k_complete_bipartite():
    assert k_complete_bipartite((1, 1), 2, 3).edges() == [(0, 1, 2)]
    g = k_complete_bipartite((2, 3), 1, 3)
    assert g.n_edges == 6
    assert [degree(g, v) for v in range(5)] == [3, 3, 2, 2, 2]
    assert is_k_bipartite(g, ([0, 1], [2, 3, 4]), 1)
    with pytest.raises(WhiteColorRequested):
        k_complete_bipartite((1, 2), 0, 3)


def test_subgraph_and_deletions():
    k3 = complete_cgraph(3, 1, 3)
    assert delete_vertex(k3, 1) == CGraph.from_edges(2, 3, [(0, 1, 1)])
    assert subgraph(TRIANGLE, range(3)) == TRIANGLE
    assert subgraph(TRIANGLE, [2, 0]) == CGraph.from_edges(2, 3, [(0, 1, 1)])
    h = delete_edge(TRIANGLE, (2, 1))
    assert h.color(1, 2) == 0
    assert add_edge(h, (1, 2), 2) == TRIANGLE
    with pytest.raises(EdgeAbsent):
        delete_edge(h, (1, 2))
    with pytest.raises(VertexOutOfRange):
        delete_vertex(TRIANGLE, 5)


def test_pi_complement_examples():
    assert pi_complement(TRIANGLE, ColorPermutation.identity(3)) == TRIANGLE
    one_red = CGraph.from_edges(3, 3, [(0, 1, 1)])
    one_blue = CGraph.from_edges(3, 3, [(0, 1, 2)])
    swap = ColorPermutation.fixing_white(3, {1: 2, 2: 1})
    assert pi_complement(one_red, swap) == one_blue
    # moving white creates edges: the ordinary complement for p = 2
    flip = ColorPermutation((1, 0))
    assert pi_complement(CGraph.empty(4, 2), flip) == complete_cgraph(4, 1, 2)


def test_pi_complement_is_a_group_action():
    rng = random.Random(3)
    perms = [ColorPermutation(p) for p in permutations(range(3))]
    assert len(perms) == 6
    for _ in range(50):
        g = random_cgraph(rng, rng.randint(1, 6), 3)
        assert pi_complement(g, ColorPermutation.identity(3)) == g
        for a in perms:
            assert pi_complement(pi_complement(g, a), a.inverse()) == g
            for b in perms:
                assert pi_complement(g, a @ b) == pi_complement(pi_complement(g, b), a)


def test_vectors():
    assert to_vector(CGraph.empty(4, 3)) == CVector.zero(6, 3)
    g = CGraph.from_edges(3, 3, [(0, 1, 1), (0, 2, 2)])
    assert to_vector(g).entries == (1, 2, 0)
    assert from_vector(to_vector(g), 3) == g
    with pytest.raises(LengthMismatch):
        from_vector(CVector(3, (1, 2)), 3)
    u, v = CVector(3, (1, 2, 0)), CVector(3, (2, 2, 1))
    assert vector_add(u, v).entries == (0, 1, 1)
    assert scalar_mul(0, u) == CVector.zero(3, 3)
    assert scalar_mul(1, u) == u
    assert (2 * u).entries == (2, 1, 0)
    with pytest.raises(ModulusMismatch):
        vector_add(u, CVector(5, (1, 2, 0)))
    with pytest.raises(LengthMismatch):
        vector_add(u, CVector(3, (1, 2)))


@settings(max_examples=50)
@given(cgraphs())
def test_vector_roundtrip(g):
    assert from_vector(to_vector(g), g.m) == g


def test_classify_examples():
    vg = CVector(3, (1, 2, 0))
    assert classify_relative(vg, CVector.zero(3, 3)) is Relation.SUBCGRAPH
    assert classify_relative(vg, vg) is Relation.BOTH
    assert classify_relative(vg, CVector(3, (2, 2, 1))) is Relation.SUPERCGRAPH
    assert classify_relative(vg, CVector(3, (0, 2, 1))) is Relation.NEITHER


def _census(vg):
    p = vg.modulus.p
    counts = {r: 0 for r in Relation}
    for w in product(range(p), repeat=len(vg)):
        counts[classify_relative(vg, CVector(vg.modulus, w))] += 1
    return counts


def test_classify_counts_for_11_over_gf3():
    counts = _census(CVector(3, (1, 1)))
    sub = counts[Relation.SUBCGRAPH] + counts[Relation.BOTH]
    sup = counts[Relation.SUPERCGRAPH] + counts[Relation.BOTH]
    assert (sub, sup, counts[Relation.NEITHER], sum(counts.values())) == (4, 4, 2, 9)


def test_classify_counts_match_products():
    rng = random.Random(11)
    for _ in range(40):
        p = rng.choice([2, 3, 5])
        q = rng.randint(1, 6 if p < 5 else 4)
        vg = CVector(p, [rng.randrange(p) for _ in range(q)])
        counts = _census(vg)
        assert counts[Relation.SUBCGRAPH] + counts[Relation.BOTH] == prod(c + 1 for c in vg.entries)
        assert counts[Relation.SUPERCGRAPH] + counts[Relation.BOTH] == prod(p - c for c in vg.entries)
        assert counts[Relation.BOTH] == 1
