import random
from itertools import permutations

import pytest
from hypothesis import strategies as st

from cgraphs.apply import build_projective_plane
from cgraphs.core import CGraph


def random_cgraph(rng: random.Random, m: int, p: int, density: float = 0.6) -> CGraph:
    q = m * (m - 1) // 2
    return CGraph(m, p, [rng.randrange(1, p) if rng.random() < density else 0 for _ in range(q)])


def random_perm(rng: random.Random, m: int) -> list[int]:
    perm = list(range(m))
    rng.shuffle(perm)
    return perm


def brute_relabel(g: CGraph, sigma) -> CGraph:
    """Relabeling written out from the definition: {sigma(i), sigma(j)} gets the color of {i, j}."""
    edges = {(sigma[u], sigma[v]): c for u, v, c in g.edges()}
    return CGraph.from_edges(g.m, g.p, edges)


def brute_min_code(g: CGraph) -> tuple[int, ...]:
    """Least upper-triangle color string over all m! relabelings."""
    return min(brute_relabel(g, sigma).colors for sigma in permutations(range(g.m)))


@st.composite
def cgraphs(draw, min_m=1, max_m=6, primes=(2, 3, 5)):
    m = draw(st.integers(min_m, max_m))
    p = draw(st.sampled_from(primes))
    colors = draw(st.lists(st.integers(0, p - 1), min_size=m * (m - 1) // 2, max_size=m * (m - 1) // 2))
    return CGraph(m, p, colors)


@pytest.fixture(scope="session")
def fano():
    return build_projective_plane(2)


@pytest.fixture(scope="session")
def plane3():
    return build_projective_plane(3)


# acceptance lines collected by test_acceptance.py, echoed after the run
ACCEPTANCE: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
