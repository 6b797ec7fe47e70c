"""Cisomorphism: relabelings, canonical codes, witnesses and cautomorphism groups.

Everything here is exact brute force over vertex relabelings, cut down by
color-refinement and twin pruning. That is plenty for desk-scale cgraphs
(m <= 10 by default); larger inputs raise :class:`TooLarge` instead of
quietly running for hours.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

import numpy as np

from .core import CGraph, ColorPermutation, pair_list, pi_complement
from .errors import ModulusMismatch, SizeMismatch, TooLarge

__all__ = [
    "DEFAULT_SEARCH_LIMIT",
    "VertexPermutation",
    "CanonicalCode",
    "apply_vertex_perm",
    "permutation_matrix",
    "canonical_code",
    "canonical_labeling",
    "cisomorphic",
    "is_witness",
    "cautomorphisms",
    "complement_commutes_check",
]

DEFAULT_SEARCH_LIMIT = 10


@dataclass(frozen=True)
class VertexPermutation:
    """A bijection on 0..m-1 given by its image list: ``images[i]`` is sigma(i)."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"{images} is not a permutation of 0..{len(images) - 1}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, m: int) -> VertexPermutation:
        return cls(tuple(range(m)))

    def __len__(self):
        return len(self.images)

    def __call__(self, v: int) -> int:
        return self.images[v]

    def inverse(self) -> VertexPermutation:
        inv = [0] * len(self.images)
        for i, x in enumerate(self.images):
            inv[x] = i
        return VertexPermutation(tuple(inv))

    def compose(self, other: VertexPermutation) -> VertexPermutation:
        """``self . other``: apply ``other`` first."""
        return VertexPermutation(tuple(self.images[x] for x in other.images))

    def matrix(self) -> np.ndarray:
        return permutation_matrix(self)

    def __str__(self):
        return " ".join(map(str, self.images))


PermLike = Union[VertexPermutation, Sequence[int]]


def _perm(sigma: PermLike) -> VertexPermutation:
    return sigma if isinstance(sigma, VertexPermutation) else VertexPermutation(tuple(sigma))


def permutation_matrix(sigma: PermLike) -> np.ndarray:
    """0/1 matrix with ``M[i, sigma(i)] = 1``.

    With this convention, if H = apply_vertex_perm(G, sigma) then
    A(G) = M A(H) M^T.
    """
    sigma = _perm(sigma)
    m = len(sigma)
    mat = np.zeros((m, m), dtype=np.int64)
    mat[np.arange(m), sigma.images] = 1
    return mat


def apply_vertex_perm(g: CGraph, sigma: PermLike) -> CGraph:
    """Relabel vertex i as sigma(i): pair {sigma(i), sigma(j)} gets the color of {i, j}."""
    sigma = _perm(sigma)
    if len(sigma) != g.m:
        raise SizeMismatch(f"permutation on {len(sigma)} symbols, cgraph on {g.m} vertices")
    inv = sigma.inverse().images
    a = _full_matrix(g)
    return CGraph(g.m, g.modulus, tuple(a[inv[i]][inv[j]] for i, j in pair_list(g.m)))


def _full_matrix(g: CGraph) -> list[list[int]]:
    a = [[0] * g.m for _ in range(g.m)]
    for (i, j), c in zip(pair_list(g.m), g.colors):
        a[i][j] = a[j][i] = c
    return a


def _check_limit(m: int, limit: Optional[int]) -> None:
    limit = DEFAULT_SEARCH_LIMIT if limit is None else limit
    if m > limit:
        raise TooLarge(f"{m} vertices exceeds the search limit {limit}")


@dataclass(frozen=True, order=True)
class CanonicalCode:
    """Least row-major upper-triangle color string over all relabelings."""

    p: int
    m: int
    colors: tuple[int, ...]

    def __str__(self):
        sep = "" if self.p <= 10 else ","
        return sep.join(map(str, self.colors))

    @property
    def n_edges(self) -> int:
        return sum(1 for c in self.colors if c)

    def to_cgraph(self) -> CGraph:
        return CGraph(self.m, self.p, self.colors)


def _twin_classes(a: list[list[int]]) -> list[int]:
    """Class id per vertex; u, w share a class iff they see every other vertex in the same color."""
    m = len(a)
    cls = list(range(m))
    for u in range(m):
        if cls[u] != u:
            continue
        for w in range(u + 1, m):
            if cls[w] == w and all(a[u][x] == a[w][x] for x in range(m) if x != u and x != w):
                cls[w] = u
    return cls


def _canonical_search(g: CGraph) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Return (least color string, an ordering achieving it).

    ``order[k]`` is the original vertex placed at position k. The vertex at
    position k fixes row k of the upper triangle; the remaining vertices sit
    in ordered cells whose members are interchangeable so far, so row k is
    least when each cell is sorted by color to the new vertex. That makes the
    refinement forced, and the only branching is which vertex of the first
    cell goes next.
    """
    m = g.m
    a = _full_matrix(g)
    twins = _twin_classes(a)
    best: list[Optional[list[int]]] = [None]
    best_order: list[tuple[int, ...]] = [()]
    cur: list[int] = []
    order: list[int] = []

    def search(cells: list[list[int]]) -> None:
        if not cells:
            if best[0] is None or cur < best[0]:
                best[0] = list(cur)
                best_order[0] = tuple(order)
            return
        tried = set()
        for v in cells[0]:
            if twins[v] in tried:
                continue
            tried.add(twins[v])
            av = a[v]
            row = []
            new_cells = []
            for idx, cell in enumerate(cells):
                members = [x for x in cell if x != v] if idx == 0 else cell
                if not members:
                    continue
                split: dict[int, list[int]] = {}
                for x in members:
                    split.setdefault(av[x], []).append(x)
                for color in sorted(split):
                    part = split[color]
                    row.extend([color] * len(part))
                    new_cells.append(part)
            start = len(cur)
            cur.extend(row)
            if best[0] is None or cur <= best[0][: len(cur)]:
                order.append(v)
                search(new_cells)
                order.pop()
            del cur[start:]

    search([list(range(m))])
    return tuple(best[0]), best_order[0]


def canonical_code(g: CGraph, limit: Optional[int] = None) -> CanonicalCode:
    """Orbit invariant of g: equal codes iff the cgraphs are cisomorphic."""
    _check_limit(g.m, limit)
    colors, _ = _canonical_search(g)
    return CanonicalCode(g.p, g.m, colors)


def canonical_labeling(g: CGraph, limit: Optional[int] = None) -> VertexPermutation:
    """A sigma with ``apply_vertex_perm(g, sigma)`` equal to the canonical form."""
    _check_limit(g.m, limit)
    _, order = _canonical_search(g)
    # order[k] = vertex placed at position k, so sigma = order^{-1}
    return VertexPermutation(tuple(order)).inverse()


def _incident_profile(a: list[list[int]]) -> list[tuple[int, ...]]:
    return [tuple(sorted(row[:v] + row[v + 1 :])) for v, row in enumerate(a)]


def _matchings(g: CGraph, h: CGraph, first_only: bool) -> list[VertexPermutation]:
    """Color-preserving bijections V(g) -> V(h) in lexicographic order."""
    m = g.m
    ag, ah = _full_matrix(g), _full_matrix(h)
    pg, ph = _incident_profile(ag), _incident_profile(ah)
    sigma = [-1] * m
    used = [False] * m
    found: list[VertexPermutation] = []

    def extend(i: int) -> bool:
        if i == m:
            found.append(VertexPermutation(tuple(sigma)))
            return first_only
        row = ag[i]
        for x in range(m):
            if used[x] or pg[i] != ph[x]:
                continue
            hx = ah[x]
            if any(hx[sigma[j]] != row[j] for j in range(i)):
                continue
            sigma[i] = x
            used[x] = True
            if extend(i + 1):
                return True
            used[x] = False
        sigma[i] = -1
        return False

    extend(0)
    return found


def cisomorphic(g: CGraph, h: CGraph, limit: Optional[int] = None) -> Optional[VertexPermutation]:
    """Lexicographically least cisomorphism sigma: V(g) -> V(h), or None.

    A returned sigma satisfies ``apply_vertex_perm(g, sigma) == h`` and
    A(g) = M A(h) M^T with M = permutation_matrix(sigma).
    """
    if g.modulus != h.modulus:
        raise ModulusMismatch(f"GF({g.p}) vs GF({h.p})")
    _check_limit(max(g.m, h.m), limit)
    if g.m != h.m or sorted(g.colors) != sorted(h.colors):
        return None
    if canonical_code(g, limit) != canonical_code(h, limit):
        return None
    found = _matchings(g, h, first_only=True)
    if not found:
        raise AssertionError("equal canonical codes but no cisomorphism found")
    return found[0]


def is_witness(g: CGraph, h: CGraph, sigma: PermLike) -> bool:
    """Independent check of a witness through the permutation-matrix identity."""
    sigma = _perm(sigma)
    if g.m != h.m or len(sigma) != g.m:
        return False
    mat = permutation_matrix(sigma)
    return bool(np.array_equal(g.matrix(), mat @ h.matrix() @ mat.T))


def cautomorphisms(g: CGraph, limit: Optional[int] = None) -> list[VertexPermutation]:
    """All cautomorphisms of g, in lexicographic order (identity first)."""
    _check_limit(g.m, limit)
    return _matchings(g, g, first_only=False)


def complement_commutes_check(g: CGraph, h: CGraph, pi: ColorPermutation, limit: Optional[int] = None) -> bool:
    """Whether ``g ~ h`` and ``pi(g) ~ pi(h)`` agree; should never come back False."""
    before = cisomorphic(g, h, limit) is not None
    after = cisomorphic(pi_complement(g, pi), pi_complement(h, pi), limit) is not None
    return before == after
