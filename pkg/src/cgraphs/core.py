"""Colorful graphs (cgraphs) over GF(p) and the operations defined directly on them.

A :class:`CGraph` on ``m`` vertices stores one color per unordered vertex pair,
laid out in lexicographic pair order (0,1), (0,2), ..., (m-2, m-1). The same
tuple is the graph's coordinate vector in GF(p)^q with q = m(m-1)/2.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Mapping, Union

import numpy as np

from .errors import (
    EdgeAbsent,
    LengthMismatch,
    ModulusMismatch,
    NotAPartition,
    VertexOutOfRange,
    WhiteColorRequested,
)
from .field import FieldElement, Modulus, as_modulus

__all__ = [
    "CGraph",
    "CDigraph",
    "ColorPermutation",
    "CVector",
    "Relation",
    "pair_list",
    "pair_index",
    "adjacency_matrix",
    "adjacency_matrix_directed",
    "from_matrix",
    "monochromatic_component",
    "degree",
    "is_j_complete",
    "is_k_independent",
    "is_k_bipartite",
    "k_complete_bipartite",
    "complete_cgraph",
    "subgraph",
    "delete_vertex",
    "delete_edge",
    "add_edge",
    "pi_complement",
    "to_vector",
    "from_vector",
    "vector_add",
    "scalar_mul",
    "classify_relative",
]

Color = Union[int, FieldElement]
ModulusLike = Union[int, Modulus]


@lru_cache(maxsize=None)
def pair_list(m: int) -> tuple[tuple[int, int], ...]:
    """Vertex pairs of an m-vertex cgraph in canonical (lexicographic) order."""
    return tuple(combinations(range(m), 2))


def pair_index(i: int, j: int, m: int) -> int:
    """Position of the pair {i, j} in the canonical order."""
    if i == j:
        raise ValueError("a cgraph has no self-loops")
    if i > j:
        i, j = j, i
    # pairs (a, b) with a < i come first: sum_{a<i} (m-1-a)
    return i * (2 * m - i - 1) // 2 + (j - i - 1)


def _color_value(c: Color, modulus: Modulus) -> int:
    if isinstance(c, FieldElement):
        if c.modulus != modulus:
            raise ModulusMismatch(f"color from GF({c.modulus.p}) used in GF({modulus.p})")
        return c.value
    c = int(c)
    if not 0 <= c < modulus.p:
        raise ValueError(f"color {c} outside [0, {modulus.p - 1}]")
    return c


def _nonwhite(c: Color, modulus: Modulus) -> int:
    c = _color_value(c, modulus)
    if c == 0:
        raise WhiteColorRequested("color 0 is white (absence of an edge)")
    return c


def _check_vertex(v: int, m: int) -> int:
    if not 0 <= v < m:
        raise VertexOutOfRange(f"vertex {v} not in 0..{m - 1}")
    return v


@dataclass(frozen=True)
class CGraph:
    """Simple edge-colored graph on vertices 0..m-1 with colors from GF(p).

    ``colors[k]`` is the color of the k-th pair of :func:`pair_list`; 0 means
    the pair is white (not an edge).
    """

    m: int
    modulus: Modulus
    colors: tuple[int, ...]

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("a cgraph needs at least one vertex")
        if not isinstance(self.modulus, Modulus):
            object.__setattr__(self, "modulus", as_modulus(self.modulus))
        colors = tuple(int(c) for c in self.colors)
        if len(colors) != self.m * (self.m - 1) // 2:
            raise LengthMismatch(f"{len(colors)} colors for {self.m} vertices")
        p = self.modulus.p
        if any(not 0 <= c < p for c in colors):
            raise ValueError(f"colors must lie in [0, {p - 1}]")
        object.__setattr__(self, "colors", colors)

    @classmethod
    def empty(cls, m: int, modulus: ModulusLike) -> CGraph:
        return cls(m, as_modulus(modulus), (0,) * (m * (m - 1) // 2))

    @classmethod
    def from_edges(
        cls,
        m: int,
        modulus: ModulusLike,
        edges: Union[Mapping[tuple[int, int], Color], Iterable[tuple[int, int, Color]]] = (),
    ) -> CGraph:
        """Build from ``{(u, v): color}`` or an iterable of ``(u, v, color)``.

        White entries are dropped. Listing the same pair twice is an error.
        """
        modulus = as_modulus(modulus)
        items = edges.items() if isinstance(edges, Mapping) else (((u, v), c) for u, v, c in edges)
        colors = [0] * (m * (m - 1) // 2)
        seen = set()
        for (u, v), c in items:
            _check_vertex(u, m)
            _check_vertex(v, m)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"pair {key} listed twice")
            seen.add(key)
            colors[pair_index(u, v, m)] = _color_value(c, modulus)
        return cls(m, modulus, tuple(colors))

    @property
    def p(self) -> int:
        return self.modulus.p

    def color(self, u: int, v: int) -> int:
        _check_vertex(u, self.m)
        _check_vertex(v, self.m)
        if u == v:
            return 0
        return self.colors[pair_index(u, v, self.m)]

    def edges(self) -> list[tuple[int, int, int]]:
        """Non-white edges as ``(u, v, color)`` with u < v, in pair order."""
        return [(u, v, c) for (u, v), c in zip(pair_list(self.m), self.colors) if c]

    @property
    def n_edges(self) -> int:
        return sum(1 for c in self.colors if c)

    def neighbors(self, v: int, color: int | None = None) -> list[int]:
        """Vertices joined to ``v`` by a non-white edge (of ``color`` if given)."""
        out = []
        for u in range(self.m):
            if u == v:
                continue
            c = self.colors[pair_index(u, v, self.m)]
            if c and (color is None or c == color):
                out.append(u)
        return out

    def matrix(self) -> np.ndarray:
        return adjacency_matrix(self)

    def with_color(self, u: int, v: int, c: Color) -> CGraph:
        _check_vertex(u, self.m)
        _check_vertex(v, self.m)
        colors = list(self.colors)
        colors[pair_index(u, v, self.m)] = _color_value(c, self.modulus)
        return CGraph(self.m, self.modulus, tuple(colors))

    def __repr__(self):
        return f"CGraph(m={self.m}, p={self.p}, edges={self.edges()})"


@dataclass(frozen=True)
class CDigraph:
    """Directed cgraph: one color per ordered pair (i, j), i != j."""

    m: int
    modulus: Modulus
    arcs: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        if not isinstance(self.modulus, Modulus):
            object.__setattr__(self, "modulus", as_modulus(self.modulus))
        cleaned = {}
        for u, v, c in self.arcs:
            _check_vertex(u, self.m)
            _check_vertex(v, self.m)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if (u, v) in cleaned:
                raise ValueError(f"arc {(u, v)} listed twice")
            cleaned[(u, v)] = _color_value(c, self.modulus)
        arcs = tuple(sorted((u, v, c) for (u, v), c in cleaned.items() if c))
        object.__setattr__(self, "arcs", arcs)

    @classmethod
    def from_arcs(cls, m: int, modulus: ModulusLike, arcs) -> CDigraph:
        if isinstance(arcs, Mapping):
            arcs = [(u, v, c) for (u, v), c in arcs.items()]
        return cls(m, as_modulus(modulus), tuple(arcs))


def adjacency_matrix(g: CGraph) -> np.ndarray:
    """Symmetric m x m integer matrix of colors with zero diagonal."""
    a = np.zeros((g.m, g.m), dtype=np.int64)
    if g.m > 1:
        iu = np.triu_indices(g.m, 1)
        a[iu] = g.colors
        a = a + a.T
    return a


def adjacency_matrix_directed(d: CDigraph) -> np.ndarray:
    a = np.zeros((d.m, d.m), dtype=np.int64)
    for u, v, c in d.arcs:
        a[u, v] = c
    return a


def from_matrix(a, modulus: ModulusLike) -> CGraph:
    """Inverse of :func:`adjacency_matrix`; rejects asymmetric input or a nonzero diagonal."""
    a = np.asarray(a, dtype=np.int64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("adjacency matrix must be square")
    if np.any(np.diag(a)):
        raise ValueError("nonzero diagonal (self-loop)")
    if not np.array_equal(a, a.T):
        raise ValueError("cgraph adjacency matrix must be symmetric")
    m = a.shape[0]
    return CGraph(m, as_modulus(modulus), tuple(int(x) for x in a[np.triu_indices(m, 1)]))


def monochromatic_component(g: CGraph, j: Color) -> CGraph:
    """The j-colored subcgraph G_j on the full vertex set."""
    j = _nonwhite(j, g.modulus)
    return CGraph(g.m, g.modulus, tuple(c if c == j else 0 for c in g.colors))


def degree(g: CGraph, v: int) -> int:
    """Number of non-white edges at ``v``."""
    _check_vertex(v, g.m)
    return len(g.neighbors(v))


def is_j_complete(g: CGraph, j: Color) -> bool:
    j = _nonwhite(j, g.modulus)
    return all(c == j for c in g.colors)


def is_k_independent(g: CGraph, s: Iterable[int], k: Color) -> bool:
    """True iff no pair inside ``s`` has color k."""
    k = _color_value(k, g.modulus)
    s = sorted({_check_vertex(v, g.m) for v in s})
    return all(g.colors[pair_index(u, v, g.m)] != k for u, v in combinations(s, 2))


def _partition(g: CGraph, parts) -> tuple[list[int], list[int]]:
    a, b = (sorted(set(x)) for x in parts)
    for v in a + b:
        _check_vertex(v, g.m)
    if set(a) & set(b) or len(a) + len(b) != g.m or not a or not b:
        raise NotAPartition("parts must be two nonempty disjoint sets covering V(G)")
    return a, b


def is_k_bipartite(g: CGraph, parts, k: Color) -> bool:
    """At least one k-edge crosses ``parts`` and no k-edge lies inside a part."""
    k = _nonwhite(k, g.modulus)
    a, b = _partition(g, parts)
    if not (is_k_independent(g, a, k) and is_k_independent(g, b, k)):
        return False
    return any(g.color(u, v) == k for u in a for v in b)


def k_complete_bipartite(sizes: tuple[int, int], k: Color, modulus: ModulusLike) -> CGraph:
    """All cross pairs between 0..a-1 and a..a+b-1 colored k, nothing else."""
    modulus = as_modulus(modulus)
    k = _nonwhite(k, modulus)
    a, b = sizes
    if a < 1 or b < 1:
        raise ValueError("both sides need at least one vertex")
    return CGraph.from_edges(a + b, modulus, [(u, v, k) for u in range(a) for v in range(a, a + b)])


def complete_cgraph(m: int, j: Color, modulus: ModulusLike) -> CGraph:
    """The j-complete cgraph on m vertices."""
    modulus = as_modulus(modulus)
    j = _nonwhite(j, modulus)
    return CGraph(m, modulus, (j,) * (m * (m - 1) // 2))


def subgraph(g: CGraph, s: Iterable[int]) -> CGraph:
    """Induced subcgraph on ``s``, relabeled 0..|s|-1 in increasing order."""
    s = sorted({_check_vertex(v, g.m) for v in s})
    if not s:
        raise ValueError("induced subcgraph needs at least one vertex")
    return CGraph(len(s), g.modulus, tuple(g.colors[pair_index(u, v, g.m)] for u, v in combinations(s, 2)))


def delete_vertex(g: CGraph, v: int) -> CGraph:
    _check_vertex(v, g.m)
    return subgraph(g, [u for u in range(g.m) if u != v])


def delete_edge(g: CGraph, pair: tuple[int, int]) -> CGraph:
    u, v = pair
    if g.color(u, v) == 0:
        raise EdgeAbsent(f"no colored edge at {pair}")
    return g.with_color(u, v, 0)


def add_edge(g: CGraph, pair: tuple[int, int], c: Color) -> CGraph:
    u, v = pair
    if g.color(u, v) != 0:
        raise ValueError(f"pair {pair} is already colored")
    return g.with_color(u, v, _nonwhite(c, g.modulus))


@dataclass(frozen=True)
class ColorPermutation:
    """A bijection on the colors 0..p-1, written as its image list."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"{images} is not a permutation of 0..{len(images) - 1}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, p: int) -> ColorPermutation:
        return cls(tuple(range(p)))

    @classmethod
    def fixing_white(cls, p: int, mapping: Mapping[int, int]) -> ColorPermutation:
        """Permutation with pi(0) = 0 given by its action on (some of) the colors 1..p-1."""
        images = list(range(p))
        for a, b in mapping.items():
            if a == 0 or b == 0:
                raise WhiteColorRequested("white must stay fixed")
            images[a] = b
        return cls(tuple(images))

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, c: int) -> int:
        return self.images[int(c)]

    def compose(self, other: ColorPermutation) -> ColorPermutation:
        """``self . other``: apply ``other`` first."""
        if other.size != self.size:
            raise ValueError("permutations on different color sets")
        return ColorPermutation(tuple(self.images[x] for x in other.images))

    def __matmul__(self, other: ColorPermutation) -> ColorPermutation:
        return self.compose(other)

    def inverse(self) -> ColorPermutation:
        inv = [0] * self.size
        for i, x in enumerate(self.images):
            inv[x] = i
        return ColorPermutation(tuple(inv))


def pi_complement(g: CGraph, pi: ColorPermutation) -> CGraph:
    """Recolor every pair, white ones included, by ``pi``."""
    if pi.size != g.p:
        raise ValueError(f"color permutation on {pi.size} symbols, cgraph over GF({g.p})")
    im = pi.images
    return CGraph(g.m, g.modulus, tuple(im[c] for c in g.colors))


@dataclass(frozen=True)
class CVector:
    """Coordinate vector of an m-vertex cgraph in GF(p)^q, q = m(m-1)/2."""

    modulus: Modulus
    entries: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.modulus, Modulus):
            object.__setattr__(self, "modulus", as_modulus(self.modulus))
        entries = tuple(_color_value(c, self.modulus) for c in self.entries)
        object.__setattr__(self, "entries", entries)

    @classmethod
    def zero(cls, q: int, modulus: ModulusLike) -> CVector:
        return cls(as_modulus(modulus), (0,) * q)

    def __len__(self):
        return len(self.entries)

    def __add__(self, other: CVector) -> CVector:
        return vector_add(self, other)

    def __rmul__(self, c) -> CVector:
        return scalar_mul(c, self)


def to_vector(g: CGraph) -> CVector:
    return CVector(g.modulus, g.colors)


def from_vector(v: CVector, m: int) -> CGraph:
    if len(v) != m * (m - 1) // 2:
        raise LengthMismatch(f"vector of length {len(v)} cannot describe {m} vertices")
    return CGraph(m, v.modulus, v.entries)


def _check_compatible(u: CVector, v: CVector) -> None:
    if u.modulus != v.modulus:
        raise ModulusMismatch(f"GF({u.modulus.p}) vs GF({v.modulus.p})")
    if len(u) != len(v):
        raise LengthMismatch(f"lengths {len(u)} and {len(v)}")


def vector_add(u: CVector, v: CVector) -> CVector:
    _check_compatible(u, v)
    p = u.modulus.p
    return CVector(u.modulus, tuple((a + b) % p for a, b in zip(u.entries, v.entries)))


def scalar_mul(c: Color, v: CVector) -> CVector:
    c = _color_value(c, v.modulus)
    p = v.modulus.p
    return CVector(v.modulus, tuple(c * a % p for a in v.entries))


class Relation(enum.Enum):
    SUBCGRAPH = "subcgraph"
    SUPERCGRAPH = "supercgraph"
    BOTH = "both"
    NEITHER = "neither"


def classify_relative(v_g: CVector, w: CVector) -> Relation:
    """Where ``w`` sits relative to ``v_g`` under the componentwise order on 0..p-1."""
    _check_compatible(v_g, w)
    below = all(b <= a for a, b in zip(v_g.entries, w.entries))
    above = all(a <= b for a, b in zip(v_g.entries, w.entries))
    if below and above:
        return Relation.BOTH
    if below:
        return Relation.SUBCGRAPH
    if above:
        return Relation.SUPERCGRAPH
    return Relation.NEITHER
