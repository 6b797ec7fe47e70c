"""Two worked uses of cgraphs: job assignment by nonzero determinantal
monomials, and tight packings of complete cgraphs from projective planes.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from .core import CGraph, ModulusLike
from .errors import ColorConventionViolated, NotBipartite, NotPrime, NotSquare
from .field import as_modulus, is_prime, next_prime

__all__ = [
    "WILDCARD",
    "AssignmentMatrix",
    "Assignment",
    "build_assignment_matrix",
    "assignment_cgraph",
    "find_assignments",
    "pad_to_square",
    "PlanePacking",
    "PackingReport",
    "build_projective_plane",
    "verify_packing",
    "triangle_census",
    "monochromatic_clique_census",
]

# Entry marking a dummy row/column cell: matches anything, fills nothing.
WILDCARD = -1


@dataclass(frozen=True)
class AssignmentMatrix:
    """Persons x jobs matrix with ``entries[u, v] = v + 1`` when person u can do job v.

    Rows/columns at index ``>= n_persons`` / ``>= n_jobs`` are padding.
    """

    entries: np.ndarray = field(compare=False)
    n_persons: int = -1
    n_jobs: int = -1

    def __post_init__(self):
        a = np.array(self.entries, dtype=np.int64)
        if a.ndim != 2:
            raise ValueError("assignment matrix must be two-dimensional")
        a.setflags(write=False)
        object.__setattr__(self, "entries", a)
        if self.n_persons < 0:
            object.__setattr__(self, "n_persons", a.shape[0])
        if self.n_jobs < 0:
            object.__setattr__(self, "n_jobs", a.shape[1])
        for (u, v), x in np.ndenumerate(a[: self.n_persons, : self.n_jobs]):
            if x not in (0, v + 1):
                raise ColorConventionViolated(f"entry ({u + 1}, {v + 1}) is {x}, expected 0 or {v + 1}")

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape

    def __eq__(self, other):
        if not isinstance(other, AssignmentMatrix):
            return NotImplemented
        return (
            self.n_persons == other.n_persons
            and self.n_jobs == other.n_jobs
            and np.array_equal(self.entries, other.entries)
        )

    def support(self) -> np.ndarray:
        return self.entries != 0


@dataclass(frozen=True)
class Assignment:
    """Person -> job pairs (0-based) plus whatever padding left unfilled."""

    pairs: tuple[tuple[int, int], ...]
    idle_persons: tuple[int, ...] = ()
    open_jobs: tuple[int, ...] = ()

    def lines(self) -> list[str]:
        out = [f"p{u + 1} j{v + 1}" for u, v in self.pairs]
        out.extend(f"p{u + 1} unfilled" for u in self.idle_persons)
        out.extend(f"unfilled j{v + 1}" for v in self.open_jobs)
        return out


def build_assignment_matrix(g: CGraph, persons: Sequence[int], jobs: Sequence[int]) -> AssignmentMatrix:
    """Matrix of a bipartite cgraph whose edges at the v-th job (1-based) carry color v."""
    persons, jobs = list(persons), list(jobs)
    if set(persons) & set(jobs) or sorted(persons + jobs) != list(range(g.m)):
        raise NotBipartite("persons and jobs must partition the vertex set")
    for side in (persons, jobs):
        for u, v in combinations(side, 2):
            if g.color(u, v):
                raise NotBipartite(f"edge {u}-{v} lies inside one side")
    a = np.zeros((len(persons), len(jobs)), dtype=np.int64)
    for r, u in enumerate(persons):
        for c, v in enumerate(jobs):
            color = g.color(u, v)
            if color and color != c + 1:
                raise ColorConventionViolated(f"edge at job {c + 1} has color {color}")
            a[r, c] = color
    return AssignmentMatrix(a)


def assignment_cgraph(mat: AssignmentMatrix, modulus: Optional[ModulusLike] = None) -> tuple[CGraph, list[int], list[int]]:
    """The bipartite cgraph of a matrix: persons 0..n-1 then jobs n..n+m-1.

    Colors run up to the job count, so the default field is the least prime
    above it.
    """
    n, m = mat.n_persons, mat.n_jobs
    modulus = as_modulus(modulus if modulus is not None else next_prime(m))
    edges = [(u, n + v, int(mat.entries[u, v])) for u in range(n) for v in range(m) if mat.entries[u, v]]
    return CGraph.from_edges(n + m, modulus, edges), list(range(n)), list(range(n, n + m))


def pad_to_square(mat: AssignmentMatrix) -> AssignmentMatrix:
    """Add wildcard dummy persons or jobs until the matrix is square."""
    rows, cols = mat.shape
    size = max(rows, cols)
    if rows == cols:
        return mat
    a = np.full((size, size), WILDCARD, dtype=np.int64)
    a[:rows, :cols] = mat.entries
    return AssignmentMatrix(a, mat.n_persons, mat.n_jobs)


def _as_assignment(sigma: Sequence[int], mat: AssignmentMatrix) -> Assignment:
    n, m = mat.n_persons, mat.n_jobs
    pairs = tuple((u, v) for u, v in enumerate(sigma) if u < n and v < m)
    idle = tuple(u for u, v in enumerate(sigma) if u < n and v >= m)
    open_jobs = tuple(sorted(v for u, v in enumerate(sigma) if u >= n and v < m))
    return Assignment(pairs, idle, open_jobs)


def find_assignments(mat: AssignmentMatrix, limit: Optional[int] = None) -> list[Assignment]:
    """Permutations with a nonzero product of entries, in lexicographic order.

    Searches the support directly instead of expanding a determinant, so no
    monomial can be lost to cancellation. Padded assignments that differ
    only in how dummies are shuffled are reported once.
    """
    rows, cols = mat.shape
    if rows != cols:
        raise NotSquare(f"{rows}x{cols} matrix; pad_to_square first")
    if limit is not None and limit < 1:
        raise ValueError("limit must be at least 1")
    allowed = [[v for v in range(cols) if mat.entries[u, v] != 0] for u in range(rows)]
    used = [False] * cols
    sigma: list[int] = []
    out: list[Assignment] = []
    seen = set()

    def extend() -> bool:
        u = len(sigma)
        if u == rows:
            a = _as_assignment(sigma, mat)
            if a not in seen:
                seen.add(a)
                out.append(a)
            return limit is not None and len(out) >= limit
        for v in allowed[u]:
            if used[v]:
                continue
            used[v] = True
            sigma.append(v)
            if extend():
                return True
            sigma.pop()
            used[v] = False
        return False

    extend()
    return out


@dataclass(frozen=True)
class PlanePacking:
    """Edge-coloring of K_N with one color per line of a projective plane.

    ``coloring`` maps each pair (u, v), u < v, to a color in 1..N; colors are
    plain integers here because N usually exceeds any small field.
    """

    order: int
    points: tuple[tuple[int, ...], ...]
    lines: tuple[frozenset, ...]
    coloring: dict = field(compare=False, hash=False)

    @property
    def n_points(self) -> int:
        return len(self.points)

    def to_cgraph(self, p: Optional[int] = None) -> CGraph:
        """As a cgraph over GF(p); p defaults to the least prime above the color count."""
        n_colors = max(self.coloring.values(), default=0)
        p = next_prime(n_colors) if p is None else p
        if p <= n_colors:
            raise ValueError(f"GF({p}) cannot hold {n_colors} colors")
        return CGraph.from_edges(self.n_points, p, self.coloring)


def _normalized(vectors: Iterable[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Representatives of the 1-dim subspaces: first nonzero coordinate equal to 1."""
    out = []
    for v in vectors:
        nz = next((x for x in v if x), 0)
        if nz == 1:
            out.append(v)
    return sorted(out)


def build_projective_plane(q: int) -> PlanePacking:
    """PG(2, q) over GF(q) for prime q, as a tight packing of K_{q^2+q+1}."""
    if not is_prime(q):
        raise NotPrime(q)
    points = _normalized(product(range(q), repeat=3))
    lines = []
    for normal in points:  # lines are the same representatives, read as dual vectors
        lines.append(frozenset(i for i, pt in enumerate(points) if sum(a * b for a, b in zip(normal, pt)) % q == 0))
    coloring = {}
    for color, line in enumerate(lines, start=1):
        for u, v in combinations(sorted(line), 2):
            if (u, v) in coloring:
                raise AssertionError("two lines share a pair of points")
            coloring[(u, v)] = color
    n = len(points)
    if len(coloring) != n * (n - 1) // 2:
        raise AssertionError("lines do not cover every pair")
    return PlanePacking(q, tuple(points), tuple(lines), coloring)


@dataclass(frozen=True)
class PackingReport:
    ok: bool
    check: Optional[str] = None
    detail: str = ""

    def lines(self) -> list[str]:
        if self.ok:
            return ["PASS"]
        return [f"FAIL {self.check}: {self.detail}"]


def _coloring_of(pk: Union[PlanePacking, CGraph]) -> tuple[int, dict]:
    if isinstance(pk, PlanePacking):
        return pk.n_points, dict(pk.coloring)
    return pk.m, {(u, v): c for u, v, c in pk.edges()}


def verify_packing(pk: Union[PlanePacking, CGraph]) -> PackingReport:
    """Check that the coloring is a tight packing of monochromatic complete cgraphs.

    Checks run in order and stop at the first failure: no white pair, every
    pair inside exactly one color class's vertex set, every color class
    complete on its vertex set.
    """
    n, coloring = _coloring_of(pk)
    for u, v in combinations(range(n), 2):
        if not coloring.get((u, v)):
            return PackingReport(False, "no-white", f"pair ({u}, {v}) is uncolored")
    classes = defaultdict(set)
    for (u, v), c in coloring.items():
        classes[c].update((u, v))
    cover = Counter()
    for vertices in classes.values():
        cover.update(combinations(sorted(vertices), 2))
    for u, v in combinations(range(n), 2):
        if cover[(u, v)] != 1:
            return PackingReport(False, "exactly-once", f"pair ({u}, {v}) lies in {cover[(u, v)]} color classes")
    for c in sorted(classes):
        for u, v in combinations(sorted(classes[c]), 2):
            if coloring[(u, v)] != c:
                return PackingReport(False, "monochromatic", f"color {c} class misses pair ({u}, {v})")
    return PackingReport(True)


def triangle_census(g: CGraph) -> tuple[int, int, int, int]:
    """(total, monochromatic, rainbow, other) over triples with three colored edges."""
    total = mono = rainbow = 0
    for a, b, c in combinations(range(g.m), 3):
        colors = (g.color(a, b), g.color(a, c), g.color(b, c))
        if 0 in colors:
            continue
        total += 1
        distinct = len(set(colors))
        if distinct == 1:
            mono += 1
        elif distinct == 3:
            rainbow += 1
    return total, mono, rainbow, total - mono - rainbow


def monochromatic_clique_census(g: CGraph, r: int) -> dict[int, int]:
    """For each color j in 1..p-1, how many r-subsets induce a j-complete cgraph."""
    if r < 2:
        raise ValueError("clique size must be at least 2")
    out = {}
    for j in range(1, g.p):
        adj = [set(g.neighbors(v, j)) for v in range(g.m)]
        count = 0

        def grow(clique_size: int, candidates: list[int]) -> None:
            nonlocal count
            if clique_size == r:
                count += 1
                return
            for i, v in enumerate(candidates):
                grow(clique_size + 1, [w for w in candidates[i + 1 :] if w in adj[v]])

        grow(0, list(range(g.m)))
        out[j] = count
    return out
