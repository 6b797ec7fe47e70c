"""Paths, cycles and connectivity of cgraphs, multicolored and monochromatic."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .core import CGraph, _check_vertex, _nonwhite, degree
from .errors import InvalidArgs, PreconditionViolated

__all__ = [
    "KPath",
    "components",
    "is_connected",
    "find_k_path",
    "find_k_cycle",
    "is_j_connected",
    "odd_degree_path",
    "max_colored_edges",
]


@dataclass(frozen=True)
class KPath:
    """Ordered distinct vertices joined by edges of one color.

    ``color is None`` marks a multicolored path (any non-white edges).
    ``closed`` marks a cycle: the last vertex is also joined to the first.
    """

    color: Optional[int]
    vertices: tuple[int, ...]
    closed: bool = False

    def __len__(self):
        return len(self.vertices)

    def steps(self) -> list[tuple[int, int]]:
        vs = self.vertices
        out = list(zip(vs, vs[1:]))
        if self.closed:
            out.append((vs[-1], vs[0]))
        return out

    def is_valid(self, g: CGraph) -> bool:
        vs = self.vertices
        if not vs or len(set(vs)) != len(vs) or any(not 0 <= v < g.m for v in vs):
            return False
        if self.closed and len(vs) < 3:
            return False
        for u, v in self.steps():
            c = g.color(u, v)
            if c == 0 or (self.color is not None and c != self.color):
                return False
        return True


def _adjacency(g: CGraph, color: Optional[int] = None) -> list[list[int]]:
    adj = [[] for _ in range(g.m)]
    for u, v, c in g.edges():
        if color is None or c == color:
            adj[u].append(v)
            adj[v].append(u)
    for row in adj:
        row.sort()
    return adj


def _blocks(adj: list[list[int]]) -> list[list[int]]:
    seen = [False] * len(adj)
    out = []
    for s in range(len(adj)):
        if seen[s]:
            continue
        seen[s] = True
        block, queue = [s], deque([s])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    block.append(w)
                    queue.append(w)
        out.append(sorted(block))
    return out


def components(g: CGraph) -> list[list[int]]:
    """Connected components over non-white edges, each sorted, ordered by least vertex."""
    return _blocks(_adjacency(g))


def is_connected(g: CGraph) -> bool:
    return len(components(g)) == 1


def _bfs_path(adj: list[list[int]], s: int, t: int) -> Optional[tuple[int, ...]]:
    if s == t:
        return (s,)
    parent = {s: None}
    queue = deque([s])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w in parent:
                continue
            parent[w] = u
            if w == t:
                path = [t]
                while parent[path[-1]] is not None:
                    path.append(parent[path[-1]])
                return tuple(reversed(path))
            queue.append(w)
    return None


def find_k_path(g: CGraph, k, s: int, t: int) -> Optional[KPath]:
    """A shortest k-colored path from ``s`` to ``t``, or None.

    Neighbors are expanded in increasing order, so the result is deterministic.
    """
    k = _nonwhite(k, g.modulus)
    _check_vertex(s, g.m)
    _check_vertex(t, g.m)
    path = _bfs_path(_adjacency(g, k), s, t)
    return None if path is None else KPath(k, path)


def _distances(adj: list[list[int]], s: int) -> list[Optional[int]]:
    dist: list[Optional[int]] = [None] * len(adj)
    dist[s] = 0
    queue = deque([s])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if dist[w] is None:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def _girth(adj: list[list[int]]) -> Optional[int]:
    """Length of a shortest cycle: for each edge (u, v), 1 + dist(u, v) without that edge."""
    best = None
    for u in range(len(adj)):
        for v in adj[u]:
            if v < u:
                continue
            adj[u].remove(v)
            adj[v].remove(u)
            d = _distances(adj, u)[v]
            adj[u].append(v)
            adj[v].append(u)
            adj[u].sort()
            adj[v].sort()
            if d is not None and (best is None or d + 1 < best):
                best = d + 1
    return best


def find_k_cycle(g: CGraph, k) -> Optional[KPath]:
    """A shortest k-colored cycle, lexicographically least as a vertex sequence."""
    k = _nonwhite(k, g.modulus)
    adj = _adjacency(g, k)
    length = _girth(adj)
    if length is None:
        return None
    # Least sequence starts at its minimum vertex and only visits larger ones.
    for s in range(g.m):
        allowed = [v >= s for v in range(g.m)]
        sub = [[w for w in adj[u] if allowed[w]] if allowed[u] else [] for u in range(g.m)]
        back = _distances(sub, s)
        path = [s]
        on_path = {s}

        def extend() -> bool:
            u = path[-1]
            if len(path) == length:
                return s in sub[u]
            left = length - len(path)
            for w in sub[u]:
                if w in on_path or w == s or back[w] is None or back[w] > left:
                    continue
                path.append(w)
                on_path.add(w)
                if extend():
                    return True
                path.pop()
                on_path.discard(w)
            return False

        if extend():
            return KPath(k, tuple(path), closed=True)
    raise AssertionError("girth found but no cycle of that length")


def is_j_connected(g: CGraph, j) -> bool:
    """Every vertex pair is joined by a j-colored path."""
    j = _nonwhite(j, g.modulus)
    return len(_blocks(_adjacency(g, j))) == 1


def odd_degree_path(g: CGraph) -> KPath:
    """Shortest multicolored path between the two odd-degree vertices.

    Raises PreconditionViolated unless exactly two vertices have odd degree.
    """
    odd = [v for v in range(g.m) if degree(g, v) % 2]
    if len(odd) != 2:
        raise PreconditionViolated(f"expected exactly two odd-degree vertices, found {len(odd)}")
    path = _bfs_path(_adjacency(g), odd[0], odd[1])
    if path is None:
        raise AssertionError("odd vertices in different components")
    return KPath(None, path)


def max_colored_edges(n: int, k: int) -> int:
    """Upper bound on colored edges of a simple cgraph with n vertices and k components."""
    if not 1 <= k <= n:
        raise InvalidArgs(f"need 1 <= k <= n, got n={n}, k={k}")
    return (n - k) * (n - k + 1) // 2
