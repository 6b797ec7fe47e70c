"""Vertex and edge decks, chypomorphism, and exhaustive searches for
reconstruction counterexamples among small cgraphs.

The reconstruction statements are treated as things to search, never as
facts: nothing here assumes a deck determines its cgraph.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Optional

from .core import CGraph, ModulusLike, delete_edge, delete_vertex
from .enumeration import DEFAULT_CENSUS_BUDGET, census
from .errors import BudgetExceeded, SizeMismatch, TooFewEdges, TooSmall
from .field import as_modulus
from .iso import CanonicalCode, apply_vertex_perm, canonical_code, cisomorphic

__all__ = [
    "Deck",
    "vertex_deck",
    "edge_deck",
    "chypomorphic",
    "edge_count_from_deck",
    "SearchReport",
    "conjecture_search",
]

VERTEX = "vertex"
EDGE = "edge"


@dataclass(frozen=True)
class Deck:
    """Multiset of card codes, kept sorted so equality is multiset equality."""

    cards: tuple[CanonicalCode, ...]

    def __post_init__(self):
        object.__setattr__(self, "cards", tuple(sorted(self.cards)))

    def __len__(self):
        return len(self.cards)

    def key(self) -> str:
        return "|".join(str(c) for c in self.cards)

    def lines(self) -> list[str]:
        return [str(c) for c in self.cards]


def vertex_deck(g: CGraph, limit: Optional[int] = None) -> Deck:
    if g.m < 3:
        raise TooSmall("vertex decks need at least three vertices")
    return Deck(tuple(canonical_code(delete_vertex(g, v), limit) for v in range(g.m)))


def edge_deck(g: CGraph, limit: Optional[int] = None) -> Deck:
    edges = g.edges()
    if len(edges) < 4:
        raise TooFewEdges(f"edge decks need at least four colored edges, got {len(edges)}")
    return Deck(tuple(canonical_code(delete_edge(g, (u, v)), limit) for u, v, _ in edges))


def edge_count_from_deck(deck: Deck, m: int) -> int:
    """Kelly's count: each edge survives on m - 2 of the m vertex cards."""
    total = sum(card.n_edges for card in deck.cards)
    if total % (m - 2):
        raise ValueError("card edge counts are inconsistent with any cgraph")
    return total // (m - 2)


def chypomorphic(g: CGraph, h: CGraph, limit: Optional[int] = None) -> bool:
    """Equal vertex decks, i.e. some bijection v -> u with g - v cisomorphic to h - u."""
    if g.m != h.m or g.modulus != h.modulus:
        raise SizeMismatch("chypomorphism compares cgraphs of equal order over one field")
    return vertex_deck(g, limit) == vertex_deck(h, limit)


@dataclass
class SearchReport:
    n: int
    p: int
    mode: str
    classes: list[CanonicalCode] = field(default_factory=list)
    skipped: int = 0  # classes without a deck (too few edges in edge mode)
    pairs: list[tuple[CanonicalCode, CanonicalCode]] = field(default_factory=list)

    @property
    def found(self) -> bool:
        return bool(self.pairs)

    def lines(self) -> list[str]:
        out = [f"# search n={self.n} p={self.p} mode={self.mode} classes={len(self.classes)} skipped={self.skipped}"]
        out.extend(f"code {c}" for c in self.classes)
        out.extend(f"pair {a} {b}" for a, b in self.pairs)
        out.append(f"# counterexamples={len(self.pairs)}")
        return out


def _deck(g: CGraph, mode: str) -> Deck:
    return vertex_deck(g) if mode == VERTEX else edge_deck(g)


def conjecture_search(
    n: int,
    modulus: ModulusLike,
    mode: str = VERTEX,
    budget: int = DEFAULT_CENSUS_BUDGET,
) -> SearchReport:
    """Group all cisomorphism classes on n vertices by deck and report collisions.

    Every reported pair is re-verified: decks recomputed from fresh relabeled
    representatives must agree, and a direct cisomorphism search must fail.
    """
    if mode not in (VERTEX, EDGE):
        raise ValueError(f"mode must be {VERTEX!r} or {EDGE!r}")
    if mode == VERTEX and n < 3:
        raise TooSmall("vertex reconstruction needs n >= 3")
    modulus = as_modulus(modulus)
    size = modulus.p ** (n * (n - 1) // 2)
    if size > budget:
        raise BudgetExceeded(f"{size} labeled cgraphs exceeds the budget {budget}")
    report = SearchReport(n, modulus.p, mode, classes=sorted(census(n, modulus, budget)))

    buckets: dict[str, list[tuple[Deck, CanonicalCode]]] = defaultdict(list)
    for code in report.classes:
        g = code.to_cgraph()
        if mode == EDGE and g.n_edges < 4:
            report.skipped += 1
            continue
        deck = _deck(g, mode)
        buckets[deck.key()].append((deck, code))

    for group in buckets.values():
        for i in range(len(group)):
            for j in range(i + 1, len(group)):
                (da, a), (db, b) = group[i], group[j]
                if da != db:
                    continue
                if not _verify_pair(a, b, mode):
                    raise AssertionError(f"deck collision {a} / {b} failed re-verification")
                report.pairs.append((a, b))
    report.pairs.sort()
    return report


def _verify_pair(a: CanonicalCode, b: CanonicalCode, mode: str) -> bool:
    ga, gb = a.to_cgraph(), b.to_cgraph()
    # recompute decks from reversed labelings rather than the canonical forms
    rev = tuple(reversed(range(ga.m)))
    same_deck = _deck(apply_vertex_perm(ga, rev), mode) == _deck(apply_vertex_perm(gb, rev), mode)
    return same_deck and cisomorphic(ga, gb) is None
