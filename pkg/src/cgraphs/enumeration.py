"""Counting unlabeled cgraphs: cycle index of the pair group, Polya substitution,
a Burnside cross-check and a brute-force census.

All arithmetic is exact (``int`` and ``fractions.Fraction``).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations, product
from math import factorial, prod
from typing import Iterator, Optional

from .core import CGraph, ModulusLike
from .errors import BudgetExceeded, TooLarge
from .field import Modulus, as_modulus
from .iso import CanonicalCode, canonical_code

__all__ = [
    "DEFAULT_ENUM_LIMIT",
    "DEFAULT_CENSUS_BUDGET",
    "CycleIndex",
    "CountingSeries",
    "integer_partitions",
    "pair_group_cycle_index",
    "figure_series",
    "configuration_series",
    "count_unlabeled",
    "burnside_oracle",
    "census",
    "labeled_cgraphs",
]

DEFAULT_ENUM_LIMIT = 10
DEFAULT_CENSUS_BUDGET = 10**7

# A cycle type is stored as ((length, multiplicity), ...) sorted by length,
# i.e. the monomial t_1^{a_1} t_2^{a_2} ... with zero exponents dropped.
CycleType = tuple[tuple[int, int], ...]


def _cycle_type(lengths) -> CycleType:
    return tuple(sorted(Counter(lengths).items()))


@dataclass(frozen=True)
class CycleIndex:
    n: int
    terms: dict[CycleType, Fraction] = field(hash=False)

    @property
    def degree(self) -> int:
        """Number of points permuted, n(n-1)/2 for the pair group."""
        return self.n * (self.n - 1) // 2

    def exponents(self, ctype: CycleType) -> tuple[int, ...]:
        vec = [0] * self.degree
        for length, mult in ctype:
            vec[length - 1] = mult
        return tuple(vec)

    def ordered_terms(self) -> list[tuple[CycleType, Fraction]]:
        """Terms by descending exponent vector (a_1, a_2, ...): t1^q comes first."""
        return sorted(self.terms.items(), key=lambda kv: self.exponents(kv[0]), reverse=True)

    def evaluate(self, values) -> Fraction:
        """Substitute ``values(k)`` (or ``values[k]``) for t_k."""
        get = values if callable(values) else values.__getitem__
        return sum((c * prod(Fraction(get(k)) ** a for k, a in ct) for ct, c in self.terms.items()), Fraction(0))

    def lines(self) -> list[str]:
        out = []
        for ctype, coeff in self.ordered_terms():
            mono = " ".join(f"t{k}" if a == 1 else f"t{k}^{a}" for k, a in ctype) or "1"
            out.append(f"{coeff} {mono}")
        return out

    def __str__(self):
        return " + ".join(self.lines())


@dataclass(frozen=True)
class CountingSeries:
    """Integer polynomial in the color variables x_1..x_{p-1}."""

    n_vars: int
    terms: dict[tuple[int, ...], int] = field(hash=False)

    def coefficient(self, exponents) -> int:
        return self.terms.get(tuple(exponents), 0)

    def total(self) -> int:
        return sum(self.terms.values())

    def ordered_terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Graded lexicographic: by total degree, then x_1 exponent descending, and so on."""
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), tuple(-e for e in kv[0])))

    def lines(self) -> list[str]:
        return [" ".join(map(str, (c,) + e)) for e, c in self.ordered_terms()]

    def __str__(self):
        names = ["x", "y"] if self.n_vars == 2 else [f"x{i + 1}" for i in range(self.n_vars)]
        parts = []
        for exps, c in self.ordered_terms():
            mono = "".join(v if e == 1 else f"{v}^{e}" for v, e in zip(names, exps) if e)
            if not mono:
                parts.append(str(c))
            else:
                parts.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(parts)


def integer_partitions(n: int, largest: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    """Partitions of n as non-increasing tuples."""
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in integer_partitions(n - k, k):
            yield (k,) + rest


def _induced_pair_cycles(perm) -> list[int]:
    """Cycle lengths of the permutation that ``perm`` induces on unordered pairs."""
    n = len(perm)
    pairs = list(combinations(range(n), 2))
    index = {pr: k for k, pr in enumerate(pairs)}
    image = []
    for i, j in pairs:
        a, b = perm[i], perm[j]
        image.append(index[(a, b) if a < b else (b, a)])
    seen = [False] * len(pairs)
    lengths = []
    for start in range(len(pairs)):
        if seen[start]:
            continue
        length, k = 0, start
        while not seen[k]:
            seen[k] = True
            k = image[k]
            length += 1
        lengths.append(length)
    return lengths


def _representative(shape: tuple[int, ...]) -> list[int]:
    """A permutation of 0..n-1 whose cycle lengths are ``shape``."""
    perm = []
    start = 0
    for length in shape:
        perm.extend(start + (i + 1) % length for i in range(length))
        start += length
    return perm


def _class_size(shape: tuple[int, ...]) -> int:
    n = sum(shape)
    return factorial(n) // prod(k**a * factorial(a) for k, a in Counter(shape).items())


def pair_group_cycle_index(n: int, limit: int = DEFAULT_ENUM_LIMIT, exhaustive: bool = False) -> CycleIndex:
    """Cycle index Z(R_n) of the permutation group S_n induces on vertex pairs.

    By default one representative per conjugacy class of S_n is induced on
    the pairs and weighted by the class size (conjugate permutations induce
    conjugate pair permutations). ``exhaustive=True`` walks all n!
    permutations instead.
    """
    if n < 2:
        raise ValueError("the pair group needs n >= 2")
    if n > limit:
        raise TooLarge(f"n={n} exceeds the enumeration limit {limit}")
    tally: Counter = Counter()
    if exhaustive:
        for perm in permutations(range(n)):
            tally[_cycle_type(_induced_pair_cycles(perm))] += 1
    else:
        for shape in integer_partitions(n):
            tally[_cycle_type(_induced_pair_cycles(_representative(shape)))] += _class_size(shape)
    order = factorial(n)
    return CycleIndex(n, {ct: Fraction(c, order) for ct, c in tally.items()})


def figure_series(modulus: ModulusLike) -> CountingSeries:
    """1 + x_1 + ... + x_{p-1}: one term per color a single pair can take."""
    p = as_modulus(modulus).p
    k = p - 1
    terms = {(0,) * k: 1}
    for i in range(k):
        terms[tuple(1 if j == i else 0 for j in range(k))] = 1
    return CountingSeries(k, terms)


def _poly_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, 0) + ca * cb
    return out


def _figure_power(n_vars: int, k: int, a: int) -> dict:
    """(1 + x_1^k + ... + x_{n_vars}^k)^a via the multinomial theorem."""
    out: dict = {}
    for counts in _compositions(a, n_vars + 1):
        coeff = factorial(a) // prod(factorial(c) for c in counts)
        e = tuple(k * c for c in counts[1:])
        out[e] = out.get(e, 0) + coeff
    return out


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def configuration_series(n: int, modulus: ModulusLike, limit: int = DEFAULT_ENUM_LIMIT) -> CountingSeries:
    """Z(R_n) with t_k replaced by 1 + x_1^k + ... + x_{p-1}^k.

    The coefficient of x_1^{e_1} ... x_{p-1}^{e_{p-1}} counts unlabeled
    cgraphs with exactly e_j edges of color j.
    """
    p = as_modulus(modulus).p
    k = p - 1
    z = pair_group_cycle_index(n, limit)
    acc: dict[tuple[int, ...], Fraction] = {}
    for ctype, coeff in z.terms.items():
        poly = {(0,) * k: 1}
        for length, mult in ctype:
            poly = _poly_mul(poly, _figure_power(k, length, mult))
        for e, c in poly.items():
            acc[e] = acc.get(e, Fraction(0)) + coeff * c
    terms = {}
    for e, c in acc.items():
        if c.denominator != 1:
            raise AssertionError(f"non-integral coefficient {c} at {e}")
        if c:
            terms[e] = int(c)
    return CountingSeries(k, terms)


def count_unlabeled(n: int, modulus: ModulusLike, limit: int = DEFAULT_ENUM_LIMIT) -> int:
    """Number of cisomorphism classes of cgraphs on n vertices over GF(p)."""
    p = as_modulus(modulus).p
    if n == 1:
        return 1
    value = pair_group_cycle_index(n, limit).evaluate(lambda _k: p)
    if value.denominator != 1:
        raise AssertionError(f"non-integral orbit count {value}")
    return int(value)


def burnside_oracle(n: int, modulus: ModulusLike, budget: int = factorial(DEFAULT_ENUM_LIMIT)) -> int:
    """Orbit count by Burnside's lemma, walking every permutation of S_n.

    A coloring of the pairs is fixed by a permutation exactly when it is
    constant on each cycle of the induced pair permutation, so each sigma
    fixes p**cycles colorings. Shares no code with the cycle-index path.
    """
    p = as_modulus(modulus).p
    if factorial(n) > budget:
        raise BudgetExceeded(f"{n}! permutations exceeds the budget {budget}")
    q = n * (n - 1) // 2
    pos = {}
    for i in range(n):
        for j in range(i + 1, n):
            pos[(i, j)] = len(pos)
    total = 0
    for sigma in permutations(range(n)):
        target = [0] * q
        for (i, j), k in pos.items():
            a, b = sigma[i], sigma[j]
            target[k] = pos[(min(a, b), max(a, b))]
        cycles = 0
        visited = [False] * q
        for k in range(q):
            if not visited[k]:
                cycles += 1
                while not visited[k]:
                    visited[k] = True
                    k = target[k]
        total += p**cycles
    count, rem = divmod(total, factorial(n))
    if rem:
        raise AssertionError("Burnside sum not divisible by n!")
    return count


def labeled_cgraphs(n: int, modulus: ModulusLike) -> Iterator[CGraph]:
    """Every cgraph on vertices 0..n-1 over GF(p), in vector order."""
    modulus: Modulus = as_modulus(modulus)
    for colors in product(range(modulus.p), repeat=n * (n - 1) // 2):
        yield CGraph(n, modulus, colors)


def census(n: int, modulus: ModulusLike, budget: int = DEFAULT_CENSUS_BUDGET) -> set[CanonicalCode]:
    """Canonical codes of all p^(n(n-1)/2) labeled cgraphs, deduplicated."""
    modulus = as_modulus(modulus)
    size = modulus.p ** (n * (n - 1) // 2)
    if size > budget:
        raise BudgetExceeded(f"{size} labeled cgraphs exceeds the budget {budget}")
    return {canonical_code(g) for g in labeled_cgraphs(n, modulus)}

