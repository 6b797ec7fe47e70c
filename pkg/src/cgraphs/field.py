"""Arithmetic in GF(p) and the color set built on it.

Field elements double as edge colors: color 0 is white (no edge), colors
1..p-1 are the painted edges.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt
from typing import Union

from .errors import ModulusMismatch, NotPrime, ZeroInverse

__all__ = [
    "Modulus",
    "FieldElement",
    "make_modulus",
    "is_prime",
    "next_prime",
    "add",
    "sub",
    "mul",
    "neg",
    "inv",
    "as_modulus",
]


def is_prime(n: int) -> bool:
    """Deterministic trial division up to isqrt(n)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def next_prime(n: int) -> int:
    """Smallest prime strictly greater than ``n``."""
    k = max(n + 1, 2)
    while not is_prime(k):
        k += 1
    return k


@dataclass(frozen=True)
class Modulus:
    """A prime modulus p. Calling it reduces an integer into GF(p)."""

    p: int

    def __post_init__(self):
        if isinstance(self.p, bool) or not isinstance(self.p, int) or not is_prime(self.p):
            raise NotPrime(self.p)

    def __call__(self, value: int) -> FieldElement:
        return FieldElement(int(value) % self.p, self)

    def elements(self) -> list[FieldElement]:
        return [FieldElement(v, self) for v in range(self.p)]

    def colors(self) -> range:
        """The non-white colors 1..p-1 as plain integers."""
        return range(1, self.p)

    def __repr__(self):
        return f"Modulus({self.p})"


@lru_cache(maxsize=None)
def make_modulus(p: int) -> Modulus:
    return Modulus(p)


def as_modulus(p: Union[int, Modulus]) -> Modulus:
    return p if isinstance(p, Modulus) else make_modulus(p)


@dataclass(frozen=True)
class FieldElement:
    value: int
    modulus: Modulus

    def __post_init__(self):
        if not 0 <= self.value < self.modulus.p:
            raise ValueError(f"{self.value} is not a representative in [0, {self.modulus.p - 1}]")

    def _check(self, other: FieldElement) -> None:
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected FieldElement, got {type(other).__name__}")
        if other.modulus != self.modulus:
            raise ModulusMismatch(f"GF({self.modulus.p}) vs GF({other.modulus.p})")

    def __add__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return FieldElement((self.value + other.value) % self.modulus.p, self.modulus)

    def __sub__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return FieldElement((self.value - other.value) % self.modulus.p, self.modulus)

    def __mul__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return FieldElement(self.value * other.value % self.modulus.p, self.modulus)

    def __neg__(self) -> FieldElement:
        return FieldElement(-self.value % self.modulus.p, self.modulus)

    def inverse(self) -> FieldElement:
        if self.value == 0:
            raise ZeroInverse(f"0 has no inverse in GF({self.modulus.p})")
        return FieldElement(pow(self.value, -1, self.modulus.p), self.modulus)

    def __truediv__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return self * other.inverse()

    def __int__(self):
        return self.value

    def __index__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} (mod {self.modulus.p})"


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def sub(a: FieldElement, b: FieldElement) -> FieldElement:
    return a - b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def neg(a: FieldElement) -> FieldElement:
    return -a


def inv(a: FieldElement) -> FieldElement:
    return a.inverse()
