"""Base rings Z and Z/n, element arithmetic, and ideal canonicalization.

Both supported rings are principal ideal rings, so every finitely generated
ideal collapses to a single canonical generator: the gcd of the generators,
further gcd'd with the modulus over Z/n.  Canonical representatives are
nonnegative, and lie in [0, n) over Z/n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import EmptyGeneratorList

__all__ = ["RingSpec", "Ideal", "ZZ", "canonicalize_ideal", "ideal_power"]


@dataclass(frozen=True)
class RingSpec:
    """The base ring: Z when modulus is None, otherwise Z/modulus."""

    modulus: int | None = None

    def __post_init__(self):
        if self.modulus is not None and self.modulus < 2:
            raise ValueError("modulus must be >= 2")

    @staticmethod
    def integers() -> "RingSpec":
        return RingSpec(None)

    @staticmethod
    def mod(n: int) -> "RingSpec":
        return RingSpec(n)

    @property
    def is_integers(self) -> bool:
        return self.modulus is None

    def reduce(self, x: int) -> int:
        """Canonical representative of x in this ring."""
        if self.modulus is None:
            return x
        return x % self.modulus

    def elements(self) -> range:
        """All ring elements; only available over Z/n."""
        if self.modulus is None:
            raise ValueError("Z has infinitely many elements")
        return range(self.modulus)

    def __str__(self) -> str:
        return "Z" if self.modulus is None else f"Z/{self.modulus}"


ZZ = RingSpec.integers()


@dataclass(frozen=True)
class Ideal:
    """A finitely generated ideal with its canonical principal generator."""

    ring: RingSpec
    generators: tuple[int, ...]
    canonical: int

    def __str__(self) -> str:
        return f"({self.canonical})"

    @property
    def is_zero(self) -> bool:
        return self.canonical == 0

    @property
    def is_unit(self) -> bool:
        return self.canonical == 1


def canonicalize_ideal(ring: RingSpec, generators: list[int] | tuple[int, ...]) -> Ideal:
    """Collapse a generator list to the ideal's canonical single generator.

    Over Z the canonical generator is gcd of the generators; over Z/n it is
    additionally gcd'd with n and reduced into [0, n).  The zero ideal has
    canonical generator 0.
    """
    if len(generators) == 0:
        raise EmptyGeneratorList("an ideal needs at least one generator")
    g = 0
    for x in generators:
        g = math.gcd(g, x)
    if ring.modulus is not None:
        g = math.gcd(g, ring.modulus) % ring.modulus
    return Ideal(ring, tuple(ring.reduce(x) for x in generators), g)


def principal(ring: RingSpec, d: int) -> Ideal:
    """The ideal generated by a single element."""
    return canonicalize_ideal(ring, [d])


def ideal_power(a: Ideal, k: int) -> Ideal:
    """The k-th power; k = 0 gives the unit ideal."""
    if k < 0:
        raise ValueError("exponent must be nonnegative")
    if k == 0:
        return canonicalize_ideal(a.ring, [1])
    return canonicalize_ideal(a.ring, [a.canonical**k])
