"""Finitely presented modules: canonical forms, isomorphism tests, maps.

A module is the cokernel of its relation matrix: `gens` generators, one
relation per *column* of `rels`.  The invariant-factor decomposition computed
from the Smith normal form of the relations is a complete isomorphism
invariant over both supported rings, so every "is isomorphic" question in the
package reduces to equality of canonical forms.

Submodules are carried as (ambient, generator columns) pairs so that
membership tests stay exact; converting one to a standalone presentation
computes the relations of its span.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import prod

from .errors import AmbientMismatch, RingMismatch
from .linalg import (
    MatrixR,
    block_diag,
    from_columns,
    hstack,
    kernel_generators,
    smith_normal_form,
    solve_columns,
    spans_include,
)
from .rings import Ideal, RingSpec, ZZ

__all__ = [
    "Presentation",
    "CanonicalForm",
    "ModuleMap",
    "Submodule",
    "canonical_form",
    "canonical_presentation",
    "canonicalize",
    "iso_test",
    "direct_sum",
    "quotient_by_ideal",
    "ideal_multiple",
    "kernel_of_map",
    "mult_map",
    "identity_map",
    "submodule_equal",
    "restrict_map",
    "quotient_by_submodule",
    "scaled_submodule",
    "module_order",
    "is_zero_module",
    "express_in_span",
]


@dataclass(frozen=True)
class Presentation:
    """A finitely presented module: cokernel of the relation matrix."""

    ring: RingSpec
    gens: int
    rels: MatrixR

    def __post_init__(self):
        if self.rels.rows != self.gens:
            raise ValueError("relation matrix must have one row per generator")
        if self.rels.ring != self.ring:
            raise RingMismatch("relations live over the wrong ring")

    @staticmethod
    def free(ring: RingSpec, rank: int) -> "Presentation":
        return Presentation(ring, rank, MatrixR(ring, rank, 0, ((),) * rank))

    @staticmethod
    def zero(ring: RingSpec) -> "Presentation":
        return Presentation(ring, 0, MatrixR(ring, 0, 0, ()))

    @staticmethod
    def cyclic(ring: RingSpec, d: int) -> "Presentation":
        """The module R/(d)."""
        return Presentation(ring, 1, MatrixR.from_rows(ring, [[d]]))

    @staticmethod
    def from_relations(ring: RingSpec, rows: list[list[int]]) -> "Presentation":
        m = MatrixR.from_rows(ring, rows)
        return Presentation(ring, m.rows, m)


@dataclass(frozen=True)
class CanonicalForm:
    """Invariant factors d1 | d2 | ... (each >= 2) plus a free rank.

    Over Z/n the free rank is always zero: free summands appear as torsion
    factor n.  Two presentations are isomorphic iff their canonical forms are
    equal.
    """

    ring: RingSpec
    torsion_factors: tuple[int, ...]
    free_rank: int

    @property
    def is_trivial(self) -> bool:
        return not self.torsion_factors and self.free_rank == 0

    def order(self) -> int | None:
        """Number of elements, or None when infinite."""
        if self.free_rank:
            return None
        return prod(self.torsion_factors) if self.torsion_factors else 1


@lru_cache(maxsize=None)
def canonical_form(P: Presentation) -> CanonicalForm:
    """Invariant factors read off the Smith normal form of the relations."""
    g = P.gens
    if P.ring.is_integers:
        rels = P.rels
    else:
        n = P.ring.modulus
        rels = hstack(P.rels.lift(), MatrixR.diagonal(ZZ, [n] * g))
    snf = smith_normal_form(rels.lift())
    diag = snf.diagonal()
    factors = tuple(d for d in diag if d > 1)
    nonzero = sum(1 for d in diag if d != 0)
    free_rank = g - nonzero
    return CanonicalForm(P.ring, factors, free_rank)


def canonical_presentation(C: CanonicalForm) -> Presentation:
    """The diagonal presentation realizing a canonical form."""
    ring = C.ring
    k = len(C.torsion_factors)
    g = k + C.free_rank
    rows = [[C.torsion_factors[i] if j == i else 0 for j in range(k)] for i in range(k)]
    rows += [[0] * k for _ in range(C.free_rank)]
    rels = MatrixR.from_rows(ring, rows) if g else MatrixR(ring, 0, k, ())
    return Presentation(ring, g, rels)


def canonicalize(P: Presentation) -> Presentation:
    """An isomorphic diagonal presentation (shrinks intermediate results)."""
    return canonical_presentation(canonical_form(P))


def module_order(P: Presentation) -> int | None:
    return canonical_form(P).order()


def is_zero_module(P: Presentation) -> bool:
    return canonical_form(P).is_trivial


def iso_test(P: Presentation, Q: Presentation) -> bool:
    """Whether two presentations define isomorphic modules."""
    if P.ring != Q.ring:
        raise RingMismatch("cannot compare modules over different rings")
    return canonical_form(P) == canonical_form(Q)


def direct_sum(ring: RingSpec, parts: list[Presentation]) -> Presentation:
    """Block-diagonal sum; the empty sum is the zero module."""
    for p in parts:
        if p.ring != ring:
            raise RingMismatch("direct sum across rings")
    gens = sum(p.gens for p in parts)
    rels = block_diag(ring, [p.rels for p in parts])
    if rels.rows != gens:  # only when parts is empty
        rels = MatrixR(ring, gens, 0, ((),) * gens)
    return Presentation(ring, gens, rels)


@dataclass(frozen=True)
class ModuleMap:
    """A homomorphism given on generators, certified well-defined.

    The matrix has target.gens rows and source.gens columns; construction
    verifies that every relation of the source maps into the relation span of
    the target.
    """

    source: Presentation
    target: Presentation
    matrix: MatrixR

    def __post_init__(self):
        if self.source.ring != self.target.ring:
            raise RingMismatch("map endpoints live over different rings")
        if self.matrix.rows != self.target.gens or self.matrix.cols != self.source.gens:
            raise ValueError("map matrix has the wrong shape")
        if self.source.rels.cols:
            moved = self.matrix @ self.source.rels
            if not spans_include(self.target.rels, moved):
                raise ValueError("map does not respect the source relations")

    def compose(self, inner: "ModuleMap") -> "ModuleMap":
        """self o inner."""
        if inner.target != self.source:
            raise ValueError("maps are not composable")
        return ModuleMap(inner.source, self.target, self.matrix @ inner.matrix)

    def image(self) -> "Submodule":
        return Submodule(self.target, self.matrix)

    def is_zero_map(self) -> bool:
        return spans_include(self.target.rels, self.matrix)


def mult_map(P: Presentation, r: int) -> ModuleMap:
    """The endomorphism x -> r*x."""
    return ModuleMap(P, P, MatrixR.identity(P.ring, P.gens).scale(r))


def identity_map(P: Presentation) -> ModuleMap:
    return mult_map(P, 1)


@dataclass(frozen=True)
class Submodule:
    """A submodule of a presented module, spanned by generator columns."""

    ambient: Presentation
    columns: MatrixR

    def __post_init__(self):
        if self.columns.rows != self.ambient.gens:
            raise ValueError("generator columns must match the ambient generator count")
        if self.columns.ring != self.ambient.ring:
            raise RingMismatch("columns live over the wrong ring")

    def _span(self) -> MatrixR:
        return hstack(self.columns, self.ambient.rels)

    def contains(self, other: "Submodule") -> bool:
        if other.ambient != self.ambient:
            raise AmbientMismatch("submodules sit inside different ambient modules")
        return spans_include(self._span(), other.columns)

    def is_zero(self) -> bool:
        return spans_include(self.ambient.rels, self.columns)

    def to_presentation(self) -> Presentation:
        """The span as a standalone module on these generators."""
        m = self.columns.cols
        ker = kernel_generators(self._span())
        rel_cols = []
        for j in range(ker.cols):
            col = ker.column(j)[:m]
            if any(col):
                rel_cols.append(col)
        return Presentation(self.ambient.ring, m, from_columns(self.ambient.ring, rel_cols, m))

    def inclusion_map(self) -> ModuleMap:
        return ModuleMap(self.to_presentation(), self.ambient, self.columns)


def submodule_equal(S1: Submodule, S2: Submodule) -> bool:
    """Mutual membership of generators, solved modulo the ambient relations."""
    return S1.contains(S2) and S2.contains(S1)


def quotient_by_submodule(P: Presentation, S: Submodule) -> Presentation:
    if S.ambient != P:
        raise AmbientMismatch("submodule does not sit inside this module")
    return Presentation(P.ring, P.gens, hstack(P.rels, S.columns))


def scaled_submodule(P: Presentation, c: int) -> Submodule:
    """The submodule c*P spanned by c times each generator."""
    return Submodule(P, MatrixR.identity(P.ring, P.gens).scale(c))


def quotient_by_ideal(P: Presentation, a: Ideal) -> Presentation:
    """P / aP, realized by appending d*e_i relations."""
    if a.ring != P.ring:
        raise RingMismatch("ideal lives over a different ring")
    return quotient_by_submodule(P, scaled_submodule(P, a.canonical))


def ideal_multiple(P: Presentation, a: Ideal) -> tuple[Presentation, ModuleMap]:
    """The submodule aP together with its inclusion into P."""
    if a.ring != P.ring:
        raise RingMismatch("ideal lives over a different ring")
    sub = scaled_submodule(P, a.canonical)
    return sub.to_presentation(), sub.inclusion_map()


def kernel_of_map(f: ModuleMap) -> tuple[Presentation, ModuleMap]:
    """{x in source : f(x) = 0 in target}, with its inclusion."""
    src = f.source
    ker = kernel_generators(hstack(f.matrix, f.target.rels))
    cols = []
    for j in range(ker.cols):
        col = ker.column(j)[: src.gens]
        if any(col):
            cols.append(col)
    sub = Submodule(src, from_columns(src.ring, cols, src.gens))
    return sub.to_presentation(), sub.inclusion_map()


def restrict_map(f: ModuleMap, source_sub: Submodule, target_sub: Submodule) -> ModuleMap:
    """The map induced between submodule presentations.

    Requires f to carry the source submodule into the target one; each moved
    generator is re-expressed in the target submodule's generators modulo the
    ambient relations.
    """
    if source_sub.ambient != f.source or target_sub.ambient != f.target:
        raise AmbientMismatch("submodules do not sit inside the map's endpoints")
    moved = f.matrix @ source_sub.columns
    coeffs = express_in_span(target_sub.columns, f.target.rels, moved)
    if coeffs is None:
        raise ValueError("map does not carry the source submodule into the target submodule")
    return ModuleMap(source_sub.to_presentation(), target_sub.to_presentation(), coeffs)


def express_in_span(columns: MatrixR, rels: MatrixR, vectors: MatrixR) -> MatrixR | None:
    """Coefficients writing each vector as a combination of the columns,
    modulo the relation span; None when some vector is not in the span."""
    sol = solve_columns(hstack(columns, rels), vectors)
    if sol is None:
        return None
    return MatrixR(columns.ring, columns.cols, vectors.cols, sol.entries[: columns.cols])
