"""Exact matrix algebra over Z and Z/n.

Everything downstream (canonical forms, Hom, tensor, Ext, Tor, the adic
functors) reduces to three primitives implemented here: Smith normal form,
linear solving, and kernel generators.  All arithmetic is arbitrary-precision:
Smith normal form intermediates can overflow fixed-width words even for small
inputs.

Computations over Z/n are lifted to Z by augmenting with n*I (one audited
elimination kernel, no separate modular path).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch, RingMismatch
from .rings import RingSpec, ZZ

__all__ = [
    "MatrixR",
    "SmithDecomposition",
    "smith_normal_form",
    "solve_linear",
    "solve_columns",
    "spans_include",
    "kernel_generators",
    "determinant",
]


@dataclass(frozen=True)
class MatrixR:
    """Immutable matrix over Z or Z/n, entries stored row-major."""

    ring: RingSpec
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows:
            raise DimensionMismatch("row count does not match entries")
        n = self.ring.modulus
        fixed = None
        for i, row in enumerate(self.entries):
            if len(row) != self.cols:
                raise DimensionMismatch("ragged rows")
            if n is not None and any(not 0 <= x < n for x in row):
                if fixed is None:
                    fixed = [tuple(x % n for x in r) for r in self.entries]
        if fixed is not None:
            object.__setattr__(self, "entries", tuple(fixed))

    @staticmethod
    def from_rows(ring: RingSpec, rows: list[list[int]]) -> "MatrixR":
        r = len(rows)
        c = len(rows[0]) if rows else 0
        return MatrixR(ring, r, c, tuple(tuple(row) for row in rows))

    @staticmethod
    def zeros(ring: RingSpec, rows: int, cols: int) -> "MatrixR":
        return MatrixR(ring, rows, cols, tuple((0,) * cols for _ in range(rows)))

    @staticmethod
    def identity(ring: RingSpec, k: int) -> "MatrixR":
        return MatrixR(
            ring, k, k, tuple(tuple(1 if i == j else 0 for j in range(k)) for i in range(k))
        )

    @staticmethod
    def diagonal(ring: RingSpec, diag: list[int] | tuple[int, ...]) -> "MatrixR":
        k = len(diag)
        return MatrixR(
            ring, k, k, tuple(tuple(diag[i] if i == j else 0 for j in range(k)) for i in range(k))
        )

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.entries)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> "MatrixR":
        return MatrixR(
            self.ring,
            self.cols,
            self.rows,
            tuple(tuple(self.entries[i][j] for i in range(self.rows)) for j in range(self.cols)),
        )

    def scale(self, c: int) -> "MatrixR":
        red = self.ring.reduce
        return MatrixR(
            self.ring, self.rows, self.cols, tuple(tuple(red(c * x) for x in r) for r in self.entries)
        )

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def lift(self) -> "MatrixR":
        """The same entries viewed over Z."""
        return MatrixR(ZZ, self.rows, self.cols, self.entries)

    def over(self, ring: RingSpec) -> "MatrixR":
        """The same entries reduced into another ring."""
        return MatrixR(ring, self.rows, self.cols, self.entries)

    def __matmul__(self, other: "MatrixR") -> "MatrixR":
        if self.ring != other.ring:
            raise RingMismatch("matrix product across rings")
        if self.cols != other.rows:
            raise DimensionMismatch(f"{self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        red = self.ring.reduce
        bt = other.transpose().entries
        out = tuple(
            tuple(red(sum(a * b for a, b in zip(row, col))) for col in bt) for row in self.entries
        )
        return MatrixR(self.ring, self.rows, other.cols, out)

    def apply(self, vec: tuple[int, ...] | list[int]) -> tuple[int, ...]:
        if len(vec) != self.cols:
            raise DimensionMismatch("vector length does not match column count")
        red = self.ring.reduce
        return tuple(red(sum(a * b for a, b in zip(row, vec))) for row in self.entries)


def hstack(a: MatrixR, b: MatrixR) -> MatrixR:
    if a.rows != b.rows:
        raise DimensionMismatch("hstack needs equal row counts")
    return MatrixR(
        a.ring, a.rows, a.cols + b.cols, tuple(ra + rb for ra, rb in zip(a.entries, b.entries))
    )


def vstack(a: MatrixR, b: MatrixR) -> MatrixR:
    if a.cols != b.cols:
        raise DimensionMismatch("vstack needs equal column counts")
    return MatrixR(a.ring, a.rows + b.rows, a.cols, a.entries + b.entries)


def from_columns(ring: RingSpec, cols: list[tuple[int, ...]], nrows: int) -> MatrixR:
    return MatrixR(
        ring, nrows, len(cols), tuple(tuple(c[i] for c in cols) for i in range(nrows))
    )


def block_diag(ring: RingSpec, blocks: list[MatrixR]) -> MatrixR:
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    out = [[0] * cols for _ in range(rows)]
    r0 = c0 = 0
    for b in blocks:
        for i in range(b.rows):
            out[r0 + i][c0 : c0 + b.cols] = list(b.entries[i])
        r0 += b.rows
        c0 += b.cols
    return MatrixR.from_rows(ring, out) if rows else MatrixR(ring, 0, cols, ())


def kron(a: MatrixR, b: MatrixR) -> MatrixR:
    """Kronecker product; (a ⊗ b)[r*rb+i][c*cb+j] = a[r][c] * b[i][j]."""
    if a.ring != b.ring:
        raise RingMismatch("kron across rings")
    red = a.ring.reduce
    rows = a.rows * b.rows
    cols = a.cols * b.cols
    out = []
    for r in range(a.rows):
        arow = a.entries[r]
        for i in range(b.rows):
            brow = b.entries[i]
            out.append(tuple(red(arow[c] * brow[j]) for c in range(a.cols) for j in range(b.cols)))
    return MatrixR(a.ring, rows, cols, tuple(out))


@dataclass(frozen=True)
class SmithDecomposition:
    """U @ A @ V = D with U, V unimodular and D diagonal, d1 | d2 | ..."""

    U: MatrixR
    D: MatrixR
    V: MatrixR

    def diagonal(self) -> list[int]:
        k = min(self.D.rows, self.D.cols)
        return [self.D.entries[i][i] for i in range(k)]


def _axpy_row(mat: list[list[int]], dst: int, src: int, c: int, start: int = 0):
    md, ms = mat[dst], mat[src]
    for j in range(start, len(md)):
        md[j] += c * ms[j]


def _axpy_col(mat: list[list[int]], dst: int, src: int, c: int, start: int = 0):
    for i in range(start, len(mat)):
        row = mat[i]
        row[dst] += c * row[src]


def _swap_col(mat: list[list[int]], a: int, b: int):
    for row in mat:
        row[a], row[b] = row[b], row[a]


def smith_normal_form(A: MatrixR) -> SmithDecomposition:
    """Smith normal form over Z with both transforms.

    Pivot choice is the smallest nonzero absolute value, found by a
    deterministic row-major scan, so results are reproducible.
    """
    if not A.ring.is_integers:
        raise RingMismatch("Smith normal form is computed over Z; lift Z/n inputs first")
    m, n = A.rows, A.cols
    a = A.to_lists()
    U = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    V = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    for t in range(min(m, n)):
        # locate the smallest nonzero entry of the trailing block
        best = None
        pi = pj = -1
        for i in range(t, m):
            ai = a[i]
            for j in range(t, n):
                v = ai[j]
                if v and (best is None or -best < v < best):
                    best = abs(v)
                    pi, pj = i, j
                    if best == 1:
                        break
            if best == 1:
                break
        if best is None:
            break
        if pi != t:
            a[t], a[pi] = a[pi], a[t]
            U[t], U[pi] = U[pi], U[t]
        if pj != t:
            _swap_col(a, t, pj)
            _swap_col(V, t, pj)

        while True:
            # clear column t below the pivot
            i = t + 1
            while i < m:
                v = a[i][t]
                if v:
                    q = v // a[t][t]
                    if q:
                        _axpy_row(a, i, t, -q, start=t)
                        _axpy_row(U, i, t, -q)
                    if a[i][t]:
                        # nonzero remainder: it becomes the (smaller) pivot
                        a[t], a[i] = a[i], a[t]
                        U[t], U[i] = U[i], U[t]
                        i = t + 1
                        continue
                i += 1
            # clear row t right of the pivot
            swapped = False
            j = t + 1
            while j < n:
                v = a[t][j]
                if v:
                    q = v // a[t][t]
                    if q:
                        _axpy_col(a, j, t, -q, start=t)
                        _axpy_col(V, j, t, -q)
                    if a[t][j]:
                        _swap_col(a, t, j)
                        _swap_col(V, t, j)
                        swapped = True
                        j = t + 1
                        continue
                j += 1
            if swapped:
                continue  # column t may be dirty again
            # pivot must divide every entry of the trailing block
            p = a[t][t]
            fold = -1
            for i in range(t + 1, m):
                ai = a[i]
                for j in range(t + 1, n):
                    if ai[j] % p:
                        fold = i
                        break
                if fold >= 0:
                    break
            if fold < 0:
                break
            _axpy_row(a, t, fold, 1, start=t)
            _axpy_row(U, t, fold, 1)

        if a[t][t] < 0:
            for j in range(t, n):
                a[t][j] = -a[t][j]
            for j in range(m):
                U[t][j] = -U[t][j]

    return SmithDecomposition(
        MatrixR.from_rows(ZZ, U) if m else MatrixR(ZZ, 0, 0, ()),
        MatrixR.from_rows(ZZ, a) if m else MatrixR(ZZ, 0, n, ()),
        MatrixR.from_rows(ZZ, V) if n else MatrixR(ZZ, 0, 0, ()),
    )


def _solve_against_snf(snf: SmithDecomposition, b: tuple[int, ...]) -> tuple[int, ...] | None:
    """One solution of A x = b over Z given U A V = D, or None."""
    U, D, V = snf.U, snf.D, snf.V
    m, n = D.rows, D.cols
    c = U.apply(b)
    y = [0] * n
    for i in range(m):
        d = D.entries[i][i] if i < n else 0
        if d:
            if c[i] % d:
                return None
            y[i] = c[i] // d
        elif c[i]:
            return None
    return V.apply(y)


class _Solver:
    """Repeated exact solves against a fixed coefficient matrix."""

    def __init__(self, A: MatrixR):
        self.ring = A.ring
        self.cols = A.cols
        if A.ring.is_integers:
            self._snf = smith_normal_form(A)
            self._aug = 0
        else:
            n = A.ring.modulus
            lifted = hstack(A.lift(), MatrixR.diagonal(ZZ, [n] * A.rows))
            self._snf = smith_normal_form(lifted)
            self._aug = A.rows

    def solve(self, b: tuple[int, ...]) -> tuple[int, ...] | None:
        x = _solve_against_snf(self._snf, b)
        if x is None:
            return None
        x = x[: self.cols] if self._aug else x
        red = self.ring.reduce
        return tuple(red(v) for v in x)


def solve_linear(A: MatrixR, b: tuple[int, ...] | list[int]) -> tuple[int, ...] | None:
    """A solution x with A x = b exactly in the ring, or None if none exists."""
    if len(b) != A.rows:
        raise DimensionMismatch("right-hand side length does not match row count")
    return _Solver(A).solve(tuple(b))


def solve_columns(A: MatrixR, B: MatrixR) -> MatrixR | None:
    """Solve A X = B column by column; None if any column is unsolvable."""
    if A.rows != B.rows:
        raise DimensionMismatch("A and B need equal row counts")
    solver = _Solver(A)
    xs = []
    for j in range(B.cols):
        x = solver.solve(B.column(j))
        if x is None:
            return None
        xs.append(x)
    return from_columns(A.ring, xs, A.cols)


def spans_include(A: MatrixR, B: MatrixR) -> bool:
    """Whether every column of B lies in the column span of A."""
    return solve_columns(A, B) is not None


def kernel_generators(A: MatrixR) -> MatrixR:
    """Columns generating {x : A x = 0} over the ring.

    Over Z the result is a basis of the (free) kernel.  Over Z/n the kernel of
    the lifted matrix [A | n*I] is projected back and reduced.
    """
    if A.ring.is_integers:
        snf = smith_normal_form(A)
        D, V = snf.D, snf.V
        free = [j for j in range(A.cols) if j >= A.rows or D.entries[j][j] == 0]
        return from_columns(ZZ, [V.column(j) for j in free], A.cols)
    n = A.ring.modulus
    lifted = hstack(A.lift(), MatrixR.diagonal(ZZ, [n] * A.rows))
    ker = kernel_generators(lifted)
    cols = []
    for j in range(ker.cols):
        col = tuple(v % n for v in ker.column(j)[: A.cols])
        if any(col):
            cols.append(col)
    return from_columns(A.ring, cols, A.cols)


def determinant(A: MatrixR) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if A.rows != A.cols:
        raise DimensionMismatch("determinant needs a square matrix")
    k = A.rows
    if k == 0:
        return A.ring.reduce(1)
    a = [list(r) for r in A.lift().entries]
    sign = 1
    prev = 1
    for t in range(k - 1):
        if a[t][t] == 0:
            for i in range(t + 1, k):
                if a[i][t]:
                    a[t], a[i] = a[i], a[t]
                    sign = -sign
                    break
            else:
                return A.ring.reduce(0)
        for i in range(t + 1, k):
            for j in range(t + 1, k):
                a[i][j] = (a[i][j] * a[t][t] - a[i][t] * a[t][j]) // prev
            a[i][t] = 0
        prev = a[t][t]
    return A.ring.reduce(sign * a[k - 1][k - 1])
