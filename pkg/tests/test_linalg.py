import itertools
import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from fgmod.errors import DimensionMismatch
from fgmod.linalg import (
    MatrixR,
    determinant,
    kernel_generators,
    smith_normal_form,
    solve_linear,
)
from fgmod.rings import RingSpec, ZZ


def snf_invariants_hold(A):
    s = smith_normal_form(A)
    assert (s.U @ A @ s.V).entries == s.D.entries
    assert determinant(s.U) in (1, -1)
    assert determinant(s.V) in (1, -1)
    diag = s.diagonal()
    assert all(d >= 0 for d in diag)
    for a, b in zip(diag, diag[1:]):
        if a == 0:
            assert b == 0  # trailing zeros stay last
        else:
            assert b % a == 0
    # off-diagonal must vanish
    for i in range(s.D.rows):
        for j in range(s.D.cols):
            if i != j:
                assert s.D.entries[i][j] == 0
    return diag


def test_snf_trivial_cases():
    assert snf_invariants_hold(MatrixR.identity(ZZ, 2)) == [1, 1]
    assert snf_invariants_hold(MatrixR.zeros(ZZ, 2, 2)) == [0, 0]


def test_snf_worked_example():
    # oracle: d1 = gcd of all entries = 2; d1*d2 = |det| = |2*8 - 4*6| = 8, so d2 = 4
    entries = [2, 4, 6, 8]
    assert math.gcd(*entries) == 2 and abs(2 * 8 - 4 * 6) == 8
    A = MatrixR.from_rows(ZZ, [[2, 4], [6, 8]])
    assert snf_invariants_hold(A) == [2, 4]


def test_snf_empty_shapes():
    for rows, cols in ((0, 0), (0, 3), (3, 0)):
        A = MatrixR.zeros(ZZ, rows, cols)
        s = smith_normal_form(A)
        assert s.D.rows == rows and s.D.cols == cols


@settings(max_examples=60, deadline=None)
@given(
    st.integers(1, 5),
    st.integers(1, 5),
    st.integers(0, 2**32 - 1),
)
def test_snf_random_matrices(m, n, seed):
    rng = random.Random(seed)
    A = MatrixR.from_rows(ZZ, [[rng.randint(-20, 20) for _ in range(n)] for _ in range(m)])
    snf_invariants_hold(A)


def test_solve_examples():
    I2 = MatrixR.identity(ZZ, 2)
    assert solve_linear(I2, (3, -7)) == (3, -7)
    assert solve_linear(MatrixR.from_rows(ZZ, [[2]]), (1,)) is None
    x = solve_linear(MatrixR.from_rows(RingSpec.mod(6), [[2]]), (4,))
    assert x is not None and (2 * x[0]) % 6 == 4  # 2 and 5 are both valid


def test_solve_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        solve_linear(MatrixR.identity(ZZ, 2), (1,))


def brute_solutions(ring, A, b):
    n = ring.modulus
    sols = []
    for x in itertools.product(range(n), repeat=A.cols):
        if A.apply(x) == tuple(v % n for v in b):
            sols.append(x)
    return sols


def test_solve_matches_exhaustive_search():
    rng = random.Random(20240811)
    for n in (4, 5, 6, 8):
        ring = RingSpec.mod(n)
        for _ in range(25):
            rows, cols = rng.randint(1, 3), rng.randint(1, 3)
            A = MatrixR.from_rows(ring, [[rng.randrange(n) for _ in range(cols)] for _ in range(rows)])
            b = tuple(rng.randrange(n) for _ in range(rows))
            got = solve_linear(A, b)
            sols = brute_solutions(ring, A, b)
            if got is None:
                assert sols == []
            else:
                assert A.apply(got) == b
                assert list(got) in [list(s) for s in sols]


def test_kernel_examples():
    assert kernel_generators(MatrixR.identity(ZZ, 2)).cols == 0
    k = kernel_generators(MatrixR.from_rows(ZZ, [[0]]))
    assert k.cols == 1 and abs(k.entries[0][0]) == 1
    # oracle: multiplication by 2 on Z/4 kills exactly {0, 2}
    assert [x for x in range(4) if (2 * x) % 4 == 0] == [0, 2]
    k4 = kernel_generators(MatrixR.from_rows(RingSpec.mod(4), [[2]]))
    assert k4.cols == 1 and k4.entries[0][0] == 2


def test_kernel_matches_exhaustive_search():
    rng = random.Random(77)
    for n in (4, 6):
        ring = RingSpec.mod(n)
        for _ in range(20):
            rows, cols = rng.randint(1, 2), rng.randint(1, 3)
            A = MatrixR.from_rows(ring, [[rng.randrange(n) for _ in range(cols)] for _ in range(rows)])
            K = kernel_generators(A)
            # every generator is in the kernel
            for j in range(K.cols):
                assert A.apply(K.column(j)) == (0,) * rows
            # every exhaustive kernel element is a combination of the generators
            for x in itertools.product(range(n), repeat=cols):
                if A.apply(x) == (0,) * rows:
                    assert solve_linear(K, x) is not None


def test_determinant_against_cofactor_expansion():
    rng = random.Random(5)
    for _ in range(40):
        a, b, c, d = (rng.randint(-9, 9) for _ in range(4))
        A = MatrixR.from_rows(ZZ, [[a, b], [c, d]])
        assert determinant(A) == a * d - b * c
