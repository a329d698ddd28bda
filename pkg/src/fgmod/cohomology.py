"""Generalized local cohomology and homology along an ideal.

Both are evaluated without any chain-map lifting: when the second argument is
reduced (resp. coreduced) relative to the first, the defining (co)limit
collapses to a single Ext (resp. Tor) against M/aM.  Otherwise the chain of
ideal multiples a^k M is stabilized first, after which every transition map of
the directed system is an identity and the (co)limit equals the term at the
stabilization exponent.  A chain that never stabilizes raises NonStabilizing:
the limit then lives outside finitely generated modules.
"""

from __future__ import annotations

from .adic import (
    DEFAULT_KMAX,
    completion,
    completion_exponent,
    is_coreduced_wrt,
    is_reduced_wrt,
    power_quotient,
)
from .errors import NonStabilizing
from .functors import ext, tor
from .modules import Presentation, iso_test, quotient_by_ideal
from .rings import Ideal

__all__ = ["local_cohomology", "local_homology", "is_adically_complete"]


def local_cohomology(
    i: int, M: Presentation, N: Presentation, a: Ideal, kmax: int = DEFAULT_KMAX
) -> Presentation:
    """Degree-i local cohomology of the pair (M, N) along the ideal."""
    if i < 0:
        raise ValueError("degree must be nonnegative")
    if is_reduced_wrt(M, N, a):
        return ext(i, quotient_by_ideal(M, a), N)
    k = completion_exponent(M, a, kmax)
    return ext(i, power_quotient(M, a, k), N)


def local_homology(
    i: int, M: Presentation, N: Presentation, a: Ideal, kmax: int = DEFAULT_KMAX
) -> Presentation:
    """Degree-i local homology of the pair (M, N) along the ideal."""
    if i < 0:
        raise ValueError("degree must be nonnegative")
    if is_coreduced_wrt(M, N, a):
        return tor(i, quotient_by_ideal(M, a), N)
    k = completion_exponent(M, a, kmax)
    return tor(i, power_quotient(M, a, k), N)


def is_adically_complete(N: Presentation, a: Ideal, kmax: int = DEFAULT_KMAX) -> bool:
    """Whether N is isomorphic to its completion along the ideal.

    A non-stabilizing chain means the completion left the finitely generated
    world, which in particular is not isomorphic to N.
    """
    try:
        limit = completion(N, a, kmax)
    except NonStabilizing:
        return False
    return iso_test(limit.value, N)
