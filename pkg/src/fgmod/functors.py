"""Hom, tensor, duality, free resolutions, Ext and Tor.

Hom modules, Ext and Tor are all computed by the same pattern: flatten
matrices column-major into a free ambient module, cut out the solution set of
a linear condition (a kernel computation over the ring), and quotient by a
degeneracy span.  With vec stacking columns, the two identities used
throughout are vec(H @ P) = (P^T (x) I) vec(H) and vec(Q @ Y) = (I (x) Q)
vec(Y).

Ext and Tor are taken from a free resolution of the *first* argument only;
symmetry of Tor is verified empirically by the harness rather than by a
balanced implementation.  Over Z/n resolutions can be infinite, so prefixes
are computed to the requested degree with no periodicity detection.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import FreePartNotSupported, RingMismatch
from .linalg import MatrixR, from_columns, hstack, kernel_generators, kron
from .modules import (
    ModuleMap,
    Presentation,
    canonical_form,
    canonical_presentation,
    express_in_span,
)

__all__ = [
    "hom_module",
    "hom_data",
    "HomData",
    "tensor_module",
    "matlis_dual",
    "FreeResolutionPrefix",
    "free_resolution_prefix",
    "ext",
    "tor",
    "hom_postcompose",
    "tensor_postcompose",
]


def _project_kernel(cond: MatrixR, keep: int, ambient_ring) -> MatrixR:
    """First `keep` coordinates of each kernel generator, zeros dropped."""
    ker = kernel_generators(cond)
    cols = []
    for j in range(ker.cols):
        col = ker.column(j)[:keep]
        if any(col):
            cols.append(col)
    return from_columns(ambient_ring, cols, keep)


def _present_subquotient(Z: MatrixR, W: MatrixR) -> Presentation:
    """span(Z)/span(W) presented on the columns of Z (requires W <= span Z)."""
    m = Z.cols
    ring = Z.ring
    rels = _project_kernel(hstack(Z, W), m, ring)
    return Presentation(ring, m, rels)


@dataclass(frozen=True)
class HomData:
    """A hom module together with its explicit matrix generators.

    `generators` holds one flattened (target.gens x source.gens) matrix per
    presentation generator; `ambient_rels` spans the matrices that represent
    the zero homomorphism.  Both live in the free module of all flattened
    matrices, which is what induced maps are solved against.
    """

    source: Presentation
    target: Presentation
    presentation: Presentation
    generators: MatrixR
    ambient_rels: MatrixR


@lru_cache(maxsize=None)
def hom_data(M: Presentation, N: Presentation) -> HomData:
    if M.ring != N.ring:
        raise RingMismatch("Hom of modules over different rings")
    ring = M.ring
    g, P = M.gens, M.rels
    h, Q = N.gens, N.rels
    dim = h * g
    # a matrix H defines a map iff every column of H @ P dies in N
    cond = hstack(kron(P.transpose(), MatrixR.identity(ring, h)), kron(MatrixR.identity(ring, P.cols), Q))
    Z = _project_kernel(cond, dim, ring) if cond.rows else MatrixR.identity(ring, dim)
    W = kron(MatrixR.identity(ring, g), Q)
    return HomData(M, N, _present_subquotient(Z, W), Z, W)


def hom_module(M: Presentation, N: Presentation) -> Presentation:
    """The module of homomorphisms M -> N."""
    return hom_data(M, N).presentation


@lru_cache(maxsize=None)
def tensor_module(M: Presentation, N: Presentation) -> Presentation:
    """M (x) N on pair generators (i, j) |-> i * N.gens + j."""
    if M.ring != N.ring:
        raise RingMismatch("tensor of modules over different rings")
    ring = M.ring
    rels = hstack(
        kron(M.rels, MatrixR.identity(ring, N.gens)),
        kron(MatrixR.identity(ring, M.gens), N.rels),
    )
    return Presentation(ring, M.gens * N.gens, rels)


def matlis_dual(N: Presentation) -> Presentation:
    """Hom into the chosen injective cogenerator.

    Over Z the cogenerator is Q/Z and the dual of a torsion module is computed
    factor-wise: Hom(Z/d, Q/Z) is the cyclic module on 1/d, so the dual has
    the same invariant factors.  Free summands would leave the finitely
    generated world.  Over Z/n the ring is its own injective cogenerator, so
    the dual is Hom(N, R).
    """
    if N.ring.is_integers:
        C = canonical_form(N)
        if C.free_rank:
            raise FreePartNotSupported("dual of a module with free part is not finitely generated")
        return canonical_presentation(C)
    return hom_module(N, Presentation.free(N.ring, 1))


@dataclass(frozen=True)
class FreeResolutionPrefix:
    """Differentials d_L, ..., d_1 of free modules resolving the target.

    differentials[k] is d_{k+1}: the matrix of F_{k+1} -> F_k, with F_0 free
    on the target's generators and d_1 the relation matrix.  Consecutive
    differentials compose to zero and each kernel equals the next image.
    """

    target: Presentation
    length: int
    differentials: tuple[MatrixR, ...]

    def rank(self, k: int) -> int:
        """Rank of the free module F_k."""
        if k == 0:
            return self.target.gens
        return self.differentials[k - 1].cols


@lru_cache(maxsize=None)
def free_resolution_prefix(M: Presentation, length: int) -> FreeResolutionPrefix:
    if length < 0:
        raise ValueError("resolution length must be nonnegative")
    diffs = []
    current = M.rels
    for _ in range(length):
        diffs.append(current)
        current = kernel_generators(current)
    return FreeResolutionPrefix(M, length, tuple(diffs))


@lru_cache(maxsize=None)
def ext(i: int, M: Presentation, N: Presentation) -> Presentation:
    """Degree-i cohomology of Hom(F, N) for a free resolution F of M."""
    if i < 0:
        raise ValueError("degree must be nonnegative")
    if M.ring != N.ring:
        raise RingMismatch("Ext of modules over different rings")
    ring = M.ring
    res = free_resolution_prefix(M, i + 1)
    h, Q = N.gens, N.rels
    f_i = res.rank(i)
    dim = h * f_i
    d_out = res.differentials[i]  # F_{i+1} -> F_i
    cond = hstack(
        kron(d_out.transpose(), MatrixR.identity(ring, h)),
        kron(MatrixR.identity(ring, d_out.cols), Q),
    )
    Z = _project_kernel(cond, dim, ring) if cond.rows else MatrixR.identity(ring, dim)
    W = kron(MatrixR.identity(ring, f_i), Q)
    if i > 0:
        d_in = res.differentials[i - 1]  # F_i -> F_{i-1}; precomposition is the coboundary
        W = hstack(kron(d_in.transpose(), MatrixR.identity(ring, h)), W)
    return _present_subquotient(Z, W)


@lru_cache(maxsize=None)
def tor(i: int, M: Presentation, N: Presentation) -> Presentation:
    """Degree-i homology of F (x) N for a free resolution F of M."""
    if i < 0:
        raise ValueError("degree must be nonnegative")
    if M.ring != N.ring:
        raise RingMismatch("Tor of modules over different rings")
    ring = M.ring
    res = free_resolution_prefix(M, i + 1)
    h, Q = N.gens, N.rels
    f_i = res.rank(i)
    dim = h * f_i
    if i == 0:
        Z = MatrixR.identity(ring, dim)
    else:
        d_out = res.differentials[i - 1]  # F_i -> F_{i-1}
        cond = hstack(
            kron(d_out, MatrixR.identity(ring, h)),
            kron(MatrixR.identity(ring, d_out.rows), Q),
        )
        Z = _project_kernel(cond, dim, ring) if cond.rows else MatrixR.identity(ring, dim)
    d_in = res.differentials[i]  # F_{i+1} -> F_i; its image is the boundary span
    W = hstack(kron(d_in, MatrixR.identity(ring, h)), kron(MatrixR.identity(ring, f_i), Q))
    return _present_subquotient(Z, W)


def hom_postcompose(M: Presentation, f: ModuleMap) -> ModuleMap:
    """The induced map Hom(M, source f) -> Hom(M, target f)."""
    hd_s = hom_data(M, f.source)
    hd_t = hom_data(M, f.target)
    lifted = kron(MatrixR.identity(M.ring, M.gens), f.matrix) @ hd_s.generators
    coeffs = express_in_span(hd_t.generators, hd_t.ambient_rels, lifted)
    if coeffs is None:
        raise RuntimeError("post-composition left the hom module; this cannot happen")
    return ModuleMap(hd_s.presentation, hd_t.presentation, coeffs)


def tensor_postcompose(M: Presentation, f: ModuleMap) -> ModuleMap:
    """The induced map M (x) source f -> M (x) target f."""
    return ModuleMap(
        tensor_module(M, f.source),
        tensor_module(M, f.target),
        kron(MatrixR.identity(M.ring, M.gens), f.matrix),
    )
