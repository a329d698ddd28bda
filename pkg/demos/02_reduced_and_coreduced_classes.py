"""Membership in the reduced/coreduced classes relative to a module.

A module N is reduced relative to M when Hom(M, N) satisfies "d^2 x = 0
forces d x = 0", and coreduced relative to M when M (x) N satisfies
"d N = d^2 N".  Relative membership is strictly weaker than the plain
predicates: the flagship example is N = Z/4 at the ideal (2), which fails
both plain predicates but lies in both classes relative to M = Z/2.
"""

from fgmod import (
    Presentation,
    ZZ,
    completion,
    is_coreduced,
    is_coreduced_wrt,
    is_reduced,
    is_reduced_wrt,
    torsion,
    principal,
    NonStabilizing,
)
from fgmod.grammar import format_canonical
from fgmod.modules import canonical_form

Z2 = Presentation.cyclic(ZZ, 2)
Z4 = Presentation.cyclic(ZZ, 4)
Z = Presentation.free(ZZ, 1)
a = principal(ZZ, 2)

print("The flagship verdicts at the ideal (2)")
print("--------------------------------------")
print("Z/4 reduced?                 ", is_reduced(Z4, a), "   (2*3 = 2 but 4*3 = 0)")
print("Z/4 reduced relative to Z/2? ", is_reduced_wrt(Z2, Z4, a))
print("Z/4 coreduced?               ", is_coreduced(Z4, a), "   (2*(Z/4) = {0,2} but 4*(Z/4) = 0)")
print("Z/4 coreduced relative to Z/2?", is_coreduced_wrt(Z2, Z4, a))
print("Z coreduced?                 ", is_coreduced(Z, a), "   (2Z is a proper submodule)")
print()

print("Torsion and completion along (2)")
print("--------------------------------")
g = torsion(Z4, a)
print("torsion of Z/4:", format_canonical(canonical_form(g.value)), f"(chain flat at k={g.exponent})")
c = completion(Z4, a)
print("completion of Z/4:", format_canonical(canonical_form(c.value)), f"(chain flat at k={c.exponent})")
try:
    completion(Z, a)
except NonStabilizing as exc:
    print("completion of Z:  refused --", exc)
print()

print("Extensions do not preserve either class")
print("---------------------------------------")
print("in 0 -> Z/2 -> Z/4 -> Z/2 -> 0 the ends are in both classes relative")
print("to Z, yet the middle term Z/4 is in neither:")
print("  ends reduced:   ", is_reduced(Z2, a), "/ middle:", is_reduced(Z4, a))
print("  ends coreduced: ", is_coreduced(Z2, a), "/ middle:", is_coreduced(Z4, a))
