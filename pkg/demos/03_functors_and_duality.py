"""Hom, tensor, Ext, Tor, and duality against the injective cogenerator.

All four functors run on presentations and return presentations; duality
uses Q/Z over Z (finite modules only) and the ring itself over Z/n.  The
closing loop shows the adjunction between two-argument completion and
two-argument torsion on the appropriate classes.
"""

import itertools

from fgmod import (
    Presentation,
    ZZ,
    completion_wrt,
    ext,
    hom_module,
    iso_test,
    matlis_dual,
    principal,
    tensor_module,
    tor,
    torsion_wrt,
)
from fgmod.adic import is_coreduced_wrt, is_reduced_wrt
from fgmod.grammar import format_canonical
from fgmod.modules import canonical_form

def show(name, pres):
    print(f"{name:<24} {format_canonical(canonical_form(pres))}")

Z2 = Presentation.cyclic(ZZ, 2)
Z4 = Presentation.cyclic(ZZ, 4)
Z6 = Presentation.cyclic(ZZ, 6)
a = principal(ZZ, 2)

print("Functor values")
print("--------------")
show("Hom(Z/2, Z/4)", hom_module(Z2, Z4))
show("Z/2 (x) Z/6", tensor_module(Z2, Z6))
show("Ext^1(Z/2, Z/2)", ext(1, Z2, Z2))
show("Tor_1(Z/2, Z/4)", tor(1, Z2, Z4))
show("dual of Z/4", matlis_dual(Z4))
print()

print("Duality swaps the two-argument functors")
print("---------------------------------------")
for M, N in itertools.product((Z2, Z4, Z6), repeat=2):
    if not is_reduced_wrt(M, N, a):
        continue
    lhs = matlis_dual(torsion_wrt(M, N, a))
    rhs = completion_wrt(M, matlis_dual(N), a)
    print(
        f"M={format_canonical(canonical_form(M)):<10} N={format_canonical(canonical_form(N)):<10}"
        f" dual(torsion) = completion(dual): {iso_test(lhs, rhs)}"
    )
print()

print("The adjunction on the two classes")
print("---------------------------------")
for M, N, P in itertools.product((Z2, Z4), (Z2, Z4, Z6), (Z2, Z4, Z6)):
    if not (is_reduced_wrt(M, N, a) and is_coreduced_wrt(M, P, a)):
        continue
    lhs = hom_module(completion_wrt(M, P, a), N)
    rhs = hom_module(P, torsion_wrt(M, N, a))
    print(
        f"M={format_canonical(canonical_form(M)):<6}"
        f" N={format_canonical(canonical_form(N)):<6}"
        f" P={format_canonical(canonical_form(P)):<6} adjunction holds: {iso_test(lhs, rhs)}"
    )
