"""Presentations, canonical forms, and isomorphism testing.

Every finitely generated module over Z or Z/n is the cokernel of an integer
matrix: one generator per row, one relation per column.  The Smith normal
form of that matrix reads off the invariant-factor decomposition, which is a
complete isomorphism invariant.
"""

from fgmod import (
    MatrixR,
    Presentation,
    ZZ,
    canonical_form,
    direct_sum,
    iso_test,
    smith_normal_form,
)
from fgmod.grammar import format_canonical
from fgmod.rings import RingSpec

print("A module from a relation matrix")
print("-------------------------------")
A = MatrixR.from_rows(ZZ, [[2, 4], [6, 8]])
s = smith_normal_form(A)
print("relations        ", A.entries)
print("diagonal form    ", s.diagonal())
M = Presentation(ZZ, 2, A)
print("canonical form   ", format_canonical(canonical_form(M)))
print()

print("Isomorphism is canonical-form equality")
print("--------------------------------------")
Z2 = Presentation.cyclic(ZZ, 2)
Z3 = Presentation.cyclic(ZZ, 3)
Z4 = Presentation.cyclic(ZZ, 4)
sum23 = direct_sum(ZZ, [Z2, Z3])
print("Z/2 + Z/3  ~ Z/6 ?", iso_test(sum23, Presentation.cyclic(ZZ, 6)))
print("Z/4 ~ Z/2 + Z/2 ?", iso_test(Z4, direct_sum(ZZ, [Z2, Z2])))
print()

print("Modules over Z/n record free summands as the factor n")
print("------------------------------------------------------")
R6 = RingSpec.mod(6)
free = Presentation.free(R6, 2)
print("free rank 2 over Z/6:", format_canonical(canonical_form(free)))
odd = Presentation.from_relations(R6, [[4]])
print("coker[[4]] over Z/6: ", format_canonical(canonical_form(odd)))
