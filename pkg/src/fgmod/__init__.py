"""Exact computation with finitely generated modules over Z and Z/n.

The package provides presentations and canonical forms for finitely
generated modules, the Hom/tensor/Ext/Tor functors, torsion and completion
along an ideal with the associated reduced/coreduced membership predicates,
generalized local (co)homology, and an exhaustive verification harness for
the structural identities relating all of these.
"""

from .rings import RingSpec, Ideal, ZZ, canonicalize_ideal, ideal_power, principal
from .linalg import MatrixR, SmithDecomposition, smith_normal_form, solve_linear, kernel_generators
from .modules import (
    Presentation,
    CanonicalForm,
    ModuleMap,
    Submodule,
    canonical_form,
    canonical_presentation,
    iso_test,
    direct_sum,
    quotient_by_ideal,
    ideal_multiple,
    kernel_of_map,
    mult_map,
    submodule_equal,
)
from .functors import hom_module, tensor_module, matlis_dual, free_resolution_prefix, ext, tor
from .adic import (
    StabilizationResult,
    torsion,
    completion,
    torsion_wrt,
    completion_wrt,
    is_reduced,
    is_coreduced,
    is_reduced_wrt,
    is_coreduced_wrt,
    is_in_both_classes,
)
from .cohomology import local_cohomology, local_homology, is_adically_complete
from .errors import FgmodError, NonStabilizing

__version__ = "0.1.0"
