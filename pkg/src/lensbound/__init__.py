"""Exact decision procedures for lens-space bounding and cobordism questions."""

from .actions import (
    WeightedCP2Action,
    fixed_point_types,
    orbifold_boundary,
    verify_action_consistency,
)
from .bounding_index import (
    CircleSurgery,
    Closed4,
    FreeQuotient,
    GlueBoundaryPair,
    RemoveBalls,
    chib_lower_bound,
    d_min_divisor,
    euler_ledger,
    ob_lens_prime,
)
from .cobordism import (
    BoundaryProblem,
    CobordismWitness,
    brute_force_cobound,
    degree_witness,
    pi1_cobordant_pair,
    pi1_cobound,
)
from .errors import LensboundError, TheoremViolation
from .groups import (
    ConcreteMetacyclic,
    FinitePresentation,
    abelianization,
    cyclic_homology,
    cyclic_presentation,
    element_order,
    i3_trivial_in_semidirect,
    power_map_action_on_H,
    semidirect_group,
    sigma_presentation,
)
from .intmat import IntMatrix, cokernel_invariants, smith_normal_form
from .lens import (
    DegreeSet,
    LensSpace,
    canonical_form,
    contains_degree,
    degree_set,
    homotopy_equivalent_oriented,
    reverse_orientation,
)
from .zmod import Residue, is_perfect_square, is_unit_square, mod_inv, unit_squares

__version__ = "0.1.0"
