"""Exact toric degenerations of small flag varieties.

Tropical fans of Pluecker ideals with certified initial ideals, string and
FFLV polytopes, representation-theoretic weight vectors, and re-embeddings of
non-prime cones.  All arithmetic is exact.
"""

from .exactmath import (
    IntMatrix,
    QQ,
    RationalCone,
    cone_contains,
    cone_dimension,
    cone_interior_point,
    cones_equal,
    common_refinement,
    integer_kernel,
    smith_normal_form,
)
from .flag import (
    FlagRing,
    SignedSymmetry,
    apply_symmetry,
    flag_ring,
    grading_matrix,
    orbit_decomposition,
    plucker_ideal,
    symmetry_group,
)
from .poly import (
    GroebnerBasis,
    Ideal,
    Poly,
    PolyRing,
    WeightOrder,
    degree_via_hilbert,
    groebner_basis,
    homogenize,
    initial_form,
    initial_ideal,
    is_binomial,
    is_monomial_free,
    krull_dimension,
    saturate,
)
from .polytopes import (
    Polytope,
    combinatorially_equivalent,
    convex_hull,
    f_vector,
    lattice_points,
    minkowski_sum,
    normalization_polytope,
)
from .repweights import (
    fflv_weight_vectors,
    minimal_monomial,
    root_action,
    string_weight_vector,
)
from .reembed import (
    ReembeddingStep,
    extend_ideal,
    harvest_new_degenerations,
    missing_binomials,
    reembed_cone,
)
from .stringfflv import (
    PseudolineArrangement,
    build_arrangement,
    dyck_paths,
    fflv_polytope,
    minkowski_property,
    string_cone,
    string_polytope,
    weighted_string_cone,
    weyl_dimension,
)
from .tropfan import (
    MaximalCone,
    TropicalFan,
    enumerate_tropical_fan,
    is_prime_binomial,
    multiplicity_one_certificate,
    toric_component,
    weight_vector_membership,
)

__version__ = "0.1.0"
