"""PI degrees of quantum algebras at roots of unity.

The pipeline: a black/white diagram determines a skew integer commutation
matrix and a toric pipe-dream permutation; an exact unimodular congruence
puts the matrix in skew normal form; the invariant factors give the PI
degree at any root of unity, and the congruence transform lifts clock and
shift matrices to an irreducible monomial representation of that dimension.
Closed forms cover Young shapes, determinantal boards, Schubert cells and
Grassmannians, each cross-checkable against the generic route.
"""

from .degrees import (
    DiagramAnalysis,
    ExtendedAnalysis,
    PiDegree,
    analyze_diagram,
    determinantal_invariant_exponent,
    determinantal_toric_cycles,
    mu2,
    pi_degree_determinantal,
    pi_degree_extended_diagram,
    pi_degree_from_factors,
    pi_degree_grassmannian,
    pi_degree_partition,
    pi_degree_qas,
    pi_degree_schubert,
    rectangle_kernel_dim,
    smallest_prime_factor,
)
from .diagrams import (
    Diagram,
    Partition,
    PluckerIndex,
    all_black,
    all_white,
    determinantal_diagram,
    diagram_from_text,
    is_cauchon_le,
    partition_from_plucker,
    plucker_from_partition,
    young_diagram,
)
from .errors import (
    BadEll,
    BadRange,
    BadSpec,
    BoxOutsideShape,
    EmptyInput,
    EvenEll,
    FormulaMismatch,
    GcdViolation,
    HypothesisViolated,
    InternalVerificationFailed,
    NoRootOfUnity,
    NotPrime,
    PidegError,
    RaggedRows,
    ShapeOverflow,
    SkewSymmetryViolated,
    TooLarge,
    UnknownCharacter,
    ZeroDim,
)
from .intlinalg import (
    CycleKernelVector,
    SkewIntMatrix,
    SkewNormalForm,
    SmithResult,
    cycle_kernel_vectors,
    cycle_sum,
    determinant,
    extend,
    inverse_unimodular,
    is_prime,
    kernel_basis_mod_p,
    kernel_basis_rational,
    kernel_dim_mod_p,
    matrix_from_diagram,
    one_perp,
    one_perp_mod_p,
    paired_invariant_factors,
    skew_normal_form,
    smith_invariant_factors,
)
from .pipedreams import (
    CycleDecomposition,
    Permutation,
    cycle_decomposition,
    partition_permutation,
    partition_toric_permutation,
    restricted_permutation,
    toric_permutation,
    white_exit_labels,
)
from .reps import (
    MonomialMatrix,
    QASRepresentation,
    clock_shift,
    determinantal_rep_dimension_check,
    find_relation_violation,
    irreducibility_check,
    kron,
    qas_representation,
    verify_relations,
)

__version__ = "0.1.0"

__all__ = [
    "BadEll",
    "BadRange",
    "BadSpec",
    "BoxOutsideShape",
    "CycleDecomposition",
    "CycleKernelVector",
    "Diagram",
    "DiagramAnalysis",
    "EmptyInput",
    "EvenEll",
    "ExtendedAnalysis",
    "FormulaMismatch",
    "GcdViolation",
    "HypothesisViolated",
    "InternalVerificationFailed",
    "MonomialMatrix",
    "NoRootOfUnity",
    "NotPrime",
    "Partition",
    "Permutation",
    "PiDegree",
    "PidegError",
    "PluckerIndex",
    "QASRepresentation",
    "RaggedRows",
    "ShapeOverflow",
    "SkewIntMatrix",
    "SkewNormalForm",
    "SkewSymmetryViolated",
    "SmithResult",
    "TooLarge",
    "UnknownCharacter",
    "ZeroDim",
    "all_black",
    "all_white",
    "analyze_diagram",
    "clock_shift",
    "cycle_decomposition",
    "cycle_kernel_vectors",
    "cycle_sum",
    "determinant",
    "determinantal_diagram",
    "determinantal_invariant_exponent",
    "determinantal_rep_dimension_check",
    "determinantal_toric_cycles",
    "diagram_from_text",
    "extend",
    "find_relation_violation",
    "inverse_unimodular",
    "irreducibility_check",
    "is_cauchon_le",
    "is_prime",
    "kernel_basis_mod_p",
    "kernel_basis_rational",
    "kernel_dim_mod_p",
    "kron",
    "matrix_from_diagram",
    "mu2",
    "one_perp",
    "one_perp_mod_p",
    "paired_invariant_factors",
    "partition_from_plucker",
    "partition_permutation",
    "partition_toric_permutation",
    "pi_degree_determinantal",
    "pi_degree_extended_diagram",
    "pi_degree_from_factors",
    "pi_degree_grassmannian",
    "pi_degree_partition",
    "pi_degree_qas",
    "pi_degree_schubert",
    "plucker_from_partition",
    "qas_representation",
    "rectangle_kernel_dim",
    "restricted_permutation",
    "skew_normal_form",
    "smallest_prime_factor",
    "smith_invariant_factors",
    "toric_permutation",
    "verify_relations",
    "white_exit_labels",
    "young_diagram",
]
