"""MDS self-dual codes over finite fields: constructions with built-in
verification, a splitting checker, and a reference length sweep."""

from .codes import (
    CyclicSpec,
    LinearCode,
    MdsVerdict,
    VerificationReport,
    code_from_json,
    code_to_json,
    cyclic_generator_matrix,
    euclidean_dual,
    extend_code,
    generator_from_defining_set,
    hermitian_dual,
    is_euclidean_self_dual,
    is_hermitian_self_dual,
    mds_check,
    min_distance_exhaustive,
)
from .config import GuardConfig, current_guards
from .constructions import (
    ConstructionResult,
    build_constacyclic_hermitian,
    build_euclidean_duadic_extended,
    build_grs_hermitian,
    build_hermitian_extended_duadic,
    build_hermitian_n5,
    build_negacyclic_hermitian,
    check_centered_duadic_splitting,
    exists_hermitian_dispatch,
    solve_gamma_euclidean,
    solve_gamma_hermitian,
)
from .cosets import (
    DefiningSet,
    SplittingReport,
    check_duadic_splitting,
    consecutive_run,
    cyclotomic_coset,
    extended_selfdual_cyclic_exists,
    multiplier_image,
)
from .errors import (
    MalformedInput,
    NoGamma,
    PreconditionFailed,
    SelfDualError,
    SplittingFailed,
    VerificationFailed,
)
from .fields import (
    FieldSpec,
    TowerSpec,
    find_primitive_element,
    frobenius,
    make_field,
    nth_root_of_unity,
    quadratic_extension,
    solve_norm,
    sqrt_in_field,
)
from .numtheory import (
    Factorization,
    SolvabilityVerdict,
    factorize,
    gamma_solvability,
    is_prime,
    jacobi,
    legendre,
)
from .table import TABLE_ROWS, run_table, run_table_pair

__version__ = "0.1.0"

__all__ = [
    "ConstructionResult",
    "CyclicSpec",
    "DefiningSet",
    "Factorization",
    "FieldSpec",
    "GuardConfig",
    "LinearCode",
    "MalformedInput",
    "MdsVerdict",
    "NoGamma",
    "PreconditionFailed",
    "SelfDualError",
    "SolvabilityVerdict",
    "SplittingFailed",
    "SplittingReport",
    "TABLE_ROWS",
    "TowerSpec",
    "VerificationFailed",
    "VerificationReport",
    "build_constacyclic_hermitian",
    "build_euclidean_duadic_extended",
    "build_grs_hermitian",
    "build_hermitian_extended_duadic",
    "build_hermitian_n5",
    "build_negacyclic_hermitian",
    "check_centered_duadic_splitting",
    "check_duadic_splitting",
    "code_from_json",
    "code_to_json",
    "consecutive_run",
    "current_guards",
    "cyclic_generator_matrix",
    "cyclotomic_coset",
    "euclidean_dual",
    "exists_hermitian_dispatch",
    "extend_code",
    "extended_selfdual_cyclic_exists",
    "factorize",
    "find_primitive_element",
    "frobenius",
    "gamma_solvability",
    "generator_from_defining_set",
    "hermitian_dual",
    "is_euclidean_self_dual",
    "is_hermitian_self_dual",
    "is_prime",
    "jacobi",
    "legendre",
    "make_field",
    "mds_check",
    "min_distance_exhaustive",
    "multiplier_image",
    "nth_root_of_unity",
    "quadratic_extension",
    "run_table",
    "run_table_pair",
    "solve_gamma_euclidean",
    "solve_gamma_hermitian",
    "solve_norm",
    "sqrt_in_field",
]
