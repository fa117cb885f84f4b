"""Quasi-cyclic and generalized quasi-cyclic AG codes from curves x^m = B(y)."""

__version__ = "0.1.0"

from .aut import (
    Automorphism,
    OrbitPartition,
    apply,
    automorphism_order,
    diagonal,
    hermitian_psi,
    identity,
    make_automorphism,
    norm_trace_map,
    orbit_partition,
    quotient_eta,
    select_long_orbits,
    select_nontrivial_orbits,
    select_orbits_by_length,
)
from .census import (
    CrosscheckReport,
    OrbitCensus,
    PredictedParams,
    census_diagonal_kummer,
    census_for,
    census_genus2_order8,
    census_genus2_order10,
    census_hermitian,
    census_hermitian_quotient,
    census_maximal_hyperelliptic,
    census_norm_trace,
    crosscheck,
)
from .code import (
    CodeReport,
    QcCode,
    build_code,
    build_gqc_with_short_orbits,
    build_qc_with_long_orbits,
    classify,
    code_report,
    read_matrix,
    shift_operator,
    verify_shift_invariance,
    write_matrix,
)
from .curve import (
    INFINITY,
    AffinePoint,
    KummerCurve,
    enumerate_points,
    genus,
    is_maximal,
    make_curve,
    make_hermitian,
    make_hermitian_quotient,
    make_hyperelliptic,
    make_norm_trace,
)
from .distance import DEFAULT_BUDGET, DistanceResult, minimum_distance
from .exceptions import (
    AutomorphismError,
    CensusError,
    ConfigError,
    ConstraintError,
    CurveError,
    FieldError,
    QcagError,
)
from .gf import FieldElement, GaloisField, field_of_order, make_field
from .linalg import dual, nullspace, rank, rref
from .rrspace import MonomialBasis, evaluation_matrix, rr_basis
