"""Exact symbolic computation in multi-parameter quantized Weyl algebras,
their semiclassical (Poisson) limits, and the stratification of their
spectra: ordered-basis normal forms, commutators, limit brackets, admissible
sets, quantum-torus commutation data, and center lattices -- all over exact
rational arithmetic."""

from .scalars import (
    ExpVec,
    MuPoly,
    NotDivisibleError,
    QTScalar,
    RankMismatchError,
)
from .weyl import (
    LocalizationRequiredError,
    ParamsMismatchError,
    PbwMonomial,
    WeylElement,
    WeylParams,
    from_maltsiniotis,
    wa_commutator,
    wa_divisible_by_t_minus_1,
    wa_mul,
    wa_z,
)
from .poisson import (
    PoissonElement,
    gamma1,
    jacobiator,
    p_z,
    pb_bracket,
    pe_div_exact,
    semiclassical_bracket,
)
from .spectra import (
    AdmissibleSet,
    CenterLattice,
    StratumReport,
    TorusData,
    brute_force_admissible,
    center_lattice,
    check_torus_relations,
    clear_denominators,
    enumerate_admissible,
    in_stratum_ideal,
    integer_kernel,
    is_admissible,
    poisson_center_lattice,
    reduce_mod_stratum,
    stratum_report,
    torus_data,
    torus_matrix_p,
    torus_matrix_q,
    y_set,
)
from .interp import (
    ParameterDomainError,
    QuadPoly,
    SpecializedAlgebra,
    build_e,
    build_e_family,
    independence_check,
    specialize,
)
from .quantum_plane import PlaneElement
from .exprs import ExprEvalError, ExprSyntaxError, eval_free, eval_weyl, parse_expr
from .suites import ALL_SUITES, DEFAULT_SEED, SuiteResult, run_suites

__version__ = "0.1.0"

__all__ = [
    "ALL_SUITES",
    "AdmissibleSet",
    "CenterLattice",
    "DEFAULT_SEED",
    "ExpVec",
    "ExprEvalError",
    "ExprSyntaxError",
    "LocalizationRequiredError",
    "MuPoly",
    "NotDivisibleError",
    "ParameterDomainError",
    "ParamsMismatchError",
    "PbwMonomial",
    "PlaneElement",
    "PoissonElement",
    "QTScalar",
    "QuadPoly",
    "RankMismatchError",
    "SpecializedAlgebra",
    "StratumReport",
    "SuiteResult",
    "TorusData",
    "WeylElement",
    "WeylParams",
    "brute_force_admissible",
    "build_e",
    "build_e_family",
    "center_lattice",
    "check_torus_relations",
    "clear_denominators",
    "enumerate_admissible",
    "eval_free",
    "eval_weyl",
    "from_maltsiniotis",
    "gamma1",
    "in_stratum_ideal",
    "independence_check",
    "integer_kernel",
    "is_admissible",
    "jacobiator",
    "p_z",
    "parse_expr",
    "pb_bracket",
    "pe_div_exact",
    "poisson_center_lattice",
    "reduce_mod_stratum",
    "run_suites",
    "semiclassical_bracket",
    "specialize",
    "stratum_report",
    "torus_data",
    "torus_matrix_p",
    "torus_matrix_q",
    "wa_commutator",
    "wa_divisible_by_t_minus_1",
    "wa_mul",
    "wa_z",
    "y_set",
]
