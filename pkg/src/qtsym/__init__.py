"""Exact Macdonald and Hall-Littlewood symmetric functions over Q(q,t)."""

from .ratfun import (
    SYMBOLIC,
    DivisionByZero,
    IntPoly2,
    NumericField,
    ParseError,
    PoleAtSpecialization,
    RatFun,
    format_ratfun,
    parse_ratfun,
    random_point,
)
from .partitions import (
    Compare,
    LengthExceedsN,
    Partition,
    PartitionStats,
    TFactors,
    append_one,
    conjugate,
    enumerate_partitions,
    format_partition,
    natural_compare,
    parse_partition,
    stats,
    t_factors,
)
from .symfun import (
    BasisMismatch,
    BiSymFun,
    NotAlternating,
    NotDivisible,
    NotSymmetric,
    NSymPoly,
    SingularTransition,
    SymFun,
    XPoly,
    adjoint_apply,
    collect_symmetric,
    convert,
    divide_by_vandermonde,
    dp1,
    expand_x,
    inner_product,
    multiply,
    p_multiply,
    restrict,
    transition_matrix,
)
from .families import (
    GreenTable,
    green_table,
    hall_littlewood,
    hl_alternant,
    macdonald_M,
    morris_phi,
    psi_coeff,
    q_row_series,
    schur,
)
from .macops import (
    A_eigen,
    A_k_apply,
    A_k_eigen,
    InvalidStep,
    NotOneBoxDown,
    NotOneBoxUp,
    PoleAtSample,
    SingularSampleSystem,
    StepEval,
    UFamily,
    apply_AN,
    apply_DN,
    bc_matrix_coeff,
    pieri_down_coeff,
    pieri_up_coeff,
    step_evaluate,
    step_series_apply,
)
from .verify import (
    CheckReport,
    alternant_F,
    check_corollary,
    check_decomposition,
    check_deigen,
    check_finite_symbol,
    check_green,
    check_hl_cauchy,
    check_kernel_lemma,
    check_proposition,
    check_theorem_basic,
    kernel_pi,
    run_suite,
    write_reports,
)

__version__ = "0.1.0"
