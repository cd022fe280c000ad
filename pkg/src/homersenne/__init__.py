"""Exact arithmetic for higher-order Mersenne numbers and their binomial transforms."""
from .genfun import (
    RationalFunction,
    bt_egf_check,
    bt_ogf,
    egf_check,
    expand_rational,
    hom_ogf,
)
from .identities import (
    cassini,
    catalan,
    check_index_addition,
    check_index_shift,
    check_multiples,
    docagne,
    honsberger,
    jacobsthal_relation,
    limiting_ratio_gap,
    resolve_vajda_convention,
    square_sum_product_relations,
    vajda,
    vajda_oracle,
)
from .matrix import (
    Matrix2,
    TridiagonalSpec,
    hom_via_matrix,
    mat_power,
    mat_u,
    tridiag_det,
    tridiag_spectral_checks,
    u_power_checks,
)
from .report import IdentityReport
from .sequences import (
    cofactor,
    hoj,
    hojl,
    hom_closed,
    hom_quotient,
    hom_recurrence,
    hom_stream,
    mersenne,
    mersenne_lucas,
)
from .transforms import (
    BinomialTransformSeq,
    alternating_binomial_sum,
    binomial_sum,
    bt_closed,
    bt_definition,
    bt_recurrence,
    bt_shift_identity,
    partial_sum,
    partial_sum_even,
    partial_sum_odd,
)

__version__ = "0.1.0"
