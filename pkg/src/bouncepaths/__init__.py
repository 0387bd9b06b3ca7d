"""Exact enumeration of rational-slope lattice paths by bounce statistics."""

from .beta_one import (
    InvalidShape,
    TwoRowShape,
    beta1_f_identity_check,
    bounce_free_ab_beta1,
    bounce_table_beta1,
    f_ab_via_fuss_catalan,
    nhc_nrb_series,
    nhc_prefix_series,
    nhc_series,
    rational_dyck_series,
    syt_two_row_count,
)
from .bounce import (
    BounceTable,
    b_lr_closed_form,
    bounce_free_ab,
    bounce_free_prefix,
    bounce_free_total,
    bounce_table,
    bounce_table_from_closed_forms,
    expand_marker_quotient,
    g_b_series,
    marker_cells,
    no_left_bounce_total,
    nrb_series,
    one_sided_bounce_series,
)
from .closed_forms import (
    AB_RESTRICTIONS,
    NonIntegerCoefficient,
    Restriction,
    Slope,
    Step,
    binomial,
    fuss_catalan,
    g_ab_series,
    g_prefix_series,
    g_series,
)
from .enumeration import (
    BounceProfile,
    BudgetExceeded,
    MalformedPath,
    StepWord,
    classify,
    count_matching,
    count_table,
    enumerate_profiles,
    enumerate_syt,
)
from .series import (
    NonUnitConstantTerm,
    NonzeroConstantTerm,
    RationalSeriesExpr,
    Series,
    SeriesError,
    ValuationMismatch,
)

__all__ = [
    "AB_RESTRICTIONS",
    "BounceProfile",
    "BounceTable",
    "BudgetExceeded",
    "InvalidShape",
    "MalformedPath",
    "NonIntegerCoefficient",
    "NonUnitConstantTerm",
    "NonzeroConstantTerm",
    "RationalSeriesExpr",
    "Restriction",
    "Series",
    "SeriesError",
    "Slope",
    "Step",
    "StepWord",
    "TwoRowShape",
    "ValuationMismatch",
    "b_lr_closed_form",
    "beta1_f_identity_check",
    "binomial",
    "bounce_free_ab",
    "bounce_free_ab_beta1",
    "bounce_free_prefix",
    "bounce_free_total",
    "bounce_table",
    "bounce_table_beta1",
    "bounce_table_from_closed_forms",
    "classify",
    "count_matching",
    "count_table",
    "enumerate_profiles",
    "enumerate_syt",
    "expand_marker_quotient",
    "f_ab_via_fuss_catalan",
    "fuss_catalan",
    "g_ab_series",
    "g_b_series",
    "g_prefix_series",
    "g_series",
    "marker_cells",
    "nhc_nrb_series",
    "nhc_prefix_series",
    "nhc_series",
    "no_left_bounce_total",
    "nrb_series",
    "one_sided_bounce_series",
    "rational_dyck_series",
    "syt_two_row_count",
]

__version__ = "0.1.0"
