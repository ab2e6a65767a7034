"""Exact counting of integer partitions by the difference between their
largest and smallest parts, or by a vector of specified milestone distances.

Three independent routes to every count, all in exact arithmetic:

* brute-force enumeration (:mod:`partition_gf.counting`),
* truncated q-series, direct sums and closed rational forms
  (:mod:`partition_gf.qseries`, :mod:`partition_gf.genfun`),
* quasipolynomial evaluation (:mod:`partition_gf.quasipoly`).

:mod:`partition_gf.oeis` cross-checks the computed sequences against
OEIS-style b-file fixtures and :mod:`partition_gf.cli` exposes everything on
the command line.
"""

from .counting import (
    PartitionCountQuery,
    count,
    count_fixed_diff,
    count_specified,
    divisor_count,
    fixed_diff_table,
    specified_table,
    total_partition_count,
)
from .genfun import (
    DistanceSpec,
    closed_form_fixed_diff,
    closed_form_specified,
    direct_series_fixed_diff,
    direct_series_specified,
    heine_check,
    p1_identity_check,
    qbinomial_alternating_sum,
)
from .qseries import (
    FactoredRational,
    IntPolynomial,
    TruncatedSeries,
    expand_factored,
    gauss_binomial,
    geometric_inverse,
    pochhammer_infinite,
    pochhammer_q,
    pochhammer_shifted,
    poly_divmod,
    poly_mul,
    series_div_unit,
    series_mul,
)
from .quasipoly import (
    QuasiPolynomial,
    expected_leading,
    fit,
    from_closed_form,
    p3_explicit,
    p22_explicit,
)

__version__ = "0.1.0"

__all__ = [
    "PartitionCountQuery",
    "count",
    "count_fixed_diff",
    "count_specified",
    "divisor_count",
    "fixed_diff_table",
    "specified_table",
    "total_partition_count",
    "DistanceSpec",
    "closed_form_fixed_diff",
    "closed_form_specified",
    "direct_series_fixed_diff",
    "direct_series_specified",
    "heine_check",
    "p1_identity_check",
    "qbinomial_alternating_sum",
    "FactoredRational",
    "IntPolynomial",
    "TruncatedSeries",
    "expand_factored",
    "gauss_binomial",
    "geometric_inverse",
    "pochhammer_infinite",
    "pochhammer_q",
    "pochhammer_shifted",
    "poly_divmod",
    "poly_mul",
    "series_div_unit",
    "series_mul",
    "QuasiPolynomial",
    "expected_leading",
    "fit",
    "from_closed_form",
    "p3_explicit",
    "p22_explicit",
    "__version__",
]
