"""Counts of irreducible elements in imaginary quadratic fields.

Thin re-export of the compiled core: group combinatorics (`davenport`,
`minimal_zero_sums`), cycle-index evaluation (`evaluate_pk`), field data
(`Field`, `tabulated_residue`, `g_value`), asymptotic coefficients
(`coefficients`, `c_mu`, `asymptotic_cb_cyclic`, `im_constants`) and the
counting entry points (`count`, `brute_count`, `classify`, `compare`).
"""

from ._core import (
    EULER_GAMMA,
    Field,
    asymptotic_cb_cyclic,
    brute_count,
    c_mu,
    classify,
    coefficients,
    compare,
    count,
    cycle_types,
    davenport,
    evaluate_pk,
    g_value,
    im_constants,
    minimal_zero_sums,
    mobius,
    power_sums,
    ramanujan_sum,
    tabulated_residue,
    theorem2_check_h2,
    totient,
    zeta,
)

__all__ = [
    "EULER_GAMMA",
    "Field",
    "asymptotic_cb_cyclic",
    "brute_count",
    "c_mu",
    "classify",
    "coefficients",
    "compare",
    "count",
    "cycle_types",
    "davenport",
    "evaluate_pk",
    "g_value",
    "im_constants",
    "minimal_zero_sums",
    "mobius",
    "power_sums",
    "ramanujan_sum",
    "tabulated_residue",
    "theorem2_check_h2",
    "totient",
    "zeta",
]

__version__ = "0.1.0"
