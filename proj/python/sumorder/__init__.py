"""Orderings of finite abelian-group subsets with distinct partial sums.

Thin Python face over the C++ core. Elements are ints for rank-1 groups and
sequences of ints for product groups; groups are named by strings such as
"Z", "Z^2", "F_13", "Z_6", or "Z_6 x Z".
"""

from ._core import (
    analyze,
    backtrack_order,
    check_certificate,
    count_valid_orderings,
    find_dilation,
    freiman_verify,
    graham_bound,
    is_valid,
    lev_bound,
    sequence,
    sequence_integers,
    sequence_mod_p,
    sweep,
)

__all__ = [
    "analyze",
    "backtrack_order",
    "check_certificate",
    "count_valid_orderings",
    "find_dilation",
    "freiman_verify",
    "graham_bound",
    "is_valid",
    "lev_bound",
    "sequence",
    "sequence_integers",
    "sequence_mod_p",
    "sweep",
]
