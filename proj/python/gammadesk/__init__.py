"""Exact enumeration engine for descent statistics and gamma expansions.

Thin wrapper over the compiled extension.  Permutations are lists of
letters 1..n in one-line notation; polynomial results are dicts mapping
degrees (or degree tuples) to exact ints.
"""

from ._core import (
    audit_table,
    class_count,
    class_members,
    classify,
    contains_pattern,
    des_maj_distribution,
    dilks_expand,
    distribution,
    gamma_expand,
    hop,
    is_unimodal,
    joint_distribution,
    orbit,
    reconstruct_poly,
    run_suite,
    solve_series,
    star_compose,
    star_decompose,
    stats,
    suite_check_ids,
    table_row,
    version,
)

__version__ = version()

__all__ = [
    "audit_table",
    "class_count",
    "class_members",
    "classify",
    "contains_pattern",
    "des_maj_distribution",
    "dilks_expand",
    "distribution",
    "gamma_expand",
    "hop",
    "is_unimodal",
    "joint_distribution",
    "orbit",
    "reconstruct_poly",
    "run_suite",
    "solve_series",
    "star_compose",
    "star_decompose",
    "stats",
    "suite_check_ids",
    "table_row",
    "version",
]
