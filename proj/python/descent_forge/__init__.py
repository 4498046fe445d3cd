"""All primitive positive solutions of 7x^2 + 59y^2 = 3^m.

Thin re-export of the compiled extension: solution-tree enumeration,
successor/predecessor maps, descent certificates, the quadratic-form
machinery and the brute-force representability oracle.
"""

from ._core import (
    PPSolution,
    TreeNode,
    brute_force,
    check_certificate,
    check_identity,
    descend_to_root,
    descent_certificate,
    enumerate_tree,
    eval_forms,
    first_successor,
    gcd,
    incidence,
    is_perfect_square,
    is_suitable,
    isqrt,
    jacobi_symbol,
    legendre_symbol,
    oracle_sweep,
    parity_check,
    predecessor,
    recognize_successor,
    reconstruct_from_incidence,
    second_successor,
    ternary_solvable,
    valuation_3,
    verify,
)

__all__ = [
    "PPSolution",
    "TreeNode",
    "brute_force",
    "check_certificate",
    "check_identity",
    "descend_to_root",
    "descent_certificate",
    "enumerate_tree",
    "eval_forms",
    "first_successor",
    "gcd",
    "incidence",
    "is_perfect_square",
    "is_suitable",
    "isqrt",
    "jacobi_symbol",
    "legendre_symbol",
    "oracle_sweep",
    "parity_check",
    "predecessor",
    "recognize_successor",
    "reconstruct_from_incidence",
    "second_successor",
    "ternary_solvable",
    "valuation_3",
    "verify",
]
