"""Exact computer algebra for a commuting pair of rank-3 differential operators.

Operators are written in the same text syntax as the command line tool,
for example ``Operator("D^3 - 26/x^2*D - 28/x^3 + x^6/5832")``; ``*`` is
composition.
"""

from ._core import (
    NonCommutingError,
    Operator,
    ParseError,
    __version__,
    bc_function_identity,
    bc_polynomial,
    calL,
    commutator,
    commutes,
    derive,
    eval_bc,
    find_bc_relation,
    kn_check,
    l1,
    l2,
    l2_mu,
    parse,
    right_reduce,
    solve_commuting,
    verify,
    verify_rank3,
)

__all__ = [
    "NonCommutingError",
    "Operator",
    "ParseError",
    "__version__",
    "bc_function_identity",
    "bc_polynomial",
    "calL",
    "commutator",
    "commutes",
    "derive",
    "eval_bc",
    "find_bc_relation",
    "kn_check",
    "l1",
    "l2",
    "l2_mu",
    "parse",
    "right_reduce",
    "solve_commuting",
    "verify",
    "verify_rank3",
]
