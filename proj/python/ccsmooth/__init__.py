"""Best l-infinity approximation with a limited number of convexity changes."""

from ._ccsmooth import (
    Approximation,
    Join,
    OracleRefusal,
    best_convex,
    best_convex_concave,
    is_feasible,
    oracle_solve,
    run_experiment,
    sign_changes,
    solve,
)

__all__ = [
    "Approximation",
    "Join",
    "OracleRefusal",
    "best_convex",
    "best_convex_concave",
    "is_feasible",
    "oracle_solve",
    "run_experiment",
    "sign_changes",
    "solve",
]
