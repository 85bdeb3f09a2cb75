"""Hedge cluster deletion: delete the fewest edge groups to leave a cluster graph."""

from .core import (
    HedgeGraph,
    K3,
    P3,
    Solution,
    StructuralReport,
    TripleCatalog,
    Verdict,
    build,
    enumerate_triples,
    forced_closure,
    normalize,
    remove_hedges,
    structural_stats,
    validate_solution,
)
from .cover import ListCoverInstance, SimpleGraph
from .errors import HedgeError, InputError, InvariantViolation, RefusalError, StructuralError
from .reductions import Clause, ConstraintFormula, Infeasible, eval_formula
from .solvers import (
    solve_acyclic,
    solve_approx2_bihedge,
    solve_bruteforce,
    solve_delta_bounded,
    solve_fpt,
    solve_fpt_optimal,
)
from .structure import build_domination, build_intersection_graph, is_acyclic

__all__ = [
    "build",
    "build_domination",
    "build_intersection_graph",
    "Clause",
    "ConstraintFormula",
    "enumerate_triples",
    "eval_formula",
    "forced_closure",
    "HedgeError",
    "HedgeGraph",
    "Infeasible",
    "InputError",
    "InvariantViolation",
    "is_acyclic",
    "K3",
    "ListCoverInstance",
    "normalize",
    "P3",
    "RefusalError",
    "remove_hedges",
    "SimpleGraph",
    "Solution",
    "solve_acyclic",
    "solve_approx2_bihedge",
    "solve_bruteforce",
    "solve_delta_bounded",
    "solve_fpt",
    "solve_fpt_optimal",
    "structural_stats",
    "StructuralError",
    "StructuralReport",
    "TripleCatalog",
    "validate_solution",
    "Verdict",
]

__version__ = "0.1.0"
