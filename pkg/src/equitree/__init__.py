"""Equitable tree-colorings of complete multipartite graphs: constructions,
verifiers, an exact feasibility engine, and a brute-force oracle."""

from .constructions import (
    ConstructionGapError,
    case_dispatch,
    construct_theorem22,
    construct_three_split,
    construct_uniform,
    equitable_split,
)
from .engine import (
    FeasibilityOutcome,
    Placement,
    SizeDistribution,
    compute_va_eq,
    compute_va_equiv,
    decide,
    size_distribution,
    va_gap_demo,
    witness_from_placement,
)
from .families import (
    FamilyPoint,
    TableConfig,
    bound_family_value,
    bound_schedule,
    reproduce_table,
    theorem_value,
)
from .model import (
    UNBOUNDED,
    Coloring,
    MultipartiteSpec,
    TreeParams,
    VertexRef,
    VerifyReport,
    adjacent,
    check_equitable,
    check_tree_coloring,
    class_profile,
    make_spec,
    profile_admissible,
)
from .oracle import (
    SmallGraph,
    brute_force_decide,
    brute_force_va_equiv,
    materialize,
    small_graph,
)

__all__ = [
    "UNBOUNDED",
    "Coloring",
    "ConstructionGapError",
    "FamilyPoint",
    "FeasibilityOutcome",
    "MultipartiteSpec",
    "Placement",
    "SizeDistribution",
    "SmallGraph",
    "TableConfig",
    "TreeParams",
    "VerifyReport",
    "VertexRef",
    "adjacent",
    "bound_family_value",
    "bound_schedule",
    "brute_force_decide",
    "brute_force_va_equiv",
    "case_dispatch",
    "check_equitable",
    "check_tree_coloring",
    "class_profile",
    "compute_va_eq",
    "compute_va_equiv",
    "construct_theorem22",
    "construct_three_split",
    "construct_uniform",
    "decide",
    "equitable_split",
    "make_spec",
    "materialize",
    "profile_admissible",
    "reproduce_table",
    "size_distribution",
    "small_graph",
    "theorem_value",
    "va_gap_demo",
    "witness_from_placement",
]

__version__ = "0.1.0"
