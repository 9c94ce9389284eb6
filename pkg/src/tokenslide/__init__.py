"""Sliding-token reconfiguration solvers for proper interval graphs,
trivially perfect graphs, and caterpillars, with an exact BFS oracle."""

from .caterpillar import mark_locked, solve_caterpillar
from .crosscheck import CrosscheckReport, Mismatch, crosscheck
from .generate import GenerationError, gen_instance, quadratic_path_instance
from .graphs import (
    CaterpillarError,
    CaterpillarStructure,
    Graph,
    IndependentSet,
    Move,
    ReconfigSequence,
    ValidationResult,
    find_strong_twins,
    intersection_graph,
    recognize_caterpillar,
    validate_sequence,
)
from .instances import (
    Instance,
    InstanceFormatError,
    parse_instance,
    parse_sequence,
    serialize_instance,
    serialize_sequence,
)
from .intervals import (
    GraphClass,
    IntervalRepresentation,
    RepresentationError,
    parse_representation,
)
from .oracle import OracleResult, SlideSpace, bfs, bfs_labeled, is_stuck, slide_neighbors
from .proper import solve_proper, solve_proper_components
from .results import SolveResult, SolverInputError
from .trivially_perfect import solve_tp

__all__ = [
    "CaterpillarError",
    "CaterpillarStructure",
    "CrosscheckReport",
    "GenerationError",
    "Graph",
    "GraphClass",
    "IndependentSet",
    "Instance",
    "InstanceFormatError",
    "IntervalRepresentation",
    "Mismatch",
    "Move",
    "OracleResult",
    "ReconfigSequence",
    "RepresentationError",
    "SlideSpace",
    "SolveResult",
    "SolverInputError",
    "ValidationResult",
    "bfs",
    "bfs_labeled",
    "crosscheck",
    "find_strong_twins",
    "gen_instance",
    "intersection_graph",
    "is_stuck",
    "mark_locked",
    "parse_instance",
    "parse_representation",
    "parse_sequence",
    "quadratic_path_instance",
    "recognize_caterpillar",
    "serialize_instance",
    "serialize_sequence",
    "slide_neighbors",
    "solve_caterpillar",
    "solve_proper",
    "solve_proper_components",
    "solve_tp",
    "validate_sequence",
]

__version__ = "0.1.0"
