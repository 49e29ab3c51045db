"""Suns, walks, units, webs and the cycles C_U built from them."""

from .cycles import (
    build_cycle_dense,
    build_cycle_sparse,
    distinguishability_bound,
    far_apart_set,
    sparse_paper_values,
)
from .suns import build_sun, find_structure
from .types import (
    CycleBuildReport,
    CycleShape,
    Failure,
    PathShape,
    Star,
    StructureWitness,
    Sun,
    Unit,
    Verdict,
    Walk,
    Web,
)
from .units import (
    StarCollection,
    WebGrowth,
    WebParameters,
    find_disjoint_stars,
    grow_unit,
    grow_webs,
    paper_values,
    web_parameters,
)
from .validate import validate_cycle, validate_path, validate_sun, validate_unit, validate_web
from .walks import ShapeError, build_walk, circuit, vertex_classes, walk_in_windows

__all__ = [
    "CycleBuildReport", "CycleShape", "Failure", "PathShape", "ShapeError", "Star",
    "StarCollection", "StructureWitness", "Sun", "Unit", "Verdict", "Walk", "Web",
    "WebGrowth", "WebParameters", "build_cycle_dense", "build_cycle_sparse", "build_sun",
    "build_walk", "circuit", "distinguishability_bound", "far_apart_set",
    "find_disjoint_stars", "find_structure", "grow_unit", "grow_webs", "paper_values",
    "sparse_paper_values", "validate_cycle", "validate_path", "validate_sun",
    "validate_unit", "validate_web", "vertex_classes", "walk_in_windows", "web_parameters",
]
