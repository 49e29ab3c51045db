"""Exact Hamiltonian-subset counting and expander-based cycle structures."""

from .graph import (
    Ball,
    BlockDecomposition,
    CapExceeded,
    DegreeStats,
    Graph,
    GraphFormatError,
    ball,
    blocks,
    degree_stats,
    from_graph6,
    to_graph6,
    vertex_connectivity,
)

__version__ = "0.1.0"

__all__ = [
    "Ball",
    "BlockDecomposition",
    "CapExceeded",
    "DegreeStats",
    "Graph",
    "GraphFormatError",
    "ball",
    "blocks",
    "degree_stats",
    "from_graph6",
    "to_graph6",
    "vertex_connectivity",
]
