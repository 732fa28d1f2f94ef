"""Triangular-block analysis of plane graphs.

Tools for working with plane graphs whose structure is governed by
triangles: combinatorial embeddings and face traversal, forbidden
subgraph detection, decomposition into triangular blocks and components
with exact triangle densities, extremal family generators, and exhaustive
small-order searches for planar edge-maximisation problems.
"""

from __future__ import annotations

from .embedding import (
    Edge,
    Face,
    Graph,
    NonPlanarError,
    PlaneGraph,
    automorphism_generators,
    canonical_form,
    canonical_labeling,
    embed,
    is_isomorphic,
    vertex_orbits,
)
from .io import (
    FormatError,
    graph6_decode,
    graph6_encode,
    load_plane_graph_json,
    parse_graph_line,
    sparse6_decode,
    sparse6_encode,
)

__version__ = "0.1.0"

__all__ = [
    "Edge",
    "Face",
    "FormatError",
    "Graph",
    "NonPlanarError",
    "PlaneGraph",
    "automorphism_generators",
    "canonical_form",
    "canonical_labeling",
    "embed",
    "graph6_decode",
    "graph6_encode",
    "is_isomorphic",
    "load_plane_graph_json",
    "parse_graph_line",
    "sparse6_decode",
    "sparse6_encode",
    "vertex_orbits",
    "__version__",
]
