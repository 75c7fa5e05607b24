"""Eccentric connectivity index toolkit.

Exact graph metrics, the extremal graph families attaining the index
maxima at fixed order/diameter/size, closed-form bounds, and exhaustive
verification of the characterization claims by isomorphism-free
enumeration of small connected graphs.
"""

from .canon import canonical_cert, canonical_graph, is_isomorphic
from .enumeration import count_connected, enumerate_connected
from .families import FamilySpec, edge_count, make, parse_spec
from .graph6 import Graph6Error, decode_graph6, encode_graph6
from .graphs import (DisconnectedError, Graph, VertexMetrics, build_graph,
                     diameter, distances_from, eccentricities, eccentricity,
                     eci, eci_edge_form, is_connected, vertex_metrics)
from .kernels import BACKEND as kernel_backend

__version__ = "0.1.0"

__all__ = [
    "Graph", "VertexMetrics", "DisconnectedError", "Graph6Error",
    "FamilySpec", "build_graph", "distances_from", "is_connected",
    "eccentricity", "eccentricities", "diameter", "eci", "eci_edge_form",
    "vertex_metrics", "encode_graph6", "decode_graph6", "canonical_cert",
    "canonical_graph", "is_isomorphic", "enumerate_connected",
    "count_connected", "make", "edge_count", "parse_spec",
    "kernel_backend", "__version__",
]
