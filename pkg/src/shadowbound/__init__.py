"""Shadows of 3-graphs with a minimum-degree condition, and graphs whose every
vertex lies in many triangles: bounds, extremal constructions and exact search."""

from .bounds import BoundReport, Regime, edge_lower_bound, shadow_mindeg_bound
from .constructions import best_construction, build, plan
from .families import SetFamily, shadow
from .graphs import Graph, triangle_degrees
from .oracle import SearchResult, min_edges_graph, min_shadow_family

__version__ = "0.1.0"
