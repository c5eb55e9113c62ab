"""(t,r) broadcast domination on the triangular grid and matchstick graphs T_n."""
from .broadcast import (
    Params,
    ReceptionField,
    Violation,
    WasteProfile,
    dominates,
    efficiency_violations,
    is_efficient_window,
    reception,
    reception_field,
    waste_profile,
)
from .kernels import BACKEND
from .lattice import (
    LatticePoint,
    MatchstickRegion,
    Window,
    ball,
    graph_distance,
    interior_edge_count,
    matchstick,
    neighbors,
    reach_area,
    triangular,
)
from .patterns import (
    PatternLattice,
    axis_period,
    enumerate_towers,
    mirror_pattern,
    pattern,
    vertices_per_tower,
)
from .solver import SolveInstance, SolveResult, domination_number, greedy_incumbent, solve

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "LatticePoint", "MatchstickRegion", "Params", "PatternLattice", "ReceptionField",
    "SolveInstance", "SolveResult", "Violation", "WasteProfile", "Window", "axis_period", "ball",
    "dominates", "domination_number", "efficiency_violations", "enumerate_towers", "graph_distance",
    "greedy_incumbent", "interior_edge_count", "is_efficient_window", "matchstick", "mirror_pattern",
    "neighbors", "pattern", "reach_area", "reception", "reception_field", "solve", "triangular",
    "vertices_per_tower", "waste_profile",
]
