"""Discrete conics: equal-focal-angle polygons on a focus-sharing pencil,
the group acting on that pencil, polar duality about the focus, the discrete
negative-pedal construction, and numerical verification of their properties.
"""

from .kernel import Line, Point, ProjectiveMap
from .pencil import Circle, FocalConic, QuadraticForm, limiting_conic, pencil_member
from .duality import Reciprocator, dual_conic, polar_of, pole_of
from .group import GroupElement, act_on_discrete, act_on_parameter, as_angle, compose, from_angle
from .polygon import (
    DiscreteConic,
    PedalScaffold,
    closed_form_vertices,
    grid_layer,
    negative_pedal,
    opposite_side_intersections,
    synthesize,
    tangency_points,
)
from .verify import Report, run_checks

__all__ = [
    "Line",
    "Point",
    "ProjectiveMap",
    "Circle",
    "FocalConic",
    "QuadraticForm",
    "limiting_conic",
    "pencil_member",
    "Reciprocator",
    "dual_conic",
    "polar_of",
    "pole_of",
    "GroupElement",
    "act_on_discrete",
    "act_on_parameter",
    "as_angle",
    "compose",
    "from_angle",
    "DiscreteConic",
    "PedalScaffold",
    "closed_form_vertices",
    "grid_layer",
    "negative_pedal",
    "opposite_side_intersections",
    "synthesize",
    "tangency_points",
    "Report",
    "run_checks",
]
