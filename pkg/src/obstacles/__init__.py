"""Obstacle representations of graphs with exact rational geometry."""

from .arrangement import Arrangement, Drawing, DrawingError, crossing_signature, planarize
from .constructions import (
    lower_bound_drawing, min_vertex_cover, planarization_representation, vc_representation,
)
from .geometry import GeometryError, Point, Polygon, point
from .graph import Graph
from .hardness import PartitionInstance, gen_instance, witness_placement
from .io import ParseError, parse_drawing, parse_graph, parse_scene
from .kernelize import decide_trivial, etr_export, kernel
from .obs_solver import faces_to_obstacles, min_face_cover, obs_of_drawing
from .order_types import blocking_profile, chirotope, radial_system, tangent_curve
from .svg import emit_svg
from .visibility import Scene, SceneError, is_obstacle_representation, visibility_graph

__version__ = "0.1.0"
