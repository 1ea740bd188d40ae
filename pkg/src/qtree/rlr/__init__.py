"""The quadratic tree: rational paths, charts, order valuations and essential valuations."""

from .frac import Frac
from .path import INF, Direction, Finite, NonRational, QuadPath
from .tree import (
    ElementTransform,
    EssentialVal,
    NodeChart,
    chart,
    children,
    comparable,
    contains,
    contains_by_valuation,
    directions_of,
    essential_value,
    exceptional_in_node,
    follow_branch,
    initial_form,
    member,
    node_coordinates,
    ord_at,
    pullback,
    step,
    to_node,
    transform_elem,
)

__all__ = [
    "Direction", "ElementTransform", "EssentialVal", "Finite", "Frac", "INF", "NodeChart",
    "NonRational", "QuadPath", "chart", "children", "comparable", "contains",
    "contains_by_valuation", "directions_of", "essential_value", "exceptional_in_node", "follow_branch",
    "initial_form", "member", "node_coordinates", "ord_at", "pullback", "step", "to_node",
    "transform_elem",
]
