"""Conflict-free coloring of geometric intersection graphs."""

from cfgeo.geometry import SQRT3, GeoObject, GeometricInstance, build_intersection_graph, intersects
from cfgeo.graph import Graph, PartialColoring, VerifyReport, make_graph, verify_cf
from cfgeo.solver import BudgetExceeded, cf_chromatic_number, is_cf_1_colorable, is_cf_k_colorable
from cfgeo.strips import color_intervals, color_unit_disks, color_unit_squares, greedy_strip_coloring

__all__ = [
    "SQRT3",
    "BudgetExceeded",
    "GeoObject",
    "GeometricInstance",
    "Graph",
    "PartialColoring",
    "VerifyReport",
    "build_intersection_graph",
    "cf_chromatic_number",
    "color_intervals",
    "color_unit_disks",
    "color_unit_squares",
    "greedy_strip_coloring",
    "intersects",
    "is_cf_1_colorable",
    "is_cf_k_colorable",
    "make_graph",
    "verify_cf",
]
