"""Shortest closed billiard orbits in convex polygons and the billiard product."""

from .billiard import Orbit, alpha_bruteforce, alpha_polygon, alpha_triangle, fagnano_orbit, validate_orbit
from .dual import DualBody, acute_dual_region_contains, dual_of_dual_roundtrip, polar_dual
from .errors import (
    BadAngle,
    BadParameter,
    DegenerateInput,
    GeometryError,
    NotAcute,
    NotInAcuteRegion,
    NotInterior,
    NotTriangle,
    NumericalFailure,
)
from .geom import ConvexPolygon, SimilarityTransform, convex_hull, diameter, min_width, steiner_symmetrize
from .product import (
    ProductReport,
    alpha_dual_at,
    alpha_dual_isosceles,
    alpha_dual_triangle_geometric,
    billiard_product,
    santalo_scan,
)
from .search import SearchResult, TableRow, quad_search, regular_polygon_table, reuleaux_polygon, triangle_max_scan, truncate_regular_odd
from .steiner import SteinerReport, steiner_beta_any_axis, steiner_beta_report
