"""k-angulations of planar point sets: decision, construction, verification."""

from .geom import (
    COORD_LIMIT,
    CollinearTriple,
    DuplicatePoint,
    GeometryError,
    NotInterior,
    Point,
    PointSet,
    TooFewPoints,
    Turn,
    in_convex_hull,
    make_point_set,
    orientation,
    radial_order,
)
from .plane_graph import (
    BlockPartition,
    CrossingEdges,
    NotTwoConnected,
    PlaneGraph,
    WeakDual,
    corresponding_subgraph,
    internal_faces,
    is_two_connected,
    make_plane_graph,
    validate_drawing,
    weak_dual,
)
from .construct import (
    BoundaryCycle,
    ConstructionError,
    ConstructionTrace,
    add_triangles,
    boundary_cycle,
    build_pontoon,
    dual_forest,
    is_reflex,
    maximal_bad_path,
    select_paths,
    wheel_triangulation,
)
from .partition import (
    KangulationResult,
    fan_kangulation_j0,
    kangulate,
    required_j,
    wheel_partition_j1,
)
from .verify import FeasibilityResult, VerificationReport, feasibility, verify_kangulation
from .oracle import SearchBudget, brute_force_kangulation, conjecture_scan

__version__ = "0.1.0"
