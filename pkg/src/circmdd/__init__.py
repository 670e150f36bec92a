"""Minimum distance diagrams of multi-loop circulant networks.

Exact computation of routing tables, diagram enumeration and coherence,
homogeneous-lattice Hilbert bases, and the weight-plane fans that count
coherent diagrams for three-step networks.
"""

from .coherence import CoherenceResult, RoutingConstraint, is_coherent
from .errors import (
    ArityMismatchError,
    BadFamilyParamsError,
    BadLiftParamsError,
    BudgetExceededError,
    CircmddError,
    DisconnectedError,
    DuplicateStepError,
    InternalInconsistencyError,
    MalformedDocumentError,
    NotDownClosedError,
    NotMinimalError,
    UnsupportedArityError,
    WeightTieError,
    WrongVertexError,
    ZeroStepError,
)
from .fan import (
    FamilyNetwork,
    FamilyVerification,
    FanReport,
    FanSummary,
    RayCandidate,
    Wall,
    WallRejection,
    build_family,
    candidate_rays,
    coherent_fan,
    fan_report,
    lift_network,
    verify_family,
    verify_wall,
)
from .lattice import (
    HilbertBasis,
    HomogeneousLattice,
    OctantSemigroup,
    SINGLE_NEGATIVE_SIGNS,
    boundary_ray_minima,
    hilbert_basis,
    homogeneous_lattice,
    octant,
    octant_points_bounded,
)
from .mdd import (
    DoubleLoopShape,
    EnumerationResult,
    Mdd,
    Staircase,
    build_coherent_mdd,
    classify_double_loop_shape,
    enumerate_mdds,
    is_unique_mdd,
    staircase_generators,
    validate_mdd,
)
from .network import (
    CirculantNetwork,
    DistanceTable,
    PathVector,
    active_kernel,
    build_network,
    distance_table,
    network_stats,
    vertex_of,
)
from .render import RenderSpec, render
from .serialize import encode, parse_mdd_document

__version__ = "0.1.0"

__all__ = [
    "ArityMismatchError",
    "BadFamilyParamsError",
    "BadLiftParamsError",
    "BudgetExceededError",
    "CircmddError",
    "CirculantNetwork",
    "CoherenceResult",
    "DisconnectedError",
    "DistanceTable",
    "DoubleLoopShape",
    "DuplicateStepError",
    "EnumerationResult",
    "FamilyNetwork",
    "FamilyVerification",
    "FanReport",
    "FanSummary",
    "HilbertBasis",
    "HomogeneousLattice",
    "InternalInconsistencyError",
    "MalformedDocumentError",
    "Mdd",
    "NotDownClosedError",
    "NotMinimalError",
    "OctantSemigroup",
    "PathVector",
    "RayCandidate",
    "RenderSpec",
    "RoutingConstraint",
    "SINGLE_NEGATIVE_SIGNS",
    "Staircase",
    "UnsupportedArityError",
    "Wall",
    "WallRejection",
    "WeightTieError",
    "WrongVertexError",
    "ZeroStepError",
    "active_kernel",
    "boundary_ray_minima",
    "build_coherent_mdd",
    "build_family",
    "build_network",
    "candidate_rays",
    "classify_double_loop_shape",
    "coherent_fan",
    "distance_table",
    "encode",
    "enumerate_mdds",
    "fan_report",
    "hilbert_basis",
    "homogeneous_lattice",
    "is_coherent",
    "is_unique_mdd",
    "lift_network",
    "network_stats",
    "octant",
    "octant_points_bounded",
    "parse_mdd_document",
    "render",
    "staircase_generators",
    "validate_mdd",
    "verify_family",
    "verify_wall",
    "vertex_of",
]
