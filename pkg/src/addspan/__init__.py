"""Deterministic 4- and 5-additive graph spanners with exact verification."""

from .bfs import DegreeMinTree, bfs_tree, degree_min_bfs_tree
from .domination import CoverInstance, greedy_cover
from .exceptions import (
    BoundsError,
    CapacityError,
    ClaimViolation,
    InvariantViolation,
    ParseError,
    SubgraphViolation,
)
from .graph import (
    Graph,
    canonical_edges,
    generate_gnm,
    parse_edge_list,
    read_edge_list,
    serialize_edge_list,
    write_edge_list,
)
from .oracle import StretchReport, all_pairs_distances, edge_budget_report, verify_stretch
from .reduction import build_4_spanner, double, project
from .residual import ResidualGraph
from .spanner5 import SpannerParams, SpannerResult, build_5_spanner

__version__ = "0.1.0"
