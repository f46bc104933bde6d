"""Domination and independent domination numbers on trees and small graphs."""

from .construction import (
    BoundCertificate,
    PeelingStep,
    PeelingTrace,
    certify,
    extend_to_independent_dominating,
    peel,
    run_construction,
)
from .enumeration import count_trees, enumerate_trees
from .errors import DomainError, DomRatioError, ParseError, PreconditionError, SizeError
from .graph import (
    ForestInfo,
    Graph,
    VertexSet,
    balanced_double_star,
    classify_forest,
    line_graph,
    parse_edge_list,
)
from .graph6 import encode_graph6, parse_graph6
from .solvers import (
    RatioReport,
    gamma_brute,
    gamma_forest_dp,
    i_brute,
    i_forest_dp,
    is_dominating,
    is_independent,
    mediant_within_bound,
    ratio_report,
)

__version__ = "0.1.0"
