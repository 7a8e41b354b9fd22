"""Hypergraph models of social networks with overlapping communities."""
from .hypercore import (
    Hypergraph,
    IncidenceMatrix,
    build_hypergraph,
    incidence_matrix,
    is_k_uniform,
    is_linear,
    k_max,
    overlapping_depth,
    overlapping_width,
)
from .linegraph import LineGraph, adjacency_via_gram, community_cliques, line_graph
from .spectral import SpectralReport, eigenvalues, gram_psd_check, verify_bound
from .generator import GrowthConfig, degree_histogram, grow
from .metrics import (
    MetricsReport,
    PathMode,
    assortativity,
    average_path_length,
    clustering_coefficient,
    fit_power_law,
    full_report,
)
from .ingest import nas_fixture, parse_memberships, project_social_graph

__version__ = "0.1.0"
