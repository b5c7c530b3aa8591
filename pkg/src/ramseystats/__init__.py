"""Monochromatic clique censuses and deviation statistics on
two-colored complete graphs.

Any two-coloring of a large complete graph is forced to carry a floor
of monochromatic triangles; this package measures how far real
dataset-derived colorings sit above that floor. It bundles exact
censuses (triangles through K5), the closed-form floors and random
baselines, chi-squared deviation reports, and ingestion for vote
records and trade flows, plus a CLI wrapping the common pipelines.
"""

from .bounds import (
    ExpectationCurve,
    GoodmanBound,
    expected_mono,
    goodman_fraction,
    goodman_min,
    schwenk_forced,
    thomason_bound,
)
from .census import (
    CliqueCensus,
    MaxCliqueResult,
    TriangleCensus,
    TransitivityReport,
    clique_census,
    max_clique,
    neighborhood_density,
    per_vertex_triangles,
    transitivity,
    transitivity_from_census,
    triangle_census,
)
from .coloring import (
    Color,
    TwoColoring,
    enumerate_colorings,
    from_blue_edges,
    path_count,
)
from .errors import (
    DegenerateReferenceError,
    InputError,
    ParseError,
    UndefinedBiasError,
    UndefinedDensityError,
    UnsupportedOrderError,
)
from .ingest import (
    DistanceMatrix,
    SweepRow,
    SweepTable,
    TradeFlow,
    VoterRecord,
    build_trade_graph,
    hamming_matrix,
    parse_trade_flows,
    parse_votes,
    party_indices,
    random_coloring,
    sweep,
    threshold_coloring,
)
from .stats import (
    BiasSummary,
    Chi2Kind,
    Chi2Report,
    Series,
    bar_chi2,
    bias_summary,
    chi2_deviation,
    chi2_vs_expectation,
    chi2_vs_goodman,
    normalized_threshold,
    p_value,
)

__version__ = "0.1.0"

__all__ = [
    "BiasSummary",
    "Chi2Kind",
    "Chi2Report",
    "CliqueCensus",
    "Color",
    "DegenerateReferenceError",
    "DistanceMatrix",
    "ExpectationCurve",
    "GoodmanBound",
    "InputError",
    "MaxCliqueResult",
    "ParseError",
    "Series",
    "SweepRow",
    "SweepTable",
    "TradeFlow",
    "TransitivityReport",
    "TriangleCensus",
    "TwoColoring",
    "UndefinedBiasError",
    "UndefinedDensityError",
    "UnsupportedOrderError",
    "VoterRecord",
    "bar_chi2",
    "bias_summary",
    "build_trade_graph",
    "chi2_deviation",
    "chi2_vs_expectation",
    "chi2_vs_goodman",
    "clique_census",
    "enumerate_colorings",
    "expected_mono",
    "from_blue_edges",
    "goodman_fraction",
    "goodman_min",
    "hamming_matrix",
    "max_clique",
    "neighborhood_density",
    "normalized_threshold",
    "p_value",
    "parse_trade_flows",
    "parse_votes",
    "party_indices",
    "path_count",
    "per_vertex_triangles",
    "random_coloring",
    "schwenk_forced",
    "sweep",
    "threshold_coloring",
    "thomason_bound",
    "transitivity",
    "transitivity_from_census",
    "triangle_census",
]
