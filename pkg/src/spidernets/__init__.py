"""Spider graphs: construction, exact indicators, and small-world asymptotics."""

from spidernets.closed_form import (
    ClosedFormReport,
    ConsistencyError,
    alpha_closed,
    average_degree_closed,
    closed_form_report,
    delta_closed,
    density_closed,
    diameter_closed,
    gamma_closed,
    h_index_closed,
    mean_distance_closed,
    total_distance_closed,
)
from spidernets.graph_core import (
    Graph,
    IndicatorArrays,
    all_indicators,
    all_pairs_distances,
    alpha_array,
    build_graph,
    degree_array,
    density,
    diameter,
    gamma_array,
    h_index,
    is_connected,
    mean_distance,
    neighboring_index,
    total_distance,
)
from spidernets.small_world import (
    GrowthDirection,
    RatioPoint,
    SmallWorldNotion,
    SmallWorldVerdict,
    classify,
    numerator,
    ratio_sequence,
    verdict_table,
)
from spidernets.spiders import (
    NodeLabel,
    SpiderParams,
    build_spider,
    edge_count,
    export_graph,
    export_spider,
    node_count,
    normalize,
    pair_count,
)

__all__ = [
    "ClosedFormReport",
    "ConsistencyError",
    "Graph",
    "GrowthDirection",
    "IndicatorArrays",
    "NodeLabel",
    "RatioPoint",
    "SmallWorldNotion",
    "SmallWorldVerdict",
    "SpiderParams",
    "all_indicators",
    "all_pairs_distances",
    "alpha_array",
    "alpha_closed",
    "average_degree_closed",
    "build_graph",
    "build_spider",
    "classify",
    "closed_form_report",
    "degree_array",
    "delta_closed",
    "density",
    "density_closed",
    "diameter",
    "diameter_closed",
    "edge_count",
    "export_graph",
    "export_spider",
    "gamma_array",
    "gamma_closed",
    "h_index",
    "h_index_closed",
    "is_connected",
    "mean_distance",
    "mean_distance_closed",
    "neighboring_index",
    "node_count",
    "normalize",
    "numerator",
    "pair_count",
    "ratio_sequence",
    "total_distance",
    "total_distance_closed",
    "verdict_table",
]
