"""Edge intersection graphs of paths on a grid.

Build, validate, transform, analyze, and render representations that
assign a grid path to every vertex of a graph, with adjacency given by
shared unit grid edges, plus exact rational arithmetic for the known
necessary conditions on complete bipartite graphs.
"""

from .analysis import (
    AcpCounts,
    DomainMismatchError,
    IntersectingInputError,
    Orientation,
    PairBoundsReport,
    PairClass,
    SameOwnerError,
    Segment,
    TooManyBendsError,
    ValidationReport,
    bend_count,
    check_pair_bounds,
    classify_pair,
    count_acp,
    derived_graph,
    is_monotonic,
    paths_intersect,
    segments,
    start_orientation,
    validate,
)
from .bounds import (
    BoundVerdict,
    KnownStatus,
    Membership,
    RangeError,
    UnsupportedMError,
    acp_lower,
    heldt_n,
    lbl1,
    lbl_crossings,
    mlbl,
    mlbl2,
    threshold_b2m3,
    verdict,
)
from .cli import RenderOptions, TooLargeError, render_ascii, render_svg
from .constructions import (
    fig2_fixture,
    h1_b2_representation,
    h1_graph,
    h2_gadget,
    kmn_monotonic,
    star_b0,
)
from .core import (
    DiagonalStepError,
    DocumentError,
    EmptyOrDegenerateError,
    Graph,
    GraphError,
    GridEdge,
    GridPath,
    GridPoint,
    PathError,
    Representation,
    SelfIntersectingError,
    canonicalize_path,
    dump_graph,
    dump_representation,
    graph_from_doc,
    graph_to_doc,
    load_graph,
    load_representation,
    path_edges,
    representation_from_doc,
    representation_to_doc,
    reverse_path,
    scale_path,
    translate_path,
)
from .search import (
    InconclusiveSearchError,
    SearchBudget,
    SearchResult,
    SearchStatus,
    bend_number_upto,
    find_representation,
)
from .transform import (
    Conflict,
    ConflictError,
    LineAssignment,
    NotB1Error,
    TransformResult,
    b1_to_b3m,
    check_collinear_separation,
    normalize,
)

__version__ = "0.1.0"

__all__ = [
    "AcpCounts", "BoundVerdict", "Conflict", "ConflictError",
    "DiagonalStepError", "DocumentError", "DomainMismatchError",
    "EmptyOrDegenerateError", "Graph", "GraphError", "GridEdge",
    "GridPath", "GridPoint", "InconclusiveSearchError",
    "IntersectingInputError", "KnownStatus", "LineAssignment",
    "Membership", "NotB1Error", "Orientation", "PairBoundsReport",
    "PairClass", "PathError", "RangeError", "RenderOptions",
    "Representation", "SameOwnerError", "SearchBudget", "SearchResult",
    "SearchStatus", "Segment", "SelfIntersectingError", "TooLargeError",
    "TooManyBendsError", "TransformResult", "UnsupportedMError",
    "ValidationReport", "acp_lower", "b1_to_b3m", "bend_count",
    "bend_number_upto", "canonicalize_path", "check_collinear_separation",
    "check_pair_bounds", "classify_pair", "count_acp", "derived_graph",
    "dump_graph", "dump_representation", "fig2_fixture",
    "find_representation", "graph_from_doc", "graph_to_doc",
    "h1_b2_representation", "h1_graph", "h2_gadget", "heldt_n",
    "is_monotonic", "kmn_monotonic", "lbl1", "lbl_crossings",
    "load_graph", "load_representation", "mlbl", "mlbl2", "normalize",
    "path_edges", "paths_intersect", "render_ascii", "render_svg",
    "representation_from_doc", "representation_to_doc", "reverse_path",
    "scale_path", "segments", "star_b0", "start_orientation",
    "threshold_b2m3", "translate_path", "validate", "verdict",
]
