"""Recognition and certification toolkit for circular-arc r-partite graphs."""

from carc.arcs import (
    ArcModel,
    ArcModelError,
    ClockArc,
    NormalizationError,
    arc_contains,
    arcs_intersect,
    build_model,
    extract_ordering,
    model_from_json,
    model_to_json,
    normalize_model,
    scan_anchor,
    validate_model,
)
from carc.graph import (
    AdjacencyMatrix,
    GraphError,
    RPartiteGraph,
    adjacency_matrix,
    builtin_example,
    complete_host,
    parse_graph,
    random_rpartite,
    serialize_graph,
)
from carc.ordering import (
    CircularOrdering,
    OrderingError,
    ViolationWitness,
    has_violation,
    scan_violations,
    verify_gtc,
)
from carc.patterns import (
    CatalogError,
    PatternConfig,
    classify_witness,
    enumerate_catalog,
)
from carc.rcircular import ScanResult, row_scan, scan_dump, verify_r_circular
from carc.recognize import (
    Decision,
    HarnessReport,
    RecognitionError,
    equivalence_harness,
    recognize,
    recognize_bruteforce,
)
from carc.render import model_to_svg

__version__ = "0.1.0"

__all__ = [
    "AdjacencyMatrix",
    "ArcModel",
    "ArcModelError",
    "CatalogError",
    "CircularOrdering",
    "ClockArc",
    "Decision",
    "GraphError",
    "HarnessReport",
    "NormalizationError",
    "OrderingError",
    "PatternConfig",
    "RPartiteGraph",
    "RecognitionError",
    "ScanResult",
    "ViolationWitness",
    "adjacency_matrix",
    "arc_contains",
    "arcs_intersect",
    "build_model",
    "builtin_example",
    "classify_witness",
    "complete_host",
    "enumerate_catalog",
    "equivalence_harness",
    "extract_ordering",
    "has_violation",
    "model_from_json",
    "model_to_json",
    "model_to_svg",
    "normalize_model",
    "parse_graph",
    "random_rpartite",
    "recognize",
    "recognize_bruteforce",
    "row_scan",
    "scan_anchor",
    "scan_dump",
    "scan_violations",
    "serialize_graph",
    "validate_model",
    "verify_gtc",
    "verify_r_circular",
]
