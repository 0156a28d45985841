"""Edge Mostar index toolkit: invariants, extremal families, exhaustive search."""

from .graphs import (
    Edge,
    Graph,
    Graph6Error,
    GraphError,
    all_pairs_distances,
    bfs_distances,
    complete,
    cycle,
    cyclomatic_number,
    dot_product,
    is_connected,
    parse_graph6,
    path,
    star,
    write_graph6,
)
from .canon import (
    CANON_MAX_N,
    CanonCapacityError,
    canon,
    canonical_form,
    isomorphic,
)
from .indices import (
    EdgeReport,
    MostarSummary,
    edge_mostar,
    edge_report,
    edge_vertex_distance,
    mostar_summary,
    vertex_mostar,
)
from .braces import (
    BraceClass,
    BraceDecomposition,
    Skeleton,
    classify,
    skeleton,
    strip_pendants,
)
from .enumeration import (
    EnumerationResult,
    EnumerationTask,
    enumerate_connected,
    maximize,
    maximize_bicyclic,
    maximize_tricyclic,
    maximize_unicyclic,
    survey,
)
from .families import (
    FamilyRegistry,
    FamilySpec,
    NoPolynomialError,
    NotPinnedError,
    build,
    builtin_registry,
    discover_families,
    polynomial,
    s_mr,
    verify_family,
)
from .shifts import (
    ShiftSpec,
    lemma_delta,
    run_shift_suite,
    shift_pendants,
    verify_lemma_shift,
)
from .verify import run_atlas, verify_bicyclic, verify_tricyclic

__all__ = [
    "BraceClass",
    "BraceDecomposition",
    "EnumerationResult",
    "EnumerationTask",
    "FamilyRegistry",
    "FamilySpec",
    "NoPolynomialError",
    "NotPinnedError",
    "ShiftSpec",
    "Skeleton",
    "build",
    "builtin_registry",
    "classify",
    "discover_families",
    "enumerate_connected",
    "lemma_delta",
    "maximize",
    "maximize_bicyclic",
    "maximize_tricyclic",
    "maximize_unicyclic",
    "polynomial",
    "run_atlas",
    "run_shift_suite",
    "s_mr",
    "shift_pendants",
    "skeleton",
    "strip_pendants",
    "survey",
    "verify_bicyclic",
    "verify_family",
    "verify_lemma_shift",
    "verify_tricyclic",
    "CANON_MAX_N",
    "CanonCapacityError",
    "Edge",
    "EdgeReport",
    "Graph",
    "Graph6Error",
    "GraphError",
    "MostarSummary",
    "all_pairs_distances",
    "bfs_distances",
    "canon",
    "canonical_form",
    "complete",
    "cycle",
    "cyclomatic_number",
    "dot_product",
    "edge_mostar",
    "edge_report",
    "edge_vertex_distance",
    "is_connected",
    "isomorphic",
    "mostar_summary",
    "parse_graph6",
    "path",
    "star",
    "vertex_mostar",
    "write_graph6",
]
