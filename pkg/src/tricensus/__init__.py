"""Exhaustive census of 4-cycles in small sphere triangulations."""

from .census import (
    CycleCensus,
    DegreeProfile,
    ExtremalRecord,
    census,
    count_4cycles,
    count_cycles_brute,
    cycles_through_vertex,
    degree_profile,
    edge_diamond,
    four_cycles,
    separating_4cycles,
)
from .embed import (
    CanonicalCode,
    Triangulation,
    canonical_code,
    faces,
    k4,
    mirror,
    neighborhood_cycle,
    relabel,
    validate,
    vertex_connectivity,
)
from .generate import (
    diagonal_flip,
    enumerate_triangulations,
    expand_children,
    flip_closure,
    stacked,
    vertex_split,
)
from .verify import VerificationReport, min_c4

__all__ = [
    "CanonicalCode",
    "CycleCensus",
    "DegreeProfile",
    "ExtremalRecord",
    "Triangulation",
    "VerificationReport",
    "canonical_code",
    "census",
    "count_4cycles",
    "count_cycles_brute",
    "cycles_through_vertex",
    "degree_profile",
    "diagonal_flip",
    "edge_diamond",
    "enumerate_triangulations",
    "expand_children",
    "faces",
    "flip_closure",
    "four_cycles",
    "k4",
    "min_c4",
    "mirror",
    "neighborhood_cycle",
    "relabel",
    "separating_4cycles",
    "stacked",
    "validate",
    "vertex_connectivity",
    "vertex_split",
]
