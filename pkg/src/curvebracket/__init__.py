"""Kauffman bracket and Kauffman-Jones polynomials of oriented linear
chord diagrams, with span bounds, surface invariants, and span censuses."""

from .bracket import (
    MAX_BRACKET_CHORDS,
    DiagramTooLargeError,
    State,
    UnionFind,
    bracket,
    bracket_span,
    gamma,
    kauffman_jones,
    min_self_intersection_lower_bound,
    mu_extremes,
    splice_pairs,
    state_term,
)
from .census import (
    SpanCensus,
    count_max_span,
    enumerate_all,
    enumerate_parity,
    realizable_spans,
    span_census,
)
from .diagram import (
    ChordDiagram,
    DiagramError,
    DuplicateLabel,
    GaussWordError,
    LabelOutOfRange,
    SelfPairedChord,
)
from .families import (
    family_even,
    family_even_bracket,
    family_odd,
    family_odd_bracket,
    named_diagram,
    named_diagrams,
    realize_span,
)
from .laurent import DELTA, CoefficientOverflowError, LaurentPoly, delta_pow
from .topology import EmptyDiagramError, SurfaceInvariants, neighborhood_invariants

__version__ = "0.1.0"

__all__ = [
    "MAX_BRACKET_CHORDS",
    "DELTA",
    "ChordDiagram",
    "CoefficientOverflowError",
    "DiagramError",
    "DiagramTooLargeError",
    "DuplicateLabel",
    "EmptyDiagramError",
    "GaussWordError",
    "LabelOutOfRange",
    "LaurentPoly",
    "SelfPairedChord",
    "SpanCensus",
    "State",
    "SurfaceInvariants",
    "UnionFind",
    "bracket",
    "bracket_span",
    "count_max_span",
    "delta_pow",
    "enumerate_all",
    "enumerate_parity",
    "family_even",
    "family_even_bracket",
    "family_odd",
    "family_odd_bracket",
    "gamma",
    "kauffman_jones",
    "min_self_intersection_lower_bound",
    "mu_extremes",
    "named_diagram",
    "named_diagrams",
    "neighborhood_invariants",
    "realizable_spans",
    "realize_span",
    "span_census",
    "splice_pairs",
    "state_term",
]
