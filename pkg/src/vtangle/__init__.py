"""Exact Kauffman-bracket and conductance computations for virtual rational
tangles.

The bracket of a four-ended tangle diagram decomposes over three trivial
pictures with Laurent-polynomial coefficients (f, g, h); evaluating at the
eighth root of unity turns the decomposition into a single Gaussian-rational
conductance C(T) = i*(f+h)/(g+h).  Four independent computation routes and a
verification harness keep each other honest.
"""

from .bracket import (
    BracketTriple,
    TRIPLE_H,
    TRIPLE_V,
    TRIPLE_X,
    bracket,
    bracket_elementary,
    combine_triples,
    resolve_state,
)
from .conductance import (
    PATH_CLASSICAL,
    PATH_CLOSED,
    PATH_FRACTION,
    PATH_RECURSION,
    PATH_STATE_SUM,
    ConductanceValue,
    additivity_identity,
    classical_fraction,
    closed_form,
    conductance_from_bracket,
    conductance_paths,
    conductance_recursive,
    continued_fraction_C,
    ratio_identity,
)
from .cyclotomic import C_I, C_ONE, C_ZERO, Cyc8, ZETA, eval_at_zeta8
from .diagram import (
    HORIZONTAL,
    PLUS,
    STAR,
    VERTICAL,
    TangleDiagram,
    TwistWord,
    build_basic,
    combine,
    elementary,
    flype_pair,
    insert_kink,
    reduce_twist_region,
    rotate_pi,
    twist_word_diagram,
    virtualize_crossing,
)
from .errors import (
    DivisorZeroError,
    IndeterminateError,
    MixedSignError,
    NotGaussianError,
    TangleError,
    UnsupportedPatternError,
    VectorRuleError,
    VectorSyntaxError,
)
from .gaussian import G_I, G_ONE, G_ZERO, INFINITY, GaussRational
from .laurent import A, A_INV, LOOP_FACTOR, LaurentPoly
from .vector import INF, TangleVector, format_vector, parse_vector
from .verify import (
    CheckReport,
    EnumerationRecord,
    Envelope,
    enumerate_classify,
    iter_vectors,
    run_additivity_suite,
    run_equivalence_suite,
    run_invariance_suite,
    run_ratio_suite,
    sample_diagrams,
    sample_vectors,
)

__version__ = "0.1.0"

__all__ = [
    "A",
    "A_INV",
    "BracketTriple",
    "C_I",
    "C_ONE",
    "C_ZERO",
    "CheckReport",
    "ConductanceValue",
    "Cyc8",
    "DivisorZeroError",
    "EnumerationRecord",
    "Envelope",
    "G_I",
    "G_ONE",
    "G_ZERO",
    "GaussRational",
    "HORIZONTAL",
    "INF",
    "INFINITY",
    "IndeterminateError",
    "LOOP_FACTOR",
    "LaurentPoly",
    "MixedSignError",
    "NotGaussianError",
    "PATH_CLASSICAL",
    "PATH_CLOSED",
    "PATH_FRACTION",
    "PATH_RECURSION",
    "PATH_STATE_SUM",
    "PLUS",
    "STAR",
    "TRIPLE_H",
    "TRIPLE_V",
    "TRIPLE_X",
    "TangleDiagram",
    "TangleError",
    "TangleVector",
    "TwistWord",
    "UnsupportedPatternError",
    "VERTICAL",
    "VectorRuleError",
    "VectorSyntaxError",
    "ZETA",
    "additivity_identity",
    "bracket",
    "bracket_elementary",
    "build_basic",
    "classical_fraction",
    "closed_form",
    "combine",
    "combine_triples",
    "conductance_from_bracket",
    "conductance_paths",
    "conductance_recursive",
    "continued_fraction_C",
    "elementary",
    "enumerate_classify",
    "eval_at_zeta8",
    "flype_pair",
    "format_vector",
    "insert_kink",
    "iter_vectors",
    "parse_vector",
    "ratio_identity",
    "reduce_twist_region",
    "resolve_state",
    "rotate_pi",
    "run_additivity_suite",
    "run_equivalence_suite",
    "run_invariance_suite",
    "run_ratio_suite",
    "sample_diagrams",
    "sample_vectors",
    "twist_word_diagram",
    "virtualize_crossing",
]
