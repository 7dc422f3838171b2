"""Solvers, reductions, and a parameter-lattice coverage checker for generalized matching."""

from .core import (
    Alphabet,
    Bounds,
    GFM,
    GPM,
    GfmError,
    Instance,
    InstanceParameters,
    InvalidInstanceError,
    Letter,
    MatchWitness,
    MissingImageError,
    ParseError,
    ProblemVariant,
    TokenStr,
    VerificationReport,
    apply_witness,
    make_instance,
    measure_parameters,
    parse_instance,
    parse_witness,
    serialize_instance,
    serialize_witness,
    tokens,
    verify_witness,
)
from .dp import SimilarityTable, decide_with_function, similarity
from .solvers import (
    CandidateSet,
    NotApplicableError,
    ResourceLimitError,
    SolveResult,
    SolveStats,
    candidate_substrings,
    min_wildcards,
    solve_anchored,
    solve_auto,
    solve_bruteforce,
    solve_enum,
)
from .reductions import (
    DecodeFailure,
    MulticoloredGraph,
    ReductionOutput,
    extract_clique,
    find_clique_bruteforce,
    forward_witness,
    generate,
    is_square_free,
    normalize_graph,
    parse_graph,
    reduce_mobile1,
    reduce_mobile2,
    reduce_occt_max,
    reduce_questionmark,
    reduce_questionmarksize,
    serialize_graph,
)
from .classifier import (
    ClassificationReport,
    ComplexityRow,
    builtin_rows,
    check_completeness,
    classify,
    load_rows,
)

__version__ = "0.1.0"
