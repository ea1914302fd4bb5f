"""Exact combinatorics for segment algebra and Jordan triples.

The package has four working layers:

* ``halfint`` and ``algebra``: exact half-integer arithmetic, cuspidal
  symbols, segments, graded formal sums, and the segment
  comultiplication;
* ``structural``: induced objects over a cuspidal base and the
  recursive Jacquet-module expansion of a tower;
* ``lcalc``: pole bookkeeping for embedding data and the Jordan block
  update rule it forces;
* ``triples`` and ``classify``: sign data on Jordan blocks,
  subordination, admissibility, and the bijection between admissible
  triples and reduction chains over alternated bases.

``cli`` exposes the whole stack as the ``segtriples`` command.
"""

from .algebra import (
    EVEN,
    ODD,
    CuspidalSymbol,
    FormalSum,
    GLTerm,
    GradeError,
    Segment,
    comult,
    render_term,
)
from .classify import (
    ChainStep,
    InvalidChainError,
    ReductionChain,
    canonical_chain,
    chain_text,
    chain_violations,
    count_by_jord,
    dominance_edges,
    enumerate_admissible,
    parse_chain,
    realize_chain,
)
from .halfint import HalfInt
from .lcalc import (
    EmbeddingDatum,
    LRatio,
    PreconditionError,
    intertwining_ratios,
    jordan_set_from_pole_orders,
    plancherel_order,
    plancherel_order_raw,
    jord_update,
)
from .structural import (
    ExpansionTable,
    GSpinTerm,
    degree_conserved,
    expand_induced,
    flatten_sum,
    induce,
)
from .triples import (
    MINUS,
    PLUS,
    AlternatedWitness,
    CuspidalSupport,
    GapError,
    InvalidTripleError,
    JordanTriple,
    NotAdmissibleError,
    Reduction,
    is_alternated,
    dominates,
    dominating_extensions,
    is_admissible,
    linking_sign,
    make_triple,
    parse_triple,
    reduce_at,
    singles_defined,
    subordinate_reductions,
    triple_text,
    validate_triple,
)

__version__ = "0.1.0"

__all__ = [
    "EVEN",
    "ODD",
    "PLUS",
    "MINUS",
    "HalfInt",
    "CuspidalSymbol",
    "Segment",
    "GLTerm",
    "FormalSum",
    "GradeError",
    "comult",
    "render_term",
    "GSpinTerm",
    "ExpansionTable",
    "induce",
    "expand_induced",
    "flatten_sum",
    "degree_conserved",
    "LRatio",
    "EmbeddingDatum",
    "PreconditionError",
    "intertwining_ratios",
    "plancherel_order",
    "plancherel_order_raw",
    "jordan_set_from_pole_orders",
    "jord_update",
    "CuspidalSupport",
    "JordanTriple",
    "InvalidTripleError",
    "NotAdmissibleError",
    "GapError",
    "Reduction",
    "AlternatedWitness",
    "make_triple",
    "validate_triple",
    "singles_defined",
    "reduce_at",
    "subordinate_reductions",
    "is_alternated",
    "is_admissible",
    "dominates",
    "dominating_extensions",
    "linking_sign",
    "triple_text",
    "parse_triple",
    "ChainStep",
    "ReductionChain",
    "InvalidChainError",
    "chain_violations",
    "canonical_chain",
    "realize_chain",
    "enumerate_admissible",
    "count_by_jord",
    "dominance_edges",
    "chain_text",
    "parse_chain",
    "__version__",
]
