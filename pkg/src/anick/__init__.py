"""Exact Anick resolutions for algebras presented by confluent rewriting
systems, specialized to Leavitt path algebras of finite directed graphs.

The core is field-agnostic and exact: coefficients are Fractions or prime
field elements, never floats.  The homological output (Tor dimensions) is
computed by exact rank over the chosen field.
"""

__version__ = "0.1.0"

from .algebra import (
    EDGE,
    GHOST_EDGE,
    VERTEX,
    Alphabet,
    FreePolynomial,
    Generator,
)
from .chains import chain_prefix_end, enumerate_chains, is_n_chain
from .errors import (
    ConditionViolated,
    FormulaMismatch,
    GraphDocumentError,
    HomotopyFailure,
    InvalidGraph,
    InvalidRule,
    MalformedElement,
    NonTerminating,
    NotInKernel,
    TruncationExceeded,
    ZeroPolynomial,
)
from .fields import PrimeField, Rationals, field_from_name
from .graphdoc import (
    GraphDocument,
    format_graph_document,
    graph_from_text,
    parse_graph_document,
)
from .homology import (
    TorTable,
    canonical_zeta,
    homotopy_check,
    laurent_complex,
    laurent_formula_differential,
    reduced_element,
    reduced_matrix,
    tor_dims,
)
from .leavitt import (
    Graph,
    chain_allowed,
    closed_form_differential,
    laurent_graph,
    leavitt_alphabet,
    leavitt_gsb,
    cancellation_sum,
    predicate_chains,
    presentation,
    sibling_words,
    substitution_terms,
    suite_graphs,
)
from .linalg import ExactMatrix
from .resolution import (
    Augmentation,
    ResolutionEngine,
    TensorElement,
    VerifyReport,
    d0,
)
from .rewriting import (
    RewriteRule,
    RewriteSystem,
    check_compositions,
    irreducible_words,
    normal_form,
)

__all__ = [
    "EDGE",
    "GHOST_EDGE",
    "VERTEX",
    "Alphabet",
    "Augmentation",
    "ConditionViolated",
    "ExactMatrix",
    "FormulaMismatch",
    "FreePolynomial",
    "Generator",
    "Graph",
    "GraphDocument",
    "GraphDocumentError",
    "HomotopyFailure",
    "InvalidGraph",
    "InvalidRule",
    "MalformedElement",
    "NonTerminating",
    "NotInKernel",
    "PrimeField",
    "Rationals",
    "ResolutionEngine",
    "RewriteRule",
    "RewriteSystem",
    "TensorElement",
    "TorTable",
    "TruncationExceeded",
    "VerifyReport",
    "ZeroPolynomial",
    "canonical_zeta",
    "chain_allowed",
    "chain_prefix_end",
    "check_compositions",
    "closed_form_differential",
    "d0",
    "enumerate_chains",
    "field_from_name",
    "format_graph_document",
    "graph_from_text",
    "homotopy_check",
    "irreducible_words",
    "is_n_chain",
    "laurent_complex",
    "laurent_formula_differential",
    "laurent_graph",
    "leavitt_alphabet",
    "leavitt_gsb",
    "cancellation_sum",
    "normal_form",
    "parse_graph_document",
    "predicate_chains",
    "presentation",
    "reduced_element",
    "reduced_matrix",
    "sibling_words",
    "substitution_terms",
    "suite_graphs",
    "tor_dims",
    "__version__",
]
