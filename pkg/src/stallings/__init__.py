"""Subgroup graphs of finitely presented groups.

Finite-index subgroups are represented as labeled graphs (folded X-graphs
whose loop language at a base vertex maps onto the subgroup).  The package
covers construction by folding and by coset enumeration, the subgroup
calculus (index, membership, conjugacy, normality, intersections),
exhaustive enumeration at a fixed index, and builders for prime-vertex
certificate graph families.
"""

from .errors import (
    AlphabetMismatch,
    CosetLimitExceeded,
    FulfillmentFailed,
    GluingInvalid,
    ParseError,
    PresentationMismatch,
    SearchBudgetExceeded,
    StallingsError,
)
from .words import (
    Alphabet,
    EMPTY_WORD,
    Presentation,
    Word,
    cyclic_reduce,
    free_presentation,
    free_reduce,
    letter,
    letter_index,
    letter_sign,
    merge_alphabets,
    shift_word,
)
from .xgraph import (
    BasedXGraph,
    Morphism,
    XGraph,
    bouquet,
    canonicalize,
    core,
    coset_rep_words,
    find_morphism,
    fold,
    free_basis,
    free_subgroup_graph,
    is_connected,
    is_folded,
    is_regular,
    isomorphic_based,
    isomorphic_unbased,
    spanning_tree,
    trace,
    wedge_of_words,
)
from .subgroup import (
    CosetTable,
    SubgroupGraph,
    coset_enumerate,
    default_max_cosets,
    fulfillment_violation,
    fulfills,
    subgroup_from_graph,
)
from .products import (
    ProductGraph,
    coset_meet,
    intersect,
    is_malnormal,
    product,
)
from .enumerator import (
    EnumerationTask,
    enumerate_graphs,
    hall_search,
)
from .families import (
    CircleSpec,
    GluingSpec,
    OrbitCertificate,
    admissible_primes,
    build_amalgam,
    build_glued,
    build_parallel_circles,
    build_type1,
    build_type2,
    chain_primes,
    extend_with_loops,
    is_prime,
    verify_coprime_certificate,
    verify_reachability,
)
from .fileio import (
    export_dot,
    parse_graph,
    parse_presentation,
    serialize_graph,
    serialize_presentation,
)

__version__ = "0.1.0"
