"""tetragf2: exact construction and verification of two-color tetrahedron
relation solutions over GF(2)."""

from .gf2 import (
    CANONICAL_SLOTS,
    GF2Mat3,
    GF2Mat6,
    IDENTITY3,
    IDENTITY6,
    SingularMatrixError,
    check_ds_tetra,
    check_modified_pair,
    embed,
    enumerate_gl3,
    invert3,
    is_genuinely_3d,
    is_invertible3,
    mul3,
    mul6,
)
from .quantum import (
    PermOp,
    WeightedOp,
    check_quantum_pure,
    check_quantum_weighted,
    compose,
    entries_of_T,
    lift,
    quantize,
    quantize6,
    vertex_count,
)
from .search import (
    ModifiedPair,
    SixTuple,
    SolutionRecord,
    SolutionStore,
    StoreFormatError,
    filter_nontrivial,
    iter_sixtuples,
    load_store,
    pair_count_histogram,
    save_store,
    search_all_modified,
    search_base,
    search_modified_pairs,
    search_sixtuples,
)

__version__ = "0.1.0"
