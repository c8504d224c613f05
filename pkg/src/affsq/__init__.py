"""Cross-commuting nonabelian squares in affine groups over residue rings.

Exact tools for deciding when AGL1(Z/nZ) contains two families that commute
completely across the split while each family stays nonabelian, for building
explicit witnesses through the CRT, for computing common centralizers via
Smith normal form over Z/p^e, and for assembling the associated CSS block
arrays with Tanner-graph diagnostics.
"""

__version__ = "0.1.0"

from .algebra import (
    AffineMap,
    CrtDecomposition,
    PrimePowerFactor,
    SquareVerdict,
    crt_decompose,
    factorize,
    verify_square,
)
from .centralizer import (
    CentralizerSet,
    CommutationMatrix,
    LocalRing,
    SmithDecomposition,
    commutation_matrix,
    common_centralizer_local,
    common_centralizer_zn,
    is_abelian,
    kernel,
    smith_normal_form,
    valuation,
)
from .classify import (
    ClassificationVerdict,
    NoPairError,
    NoSquareError,
    SquareWitness,
    classify_pir,
    classify_zn,
    construct_square,
    local_has_noncommuting_pair,
    local_noncommuting_pair,
    product_family_lift,
    product_lift,
)
from .css import (
    BlockArrayPair,
    CommutingWindow,
    OrthogonalityReport,
    SparseBinaryMatrix,
    build_block_arrays,
    detect_commuting_2x3,
    export_alist,
    gf2_product_is_zero,
    parse_alist,
    perm_matrix,
    tanner_girth,
    two_row_array,
)
from .oracle import (
    FamilyReport,
    Permutation,
    SearchReport,
    brute_force_centralizer,
    brute_force_square_exists,
    enumerate_agl,
    parse_cycles,
    sn_square,
    verify_families,
)

__all__ = [
    "AffineMap",
    "BlockArrayPair",
    "CentralizerSet",
    "ClassificationVerdict",
    "CommutationMatrix",
    "CommutingWindow",
    "CrtDecomposition",
    "FamilyReport",
    "LocalRing",
    "NoPairError",
    "NoSquareError",
    "OrthogonalityReport",
    "Permutation",
    "PrimePowerFactor",
    "SearchReport",
    "SmithDecomposition",
    "SparseBinaryMatrix",
    "SquareVerdict",
    "SquareWitness",
    "brute_force_centralizer",
    "brute_force_square_exists",
    "build_block_arrays",
    "classify_pir",
    "classify_zn",
    "commutation_matrix",
    "common_centralizer_local",
    "common_centralizer_zn",
    "construct_square",
    "crt_decompose",
    "detect_commuting_2x3",
    "enumerate_agl",
    "export_alist",
    "factorize",
    "gf2_product_is_zero",
    "is_abelian",
    "kernel",
    "local_has_noncommuting_pair",
    "local_noncommuting_pair",
    "parse_alist",
    "parse_cycles",
    "perm_matrix",
    "product_family_lift",
    "product_lift",
    "sn_square",
    "smith_normal_form",
    "tanner_girth",
    "two_row_array",
    "valuation",
    "verify_families",
    "verify_square",
]
