"""Graded dimensions and representation type of Hecke-algebra blocks.

The package models blocks of cyclotomic quiver Hecke algebras in affine
type A at levels one and two: exact graded dimensions from standard
bitableau combinatorics, Weyl-orbit reduction of blocks to canonical
labels, and the resulting representation-type classification, including
front-ends for type B and type D Hecke algebras.
"""

from .cartan import (
    AffineRank,
    RootVec,
    WeightVec,
    bilinear,
    cartan_entry,
    dynkin_rotate,
    lambda_rep,
    mu_rep,
    null_root,
    pair_coroot,
    simple_reflection,
)
from .checks import CheckResult, acceptance_suite, oracle_suite, run_suite
from .classify import (
    FINITE,
    SIMPLE,
    TAME,
    WILD,
    BlockReport,
    BrauerData,
    ClassifierConfig,
    RepType,
    UnsupportedConfigError,
    brauer_of_finite,
    classify_block,
    classify_canonical,
    classify_heckeB,
    classify_heckeD,
    classify_level_two,
    classify_tensor,
    classify_typeA_levelone,
    normalize,
)
from .fock import (
    Bipartition,
    Bitableau,
    FockContext,
    FockVector,
    Node,
    addable_nodes,
    add_node,
    apply_e,
    apply_f,
    content,
    d_above,
    d_below,
    enumerate_standard,
    removable_nodes,
    remove_node,
    residue,
    tableau_stats,
)
from .gdim import (
    DimMatrix,
    QuiverBound,
    QuiverShapeError,
    block_bipartitions,
    count_standard,
    dim_matrix,
    graded_dim,
    kostka_q,
    nonzero_idempotents,
    quiver_bounds,
    residue_sequences,
    ungraded_block_dim,
)
from .orbits import (
    CanonicalRep,
    NotAWeightError,
    ReductionCapError,
    canonical_rep,
    dominant_reduce,
    is_weight,
    propagation_check_1,
    propagation_check_2,
    rep_root,
    weyl_orbit_bfs,
)
from .qpoly import QPoly, quantum_int

__version__ = "0.1.0"

__all__ = [
    "AffineRank",
    "Bipartition",
    "Bitableau",
    "BlockReport",
    "BrauerData",
    "CanonicalRep",
    "CheckResult",
    "ClassifierConfig",
    "DimMatrix",
    "FINITE",
    "FockContext",
    "FockVector",
    "Node",
    "NotAWeightError",
    "QPoly",
    "QuiverBound",
    "QuiverShapeError",
    "ReductionCapError",
    "RepType",
    "RootVec",
    "SIMPLE",
    "TAME",
    "UnsupportedConfigError",
    "WILD",
    "WeightVec",
    "acceptance_suite",
    "add_node",
    "addable_nodes",
    "apply_e",
    "apply_f",
    "bilinear",
    "block_bipartitions",
    "brauer_of_finite",
    "canonical_rep",
    "cartan_entry",
    "classify_block",
    "classify_canonical",
    "classify_heckeB",
    "classify_heckeD",
    "classify_level_two",
    "classify_tensor",
    "classify_typeA_levelone",
    "content",
    "count_standard",
    "d_above",
    "d_below",
    "dim_matrix",
    "dominant_reduce",
    "dynkin_rotate",
    "enumerate_standard",
    "graded_dim",
    "is_weight",
    "kostka_q",
    "lambda_rep",
    "mu_rep",
    "nonzero_idempotents",
    "normalize",
    "null_root",
    "oracle_suite",
    "pair_coroot",
    "propagation_check_1",
    "propagation_check_2",
    "quantum_int",
    "quiver_bounds",
    "remove_node",
    "removable_nodes",
    "rep_root",
    "residue",
    "residue_sequences",
    "run_suite",
    "simple_reflection",
    "tableau_stats",
    "ungraded_block_dim",
    "weyl_orbit_bfs",
    "__version__",
]
