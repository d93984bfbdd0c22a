"""
Borel-Schur algebras as explicit structure-constant algebras, with the tools
used to settle their representation type: quiver extraction, subquiver
restriction, regular coverings, separated-quiver ADE tests, graded
degenerations, and Nazarova's poset criterion.
"""

from .basicalg import (
    check_admissible,
    degenerate,
    ext_quiver,
    is_special_biserial,
    preset_s32,
    radical_layers,
)
from .classifier import EvidenceItem, Verdict, classify, evidence
from .posetrep import Poset, chains, disjoint_union, gamma_M, nazarova_wild, poset_n
from .quiverkit import (
    Arrow,
    Quiver,
    Relation,
    RepType,
    borel2_presentation,
    classify_ade,
    hereditary_type,
    is_convex,
    lift_relations,
    quotient_by_group,
    restrict_relations,
    separated,
    stabilizer_of_subquiver,
    wild_covering,
    wild_subquiver_large_char,
)
from .schur import (
    CheckFailed,
    ScaleCap,
    StructureAlgebra,
    borel_basis,
    build_algebra,
    embed_degree,
    full_basis,
    multiply,
    one_point_decompose,
    truncate,
    truncate_columns,
)
from .symcomb import (
    Composition,
    MultiIndex,
    PairOrbit,
    YoungSubgroup,
    canonical_pair,
    diagonal_orbit,
    dominance_leq,
    double_coset_transversal,
    multiindex_leq,
    shifted_standard,
    standard_multiindex,
    stabilizer,
    stabilizer_pair,
    subgroup_index,
    weight,
)

__version__ = "0.1.0"
