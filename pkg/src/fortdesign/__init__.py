"""Block designs over infinite Fort spaces.

Decide whether a design of a given type exists for symbolic subset shapes C
and D, name a multiplicity and a witness block family, and check both
against two executable oracles: a countable concrete model with explicit
point maps, and a finite discrete brute-force counter.
"""

from .cardinal import (
    ALEPH0,
    ALEPH1,
    Cardinal,
    LambdaValue,
    cdouble,
    compare,
    csum,
    pfin_card,
)
from .concrete import (
    Block,
    BlockCount,
    ConcreteSet,
    DesignCheckReport,
    FamilyEnumerationError,
    OddTailBlock,
    PointMap,
    ProbeReport,
    blocks_containing,
    canonical_homeomorphism,
    check_homeomorphism,
    extract_descriptor,
    is_open,
    limit_points,
    local_design_check,
    realize,
    realize_descriptor,
)
from .descriptors import (
    SpaceDescriptor,
    SubsetDescriptor,
    complement,
    cosize_minus_b,
    descriptor_grid,
    embeddable,
    pair_equivalent,
    size_minus_b,
    subspace_homeomorphic,
    validate,
)
from .designs import (
    CASE_TAGS,
    ClassL,
    ClassW,
    CrosscheckReport,
    DescriptorError,
    DesignType,
    FamilyDescriptor,
    OddTail,
    Singleton,
    SweepReport,
    Verdict,
    crosscheck,
    decide,
    decide_type1,
    decide_type2,
    decide_type3,
    decide_type4,
    sweep,
    witness_violations,
)
from .finitebrute import (
    BruteOutcome,
    FiniteInstance,
    all_k_subsets_instance,
    all_k_subsets_lambda,
    brute_lambda,
    parse_instance,
)

__all__ = [
    "ALEPH0",
    "ALEPH1",
    "Block",
    "BlockCount",
    "BruteOutcome",
    "CASE_TAGS",
    "Cardinal",
    "ClassL",
    "ClassW",
    "ConcreteSet",
    "CrosscheckReport",
    "DescriptorError",
    "DesignCheckReport",
    "DesignType",
    "FamilyDescriptor",
    "FamilyEnumerationError",
    "FiniteInstance",
    "LambdaValue",
    "OddTail",
    "OddTailBlock",
    "PointMap",
    "ProbeReport",
    "Singleton",
    "SpaceDescriptor",
    "SubsetDescriptor",
    "SweepReport",
    "Verdict",
    "all_k_subsets_instance",
    "all_k_subsets_lambda",
    "blocks_containing",
    "brute_lambda",
    "canonical_homeomorphism",
    "cdouble",
    "check_homeomorphism",
    "compare",
    "complement",
    "cosize_minus_b",
    "crosscheck",
    "csum",
    "decide",
    "decide_type1",
    "decide_type2",
    "decide_type3",
    "decide_type4",
    "descriptor_grid",
    "embeddable",
    "extract_descriptor",
    "is_open",
    "limit_points",
    "local_design_check",
    "pair_equivalent",
    "parse_instance",
    "pfin_card",
    "realize",
    "realize_descriptor",
    "size_minus_b",
    "subspace_homeomorphic",
    "sweep",
    "validate",
    "witness_violations",
]
