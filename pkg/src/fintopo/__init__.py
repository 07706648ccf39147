"""Exact engine for finite topological spaces.

Spaces are families of bitmask opens over indexed points.  The library
classifies subsets into generalized open-set classes, decides global
space properties, grades maps on the continuity hierarchy, enumerates
all topologies at small sizes, and sweeps a registry of propositions
exhaustively, reporting counterexamples or witnesses.
"""

from .documents import (
    decode_map,
    decode_space,
    default_point_names,
    encode_map,
    encode_space,
    load_map,
    load_space,
)
from .enumeration import (
    EnumerationBudget,
    count_reflexive_transitive_relations,
    count_topologies,
    enumerate_topologies,
    enumerate_topologies_naive,
)
from .errors import (
    BudgetExceeded,
    DocumentError,
    GroundSetTooLarge,
    MissingEmptyOrFull,
    NotAPreorder,
    NotClosedUnderIntersection,
    NotClosedUnderUnion,
    TopologyError,
)
from .maps import (
    CONTINUITY_BINDING,
    ContinuityClass,
    SpaceMap,
    continuity_profile,
    enumerate_maps,
    image,
    is_class_continuous,
    is_continuous_in,
    is_strongly_irresolute,
    preimage,
    strongly_irresolute_scl,
)
from .setclasses import (
    ClassTable,
    SetClass,
    class_table,
    is_in_class,
    semi_closure,
    semi_closure_closed_form,
)
from .space import (
    MAX_POINTS,
    Preorder,
    SubsetMask,
    Topology,
    build_topology,
    closure,
    complement,
    full_mask,
    generate_from_subbasis,
    interior,
    specialization_preorder,
    topology_from_preorder,
)
from .spaceprops import SpaceProperty, has_property, space_profile
from .theorems import (
    Proposition,
    SweepReport,
    Witness,
    acceptable,
    find_counterexample,
    proposition,
    registry,
    replay_witness,
    serialize_report,
    verify,
    verify_all,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "CONTINUITY_BINDING",
    "ClassTable",
    "ContinuityClass",
    "DocumentError",
    "EnumerationBudget",
    "GroundSetTooLarge",
    "MAX_POINTS",
    "MissingEmptyOrFull",
    "NotAPreorder",
    "NotClosedUnderIntersection",
    "NotClosedUnderUnion",
    "Preorder",
    "Proposition",
    "SetClass",
    "SpaceMap",
    "SpaceProperty",
    "SubsetMask",
    "SweepReport",
    "Topology",
    "TopologyError",
    "Witness",
    "acceptable",
    "build_topology",
    "class_table",
    "closure",
    "complement",
    "continuity_profile",
    "count_reflexive_transitive_relations",
    "count_topologies",
    "decode_map",
    "decode_space",
    "default_point_names",
    "encode_map",
    "encode_space",
    "enumerate_maps",
    "enumerate_topologies",
    "enumerate_topologies_naive",
    "find_counterexample",
    "full_mask",
    "generate_from_subbasis",
    "has_property",
    "image",
    "interior",
    "is_class_continuous",
    "is_continuous_in",
    "is_in_class",
    "is_strongly_irresolute",
    "load_map",
    "load_space",
    "preimage",
    "proposition",
    "registry",
    "replay_witness",
    "semi_closure",
    "semi_closure_closed_form",
    "serialize_report",
    "space_profile",
    "specialization_preorder",
    "strongly_irresolute_scl",
    "topology_from_preorder",
    "verify",
    "verify_all",
]
