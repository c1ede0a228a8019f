"""Finite preorders, their order topologies, and multi-utility representations."""

from ordtop.preorders import (
    ContourKind,
    PairClass,
    Preorder,
    SetDirection,
    build_preorder,
    classify_pair,
    contour,
    directed_sup,
    enumerate_linear_extensions,
    is_monotone_set,
    labels_of,
    mask_of,
    quotient,
    restrict,
    szpilrajn_extension,
    width,
)
from ordtop.representations import (
    FunctionFamily,
    Sense,
    ValueFunction,
    construct_finite_lsc_rp_multiutility,
    construct_indicator_multiutility,
    construct_lsc_multiutility,
    construct_rp_utility,
    is_multiutility,
    is_richter_peleg_multiutility,
    monotonicity,
    preorder_semicontinuity,
    rank_utility,
    semicontinuity,
    strict_continuity,
)
from ordtop.topologies import (
    SubbasisRole,
    Topology,
    alexandrov_topology,
    closure,
    discrete,
    generate,
    indiscrete,
    interior,
    is_closed,
    is_finer,
    order_topology,
    random_topology_between,
    scott_topology,
    subspace,
    upper_topology,
)

__version__ = "0.1.0"

__all__ = [
    "ContourKind",
    "FunctionFamily",
    "PairClass",
    "Preorder",
    "Sense",
    "SetDirection",
    "SubbasisRole",
    "Topology",
    "ValueFunction",
    "alexandrov_topology",
    "build_preorder",
    "classify_pair",
    "closure",
    "construct_finite_lsc_rp_multiutility",
    "construct_indicator_multiutility",
    "construct_lsc_multiutility",
    "construct_rp_utility",
    "contour",
    "directed_sup",
    "discrete",
    "enumerate_linear_extensions",
    "generate",
    "indiscrete",
    "interior",
    "is_closed",
    "is_finer",
    "is_monotone_set",
    "is_multiutility",
    "is_richter_peleg_multiutility",
    "labels_of",
    "mask_of",
    "monotonicity",
    "order_topology",
    "preorder_semicontinuity",
    "quotient",
    "random_topology_between",
    "rank_utility",
    "restrict",
    "scott_topology",
    "semicontinuity",
    "strict_continuity",
    "subspace",
    "szpilrajn_extension",
    "upper_topology",
    "width",
]
