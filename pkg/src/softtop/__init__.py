"""Soft sets, soft topologies and soft N-topological spaces over finite universes."""

from .ntopology import (
    ImplicationReport,
    SoftNSpace,
    check_implications,
    crisp_n_slice,
    is_n_closed,
    is_n_open,
    make_nspace,
    n_subspace,
    nwise,
    nwise_t0,
    nwise_t1,
    nwise_t2,
    permissive_nwise,
    supremum,
)
from .softset import (
    Context,
    ContextMismatch,
    EmptyCarrier,
    EmptyFamily,
    SoftPoint,
    SoftSet,
    SoftSetError,
    UnknownLabel,
    absolute_soft_set,
    all_soft_points,
    big_intersection,
    big_union,
    complement,
    constant_soft_set,
    difference,
    intersection,
    is_disjoint,
    is_subset,
    null_soft_set,
    point_in,
    restrict,
    soft_points_of,
    softpoint_in,
    union,
)
from . import crisp
from .topology import (
    InvalidTopology,
    Separation,
    SoftTopology,
    TooLarge,
    ValidationReport,
    Violation,
    closed_family,
    closure,
    crisp_slice,
    discrete,
    generate,
    indiscrete,
    is_neighborhood,
    is_open_via_neighborhoods,
    is_t0,
    is_t1,
    is_t2,
    join,
    meet,
    points_closed,
    relative,
    separation_bits,
    separation_trace,
    to_product_topology,
    validate,
)

__version__ = "0.1.0"
