"""Positroids from decorated permutations: ranks, closures, flats and polytope facets."""

from .cyclic import CyclicInterval, cyclic_le, decompose, gale_le, interval_members
from .errors import CapacityError, ContractError, FixedPointError, InputError, NecklaceError, PositroidError
from .flats import (
    FlatRecord,
    enumerate_inseparable_flats,
    is_flat_inseparable_criterion,
    is_intersection_of_interval_flats,
    is_interval_flat,
    is_separable,
)
from .model import (
    DecoratedPermutation,
    GrassmannNecklace,
    Positroid,
    detect_loops_coloops,
    enumerate_bases,
    is_basis,
    necklace_from_permutation,
    permutation_from_necklace,
)
from .oracle import OracleMatroid
from .polytope import FacetSystem, Inequality, basis_polytope_system, independent_set_facets, validate_01_points
from .rank import (
    NonCrossingPartition,
    closure,
    enumerate_noncrossing_partitions,
    interval_rank,
    minelts,
    nbd,
    nbd_with_partition,
    push_procedure,
    rank,
    transfer_step,
)

__all__ = [name for name in dir() if not name.startswith("_")]
