"""
Type-B set partitions: enumeration, statistics, the Wick expansion and the
pair-partition moment formulas.
"""

from typeb_fock.partitions.enumeration import (
    check_ground_set,
    colorings,
    enumerate_noncrossing_pairs,
    enumerate_p12,
    enumerate_p12_eps,
    enumerate_p2_eps,
    enumerate_pair_partitions,
    enumerate_type_b,
    is_admissible_pattern,
)
from typeb_fock.partitions.models import (
    EpsilonPattern,
    PartitionStats,
    SetPartition,
    TypeBPartition,
)
from typeb_fock.partitions.stats import (
    cover_count,
    covers,
    crosses,
    crossings,
    noncrossing_stats,
    singletons_left,
    stats,
    type_b_stats,
)
from typeb_fock.partitions.wick import (
    WickExpansion,
    colored_coefficient,
    colored_counts,
    mixed_moment_pair_sum,
    moment_pair_sum,
    t_moment_sum,
    uncolored_coefficient,
    wick_coefficients,
    wick_vector,
)

__all__ = [
    # Models
    "EpsilonPattern",
    "PartitionStats",
    "SetPartition",
    "TypeBPartition",
    # Enumeration
    "check_ground_set",
    "colorings",
    "enumerate_noncrossing_pairs",
    "enumerate_p12",
    "enumerate_p12_eps",
    "enumerate_p2_eps",
    "enumerate_pair_partitions",
    "enumerate_type_b",
    "is_admissible_pattern",
    # Statistics
    "cover_count",
    "covers",
    "crosses",
    "crossings",
    "noncrossing_stats",
    "singletons_left",
    "stats",
    "type_b_stats",
    # Wick and moments
    "WickExpansion",
    "colored_coefficient",
    "colored_counts",
    "mixed_moment_pair_sum",
    "moment_pair_sum",
    "t_moment_sum",
    "uncolored_coefficient",
    "wick_coefficients",
    "wick_vector",
]
