"""
The hyperoctahedral group Sigma(n): elements, length statistics, coset
representatives and exhaustive enumeration.
"""

from .group import (
    GeneratorWord,
    SignedPermutation,
    braid_relations,
    compose,
    embed,
    enumerate_group,
    generator,
    group_order,
    identity,
    restrict,
    word,
)
from .lengths import (
    LengthStats,
    LengthTable,
    length_stats,
    length_stats_closed_form,
    length_table,
    reduced_word_stats,
    word_stats,
)
from .cosets import coset_decompose, stumbo_letters, stumbo_reps, stumbo_word

__all__ = [
    # Elements
    "SignedPermutation",
    "GeneratorWord",
    "generator",
    "identity",
    "compose",
    "embed",
    "restrict",
    "word",
    "group_order",
    "enumerate_group",
    "braid_relations",
    # Lengths
    "LengthStats",
    "LengthTable",
    "length_stats",
    "length_stats_closed_form",
    "length_table",
    "reduced_word_stats",
    "word_stats",
    # Cosets
    "stumbo_letters",
    "stumbo_word",
    "stumbo_reps",
    "coset_decompose",
]
