"""Checks on the hyperoctahedral group layer."""

from __future__ import annotations

import logging
from typing import List

from typeb_fock.coxeter import (
    braid_relations,
    compose,
    embed,
    enumerate_group,
    group_order,
    length_stats,
    length_stats_closed_form,
    length_table,
    reduced_word_stats,
    stumbo_word,
)
from typeb_fock.coxeter.cosets import coset_decompose
from typeb_fock.runconfig import RunConfig
from typeb_fock.verification.models import PropertyResult
from typeb_fock.types import VerifySuite

logger = logging.getLogger(__name__)

SUITE = VerifySuite.GROUP
MAX_BRAID_RANK = 6
MAX_COSET_RANK = 5
MAX_REDUCED_WORD_RANK = 3


def check_braid_relations(max_rank: int = MAX_BRAID_RANK) -> PropertyResult:
    failed = [
        f"n={n}: {name}"
        for n in range(1, max_rank + 1)
        for name, holds in braid_relations(n)
        if not holds
    ]
    return PropertyResult.within(
        SUITE, "braid_relations", len(failed), 0, "; ".join(failed)
    )


def check_group_orders(max_rank: int = MAX_COSET_RANK) -> PropertyResult:
    """The Cayley-graph search reaches all 2^n n! elements."""
    gaps = [abs(len(length_table(n)) - group_order(n)) for n in range(max_rank + 1)]
    return PropertyResult.within(SUITE, "group_order", max(gaps), 0)


def check_length_closed_form(max_rank: int = MAX_COSET_RANK) -> PropertyResult:
    mismatches = 0
    for n in range(1, max_rank + 1):
        for element in enumerate_group(n):
            if length_stats(element) != length_stats_closed_form(element):
                mismatches += 1
    return PropertyResult.within(
        SUITE, "length_closed_form", mismatches, 0, "BFS (l1, l2) vs window formula"
    )


def check_reduced_words(max_rank: int = MAX_REDUCED_WORD_RANK) -> PropertyResult:
    """Every reduced word of an element carries the same (l1, l2)."""
    ambiguous = 0
    words = 0
    for n in range(1, max_rank + 1):
        table = length_table(n)
        for element in enumerate_group(n):
            found = reduced_word_stats(element)
            words += len(table.reduced_words(element))
            if len(found) != 1 or found != {(table[element].l1, table[element].l2)}:
                ambiguous += 1
    return PropertyResult.within(
        SUITE,
        "reduced_word_stats",
        ambiguous,
        0,
        f"{words} reduced words checked up to rank {max_rank}",
    )


def check_cosets(max_rank: int = MAX_COSET_RANK) -> List[PropertyResult]:
    """sigma -> (sigma', k) is a bijection and the lengths add up."""
    broken = 0
    not_additive = 0
    collisions = 0
    for n in range(1, max_rank + 1):
        reps = [stumbo_word(n, k) for k in range(2 * n)]
        seen = set()
        for element in enumerate_group(n):
            lower, k = coset_decompose(element)
            seen.add((lower.window, k))
            if compose(embed(lower, n), reps[k].evaluate()) != element:
                broken += 1
            whole = length_stats(element)
            part = length_stats(lower) if lower.n else None
            l1 = (part.l1 if part else 0) + reps[k].l1
            l2 = (part.l2 if part else 0) + reps[k].l2
            if (whole.l1, whole.l2) != (l1, l2):
                not_additive += 1
        collisions += group_order(n) - len(seen)
    return [
        PropertyResult.within(SUITE, "coset_reconstruction", broken, 0),
        PropertyResult.within(SUITE, "coset_bijection", collisions, 0),
        PropertyResult.within(SUITE, "coset_length_additivity", not_additive, 0),
    ]


def run_group_suite(config: RunConfig) -> List[PropertyResult]:
    results = [
        check_braid_relations(),
        check_group_orders(),
        check_length_closed_form(),
        check_reduced_words(),
    ]
    results.extend(check_cosets())
    logger.info(f"Group suite: {sum(r.passed for r in results)}/{len(results)} passed")
    return results
