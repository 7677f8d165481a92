"""Dominance pruning of mined patterns.

Among patterns that cover exactly the same set of negative examples, only
those with containment-maximal intervals are worth keeping: a pattern whose
intervals fit strictly inside another's, without admitting a single extra
false positive, says less about the data. Pruning therefore groups candidates
by false-positive set and drops everything that is strictly contained in a
group mate. Ties (incomparable patterns sharing a false-positive set) all
survive.

Patterns with equal false-positive sets share their negative support, so this
pruning commutes with the negative-support filter.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from .patterns import PatternRecord, strictly_leq


@dataclass(frozen=True)
class Removal:
    """A pruned pattern together with a kept pattern that dominates it."""

    removed: PatternRecord
    witness: PatternRecord


def _prune_group(group: list[PatternRecord]) -> tuple[list[PatternRecord], list[Removal]]:
    # Candidates in decreasing positive support: containment implies
    # positive-extent inclusion, and positive-closed patterns with equal
    # extents are equal, so any strict dominator has strictly larger support
    # and sits in ``kept`` before its subordinates are examined.
    order = sorted(group, key=lambda r: (-r.supp_pos, r.sort_key()))
    kept: list[PatternRecord] = []
    removals: list[Removal] = []
    for r in order:
        witness = None
        for k in kept:
            if r.tp_mask & ~k.tp_mask:
                continue  # tp-subset is necessary for containment
            if strictly_leq(r.pattern, k.pattern):
                witness = k
                break
        if witness is None:
            kept.append(r)
        else:
            removals.append(Removal(removed=r, witness=witness))
    return kept, removals


def relevance_filter(records: list[PatternRecord]) -> list[PatternRecord]:
    """Containment-maximal patterns per false-positive set, sorted canonically.

    Candidates are expected to be closed over the positives (as produced by
    the miner); the pruning order relies on it.
    """
    kept, _ = relevance_filter_with_removals(records)
    return kept


def relevance_filter_with_removals(
    records: list[PatternRecord],
) -> tuple[list[PatternRecord], list[Removal]]:
    """Like relevance_filter, also reporting each removal with its witness."""
    groups: dict[int, list[PatternRecord]] = defaultdict(list)
    for r in records:
        groups[r.fp_mask].append(r)
    kept: list[PatternRecord] = []
    removals: list[Removal] = []
    for group in groups.values():
        g_kept, g_removed = _prune_group(group)
        kept.extend(g_kept)
        removals.extend(g_removed)
    kept.sort(key=PatternRecord.sort_key)
    removals.sort(key=lambda rm: rm.removed.sort_key())
    return kept, removals
