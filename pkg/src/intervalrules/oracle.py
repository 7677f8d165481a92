"""Exhaustive reference implementations for verifying the mining pipeline.

Everything here trades speed for obviousness: the full pattern space (every
modality pair per feature, crossed over features) is enumerated outright, and
pruning is a literal all-pairs scan. None of the miner's search machinery is
shared, so agreement between the two routes on small instances is meaningful
evidence of correctness. A hard cap on the number of enumerated boxes keeps
accidental misuse from consuming the machine.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .discretize import DiscretizedTask
from .miner import MiningParams
from .patterns import IntervalPattern, PatternRecord, bounding_box, covers

DEFAULT_BOX_CAP = 10_000_000
_CHUNK = 65536


class OracleCapExceededError(Exception):
    """The instance's pattern space is too large for brute force."""


def box_space_size(task: DiscretizedTask) -> int:
    """Number of syntactically valid boxes over the task's modalities."""
    return math.prod(
        len(m) * (len(m) + 1) // 2 for m in task.modalities.per_feature
    )


def _coverage_masks(lows: np.ndarray, highs: np.ndarray, rows: np.ndarray) -> list[int]:
    """Bitmask of covered rows for each box (bit r = row r)."""
    if rows.shape[0] == 0:
        return [0] * lows.shape[0]
    cov = (
        (rows[None, :, :] >= lows[:, None, :]) & (rows[None, :, :] <= highs[:, None, :])
    ).all(axis=2)
    packed = np.packbits(cov, axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in packed]


def _chunks(iterable: Iterable, size: int):
    it = iter(iterable)
    while chunk := list(itertools.islice(it, size)):
        yield chunk


def enumerate_all_closed_bruteforce(
    task: DiscretizedTask, cap: int = DEFAULT_BOX_CAP
) -> list[PatternRecord]:
    """Every distinct positive-closed pattern, found by sheer enumeration.

    Walks every box in the pattern space, keeps the positive extent of each,
    and maps every distinct non-empty extent to the bounding box of its rows
    (which is exactly the positive closure shared by all boxes with that
    extent). Raises OracleCapExceededError when the space exceeds ``cap``.
    """
    n_boxes = box_space_size(task)
    if n_boxes > cap:
        raise OracleCapExceededError(
            f"{n_boxes} boxes exceed the configured cap of {cap}"
        )
    mods = task.modalities.per_feature
    pos = np.asarray(task.positives, dtype=float)
    neg = np.asarray(task.negatives, dtype=float).reshape(task.n_neg, task.n_features)

    pair_lists = [
        [(m[lo], m[hi]) for lo in range(len(m)) for hi in range(lo, len(m))]
        for m in mods
    ]
    extents: set[int] = set()
    for chunk in _chunks(itertools.product(*pair_lists), _CHUNK):
        arr = np.asarray(chunk, dtype=float)  # (boxes, features, 2)
        masks = _coverage_masks(arr[:, :, 0], arr[:, :, 1], pos)
        extents.update(m for m in masks if m)

    records = []
    for tp_mask in extents:
        rows = [task.positives[r] for r in _bits(tp_mask)]
        pattern = bounding_box(rows)
        lows = np.asarray([[lo for lo, _ in pattern.bounds]], dtype=float)
        highs = np.asarray([[hi for _, hi in pattern.bounds]], dtype=float)
        fp_mask = _coverage_masks(lows, highs, neg)[0]
        records.append(
            PatternRecord(
                pattern=pattern,
                tp_mask=tp_mask,
                fp_mask=fp_mask,
                supp_pos=tp_mask.bit_count(),
                supp_neg=fp_mask.bit_count(),
            )
        )
    records.sort(key=PatternRecord.sort_key)
    return records


def _bits(mask: int):
    idx = 0
    while mask:
        if mask & 1:
            yield idx
        mask >>= 1
        idx += 1


def closed_patterns_from_subsets(task: DiscretizedTask) -> list[IntervalPattern]:
    """Secondary route: bounding boxes of extent-closed positive subsets.

    Exponential in the positive count; guarded accordingly. Cross-validates
    the box-enumeration route without numpy.
    """
    p = task.n_pos
    if p > 20:
        raise OracleCapExceededError(f"{p} positives is too many for subset enumeration")
    out: set[IntervalPattern] = set()
    for mask in range(1, 1 << p):
        rows = [task.positives[r] for r in _bits(mask)]
        box = bounding_box(rows)
        ext = 0
        for r, ex in enumerate(task.positives):
            if covers(box, ex):
                ext |= 1 << r
        if ext == mask:
            out.add(box)
    return sorted(out, key=IntervalPattern.sort_key)


def _contains_strictly(outer: PatternRecord, inner: PatternRecord) -> bool:
    # Inline containment test, deliberately not shared with the pruning code.
    if outer.pattern == inner.pattern:
        return False
    return all(
        ol <= il and ih <= oh
        for (il, ih), (ol, oh) in zip(inner.pattern.bounds, outer.pattern.bounds)
    )


@dataclass(frozen=True)
class OracleResult:
    """All closed patterns plus derived per-threshold subsets."""

    all_closed: tuple[PatternRecord, ...]

    def fcip_at(self, minsup_count: int) -> list[PatternRecord]:
        return [r for r in self.all_closed if r.supp_pos > minsup_count]

    def rules_at(self, minsup_count: int, maxfp_count: int) -> list[PatternRecord]:
        return [r for r in self.fcip_at(minsup_count) if r.supp_neg < maxfp_count]

    def relevant_at(self, minsup_count: int, maxfp_count: int) -> list[PatternRecord]:
        rules = self.rules_at(minsup_count, maxfp_count)
        return [
            y
            for y in rules
            if not any(
                x.fp_mask == y.fp_mask and _contains_strictly(x, y) for x in rules
            )
        ]


@dataclass(frozen=True)
class ReferenceOutcome:
    """Stage-by-stage output of the naive pipeline, for exact comparisons."""

    fcip: list[PatternRecord]
    rules: list[PatternRecord]
    relevant: list[PatternRecord]

    @property
    def counts(self) -> tuple[int, int, int]:
        return (len(self.fcip), len(self.rules), len(self.relevant))


def build_oracle(task: DiscretizedTask, cap: int = DEFAULT_BOX_CAP) -> OracleResult:
    return OracleResult(all_closed=tuple(enumerate_all_closed_bruteforce(task, cap)))


def reference_pipeline(
    task: DiscretizedTask, params: MiningParams, cap: int = DEFAULT_BOX_CAP
) -> ReferenceOutcome:
    """Run thresholding and pruning the slow, obvious way."""
    oracle = build_oracle(task, cap)
    minsup_count = params.minsup_count(task.n_pos)
    maxfp_count = params.maxfp_count(task.n_neg)
    return ReferenceOutcome(
        fcip=oracle.fcip_at(minsup_count),
        rules=oracle.rules_at(minsup_count, maxfp_count),
        relevant=oracle.relevant_at(minsup_count, maxfp_count),
    )
