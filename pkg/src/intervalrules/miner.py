"""Duplicate-free enumeration of positive-closed interval patterns.

The search starts from the widest pattern (full modality range on every
feature), closed onto the positives it covers, and specializes depth-first by
minimal bound changes: raising a lower bound to the next modality or lowering
an upper bound to the previous one. Changes are numbered per bound
(feature-major, lower before upper) and a node only applies changes with an
index at or above the change that created it. After each change the pattern
is re-closed onto the covered positives; a child survives only if its
positive support stays above the threshold and the closure touched no bound
whose change index is below the applied one (prefix preservation). A seen-set
on closed patterns suppresses any residual duplicates.

Support thresholds are strict on both sides: a pattern is frequent when its
positive support exceeds ``minsup`` and becomes a rule when its negative
support is below ``maxfp``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .discretize import DiscretizedTask
from .patterns import IntervalPattern, PatternRecord

Threshold = int | float | Fraction


def _as_fraction(value: float | Fraction) -> Fraction:
    if isinstance(value, Fraction):
        return value
    # str() keeps the user-visible decimal exact (0.1 -> 1/10), avoiding
    # binary-float drift when scaling by the example count.
    return Fraction(str(value))


def _validate_threshold(value: Threshold, name: str) -> None:
    if isinstance(value, bool):
        raise ValueError(f"{name} must be a count or fraction, not bool")
    if isinstance(value, int):
        if value < 0:
            raise ValueError(f"{name} must be >= 0")
    else:
        frac = _as_fraction(value)
        if not 0 <= frac <= 1:
            raise ValueError(f"fractional {name} must lie in [0, 1]")


def resolve_count(value: Threshold, total: int) -> int:
    """Absolute counts pass through; fractions convert by ceiling."""
    if isinstance(value, int) and not isinstance(value, bool):
        return value
    return math.ceil(_as_fraction(value) * total)


@dataclass(frozen=True)
class MiningParams:
    """Thresholds and modality cap for one mining run.

    ``minsup`` and ``maxfp`` are absolute counts when int, else fractions of
    the positive (resp. negative) example count, converted by ceiling.
    """

    minsup: Threshold = 0
    maxfp: Threshold = Fraction(1, 10)
    eqmod: int = 10

    def __post_init__(self) -> None:
        _validate_threshold(self.minsup, "minsup")
        _validate_threshold(self.maxfp, "maxfp")
        if self.eqmod < 1:
            raise ValueError("eqmod must be >= 1")

    def minsup_count(self, n_pos: int) -> int:
        return resolve_count(self.minsup, n_pos)

    def maxfp_count(self, n_neg: int) -> int:
        return resolve_count(self.maxfp, n_neg)


class _Engine:
    """Bitmask support engine over a discretized task.

    Examples are encoded as modality indices; for every feature and modality
    it precomputes the bitmask of rows at / at-or-above / at-or-below that
    modality, so extents of index-bounded boxes are a chain of integer ANDs.
    """

    def __init__(self, task: DiscretizedTask):
        self.mods = task.modalities.per_feature
        self.n = len(self.mods)
        val_idx = [{v: k for k, v in enumerate(m)} for m in self.mods]
        self.n_pos = task.n_pos
        self.n_neg = task.n_neg
        self.pos_at, self.pos_ge, self.pos_le = self._tables(task.positives, val_idx)
        self.neg_at, self.neg_ge, self.neg_le = self._tables(task.negatives, val_idx)

    def _tables(self, rows, val_idx):
        at = [[0] * len(m) for m in self.mods]
        for r, row in enumerate(rows):
            bit = 1 << r
            for i, v in enumerate(row):
                at[i][val_idx[i][v]] |= bit
        ge, le = [], []
        for i in range(self.n):
            m = len(self.mods[i])
            g = [0] * m
            acc = 0
            for k in range(m - 1, -1, -1):
                acc |= at[i][k]
                g[k] = acc
            l = [0] * m
            acc = 0
            for k in range(m):
                acc |= at[i][k]
                l[k] = acc
            ge.append(g)
            le.append(l)
        return at, ge, le

    def pos_extent(self, bounds) -> int:
        mask = (1 << self.n_pos) - 1
        for i, (lo, hi) in enumerate(bounds):
            mask &= self.pos_ge[i][lo] & self.pos_le[i][hi]
        return mask

    def neg_extent(self, bounds) -> int:
        mask = (1 << self.n_neg) - 1
        for i, (lo, hi) in enumerate(bounds):
            mask &= self.neg_ge[i][lo] & self.neg_le[i][hi]
        return mask

    def close(self, bounds, mask: int):
        """Tighten index bounds to the box of the rows in ``mask`` (non-empty)."""
        out = []
        for i, (lo, hi) in enumerate(bounds):
            at = self.pos_at[i]
            while not at[lo] & mask:
                lo += 1
            while not at[hi] & mask:
                hi -= 1
            out.append((lo, hi))
        return tuple(out)

    def to_pattern(self, bounds) -> IntervalPattern:
        return IntervalPattern(
            bounds=tuple((self.mods[i][lo], self.mods[i][hi]) for i, (lo, hi) in enumerate(bounds))
        )


def _is_canonical(changed, closed, change_idx: int) -> bool:
    # A closure is canonical when every bound it tightened further has a
    # change index at or above the one just applied (lower of feature i has
    # index 2i, upper 2i+1).
    for i, ((clo, chi), (zlo, zhi)) in enumerate(zip(changed, closed)):
        if zlo != clo and 2 * i < change_idx:
            return False
        if zhi != chi and 2 * i + 1 < change_idx:
            return False
    return True


def mine_closed_patterns(task: DiscretizedTask, minsup_count: int) -> list[PatternRecord]:
    """All positive-closed patterns with positive support > minsup_count.

    Returns records sorted canonically (lexicographic on bounds,
    feature-major, lower then upper). Every returned pattern is a fixed point
    of the positive closure; no two are equal. A threshold at or above the
    positive count yields an empty list.
    """
    if minsup_count < 0:
        raise ValueError("minsup_count must be >= 0")
    eng = _Engine(task)
    if eng.n_pos <= minsup_count:
        return []

    full = (1 << eng.n_pos) - 1
    top = tuple((0, len(m) - 1) for m in eng.mods)
    root = eng.close(top, full)
    found: dict[tuple, int] = {root: full}
    n_changes = 2 * eng.n

    # Explicit DFS; each frame resumes at the next change index to try.
    stack = [(root, full, 0)]
    while stack:
        bounds, mask, j = stack.pop()
        if j >= n_changes:
            continue
        stack.append((bounds, mask, j + 1))
        i = j // 2
        lo, hi = bounds[i]
        if lo == hi:
            continue
        if j % 2 == 0:  # raise the lower bound one modality
            child_i = (lo + 1, hi)
            child_mask = mask & eng.pos_ge[i][lo + 1]
        else:  # lower the upper bound one modality
            child_i = (lo, hi - 1)
            child_mask = mask & eng.pos_le[i][hi - 1]
        if child_mask.bit_count() <= minsup_count:
            continue
        child = bounds[:i] + (child_i,) + bounds[i + 1:]
        closed = eng.close(child, child_mask)
        if not _is_canonical(child, closed, j):
            continue
        if closed in found:
            continue
        found[closed] = child_mask
        stack.append((closed, child_mask, j))

    records = []
    for bounds, mask in found.items():
        fp_mask = eng.neg_extent(bounds)
        records.append(
            PatternRecord(
                pattern=eng.to_pattern(bounds),
                tp_mask=mask,
                fp_mask=fp_mask,
                supp_pos=mask.bit_count(),
                supp_neg=fp_mask.bit_count(),
            )
        )
    records.sort(key=PatternRecord.sort_key)
    return records


def accuracy_filter(records: list[PatternRecord], maxfp_count: int) -> list[PatternRecord]:
    """Keep patterns whose negative support is strictly below the threshold."""
    return [r for r in records if r.supp_neg < maxfp_count]
