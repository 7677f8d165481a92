"""Modality sets (interval endpoint vocabularies) and value snapping.

Interval bounds are only ever drawn from a finite, ordered set of values per
feature (the feature's modalities). Two constructions are provided: the full
set of observed values, and an equal-frequency reduction that caps the number
of modalities per feature by cutting the positive examples into equally
populated chunks. Snapping moves every example value onto the smallest
modality at or above it, so that bounding boxes of examples always land on
modalities.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass

from .dataset import BinaryTask, DataError


@dataclass(frozen=True)
class ModalitySets:
    """Ordered candidate endpoint values, one tuple per feature.

    ``eqmod`` records the requested per-feature cap for the equal-frequency
    construction; it is None when all observed values were kept.
    """

    per_feature: tuple[tuple[float, ...], ...]
    eqmod: int | None = None

    def __post_init__(self) -> None:
        if not self.per_feature:
            raise ValueError("at least one feature required")
        for i, mods in enumerate(self.per_feature):
            if not mods:
                raise ValueError(f"feature {i} has an empty modality set")
            if any(a >= b for a, b in zip(mods, mods[1:])):
                raise ValueError(f"feature {i} modalities not strictly ascending")
        if self.eqmod is not None and self.eqmod < 1:
            raise ValueError("eqmod must be >= 1")

    @property
    def n_features(self) -> int:
        return len(self.per_feature)


@dataclass(frozen=True)
class DiscretizedTask:
    """A BinaryTask whose values all lie on the modality grid."""

    task: BinaryTask
    modalities: ModalitySets

    def __post_init__(self) -> None:
        if self.modalities.n_features != self.task.n_features:
            raise ValueError("modality sets do not match task arity")
        for rows in (self.task.positives, self.task.negatives):
            for row in rows:
                for i, v in enumerate(row):
                    mods = self.modalities.per_feature[i]
                    k = bisect_left(mods, v)
                    if k == len(mods) or mods[k] != v:
                        raise ValueError(
                            f"value {v!r} of feature {i} is not a modality"
                        )

    # Pass-throughs so pattern operations can take either task flavor.
    @property
    def positives(self):
        return self.task.positives

    @property
    def negatives(self):
        return self.task.negatives

    @property
    def feature_names(self):
        return self.task.feature_names

    @property
    def positive_label(self):
        return self.task.positive_label

    @property
    def n_features(self) -> int:
        return self.task.n_features

    @property
    def n_pos(self) -> int:
        return self.task.n_pos

    @property
    def n_neg(self) -> int:
        return self.task.n_neg


def _columns(task: BinaryTask) -> list[list[float]]:
    cols: list[list[float]] = [[] for _ in range(task.n_features)]
    for row in task.positives + task.negatives:
        for i, v in enumerate(row):
            cols[i].append(v)
    return cols


def all_values_modalities(task: BinaryTask) -> ModalitySets:
    """Every distinct observed value of each feature, sorted ascending."""
    per_feature = tuple(tuple(sorted(set(col))) for col in _columns(task))
    return ModalitySets(per_feature=per_feature, eqmod=None)


def equiprobable_modalities(task: BinaryTask, eqmod: int) -> ModalitySets:
    """Equal-frequency endpoint reduction, at most ``eqmod + 1`` values per feature.

    Interior cut points are the empirical quantiles of the positive values at
    ranks k/eqmod (k = 1..eqmod-1), taking the sorted positive value at the
    0-based index ceil(k * n_pos / eqmod) - 1. The global minimum and maximum
    over all examples (positives and negatives) are always added so that the
    widest pattern covers everything.
    """
    if eqmod < 1:
        raise ValueError("eqmod must be >= 1")
    per_feature: list[tuple[float, ...]] = []
    for i, col in enumerate(_columns(task)):
        pos_sorted = sorted(row[i] for row in task.positives)
        n_pos = len(pos_sorted)
        cuts = {
            pos_sorted[-((-k * n_pos) // eqmod) - 1]  # ceil(k*n_pos/eqmod) - 1
            for k in range(1, eqmod)
        }
        cuts.add(min(col))
        cuts.add(max(col))
        per_feature.append(tuple(sorted(cuts)))
    return ModalitySets(per_feature=tuple(per_feature), eqmod=eqmod)


def snap_value(v: float, mods: tuple[float, ...]) -> float:
    """Smallest modality >= v."""
    k = bisect_left(mods, v)
    if k == len(mods):
        raise DataError(f"value {v!r} above the largest modality {mods[-1]!r}")
    return mods[k]


def snap(task: BinaryTask, modalities: ModalitySets) -> DiscretizedTask:
    """Replace every value by the smallest modality at or above it."""
    if modalities.n_features != task.n_features:
        raise ValueError("modality sets do not match task arity")

    def snap_rows(rows):
        return tuple(
            tuple(snap_value(v, modalities.per_feature[i]) for i, v in enumerate(row))
            for row in rows
        )

    snapped = BinaryTask(
        feature_names=task.feature_names,
        positives=snap_rows(task.positives),
        negatives=snap_rows(task.negatives),
        positive_label=task.positive_label,
    )
    return DiscretizedTask(task=snapped, modalities=modalities)


def discretize(task: BinaryTask, eqmod: int | None = None) -> DiscretizedTask:
    """Build modalities (equal-frequency if eqmod given, else all values) and snap."""
    if eqmod is None:
        mods = all_values_modalities(task)
    else:
        mods = equiprobable_modalities(task, eqmod)
    return snap(task, mods)
