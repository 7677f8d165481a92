"""Shared test data: the worked two-feature task and random task generation."""

from __future__ import annotations

import random

from intervalrules import BinaryTask, IntervalPattern, ModalitySets
from intervalrules.discretize import DiscretizedTask, all_values_modalities, snap

# Worked example used throughout: three positives, two negatives, two features.
D1_POSITIVES = ((1.0, 1.0), (2.0, 3.0), (3.0, 2.0))
D1_NEGATIVES = ((2.0, 2.0), (4.0, 1.0))

# All seven patterns closed over the positives (bounding boxes of the
# extent-closed positive subsets, enumerated by hand and cross-checked by
# the subset oracle).
D1_CLOSED_BOUNDS = frozenset(
    {
        ((1.0, 3.0), (1.0, 3.0)),
        ((1.0, 2.0), (1.0, 3.0)),
        ((1.0, 3.0), (1.0, 2.0)),
        ((2.0, 3.0), (2.0, 3.0)),
        ((1.0, 1.0), (1.0, 1.0)),
        ((2.0, 2.0), (3.0, 3.0)),
        ((3.0, 3.0), (2.0, 2.0)),
    }
)

# The three zero-false-positive singleton boxes.
D1_ZERO_FP_BOUNDS = frozenset(
    {
        ((1.0, 1.0), (1.0, 1.0)),
        ((2.0, 2.0), (3.0, 3.0)),
        ((3.0, 3.0), (2.0, 2.0)),
    }
)

# Survivors of dominance pruning on the full closed set.
D1_RELEVANT_BOUNDS = D1_ZERO_FP_BOUNDS | {((1.0, 3.0), (1.0, 3.0))}


def d1_task() -> BinaryTask:
    return BinaryTask(
        feature_names=("f1", "f2"),
        positives=D1_POSITIVES,
        negatives=D1_NEGATIVES,
        positive_label="+",
    )


def d1_discretized() -> DiscretizedTask:
    task = d1_task()
    return snap(task, all_values_modalities(task))


def d1_csv_text() -> str:
    lines = ["f1,f2,cls"]
    lines += [f"{int(a)},{int(b)},+" for a, b in D1_POSITIVES]
    lines += [f"{int(a)},{int(b)},-" for a, b in D1_NEGATIVES]
    return "\n".join(lines) + "\n"


def pattern(*bounds) -> IntervalPattern:
    return IntervalPattern(bounds=tuple((float(lo), float(hi)) for lo, hi in bounds))


def bounds_set(records) -> frozenset:
    return frozenset(r.pattern.bounds for r in records)


def random_discretized_task(
    rng: random.Random,
    max_features: int = 3,
    max_modalities: int = 6,
    max_pos: int = 15,
    max_neg: int = 15,
) -> DiscretizedTask:
    """A small task whose values already sit on random modality grids."""
    n = rng.randint(1, max_features)
    mods = []
    for _ in range(n):
        m = rng.randint(1, max_modalities)
        values = sorted(rng.sample(range(0, 2 * max_modalities), m))
        mods.append(tuple(float(v) for v in values))

    def row():
        return tuple(rng.choice(mods[i]) for i in range(n))

    task = BinaryTask(
        feature_names=tuple(f"f{i}" for i in range(n)),
        positives=tuple(row() for _ in range(rng.randint(1, max_pos))),
        negatives=tuple(row() for _ in range(rng.randint(0, max_neg))),
        positive_label="+",
    )
    return DiscretizedTask(task=task, modalities=ModalitySets(per_feature=tuple(mods)))


def random_pattern(rng: random.Random, dtask: DiscretizedTask) -> IntervalPattern:
    """A random box with bounds on the task's modality grid."""
    bounds = []
    for mods in dtask.modalities.per_feature:
        lo = rng.randrange(len(mods))
        hi = rng.randrange(lo, len(mods))
        bounds.append((mods[lo], mods[hi]))
    return IntervalPattern(bounds=tuple(bounds))
