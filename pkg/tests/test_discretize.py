import random

import pytest

from helpers import d1_task, random_discretized_task
from intervalrules import (
    BinaryTask,
    DataError,
    all_values_modalities,
    equiprobable_modalities,
    snap,
)
from intervalrules.discretize import discretize, snap_value


def one_feature_task(positives, negatives=()):
    return BinaryTask(
        feature_names=("f",),
        positives=tuple((float(v),) for v in positives),
        negatives=tuple((float(v),) for v in negatives),
        positive_label="+",
    )


def test_all_values_distinct_sorted():
    task = one_feature_task([1, 2, 2, 3])
    assert all_values_modalities(task).per_feature == ((1.0, 2.0, 3.0),)


def test_all_values_constant_feature():
    task = one_feature_task([5, 5])
    assert all_values_modalities(task).per_feature == ((5.0,),)


def test_all_values_on_d1():
    mods = all_values_modalities(d1_task())
    assert mods.per_feature == ((1.0, 2.0, 3.0, 4.0), (1.0, 2.0, 3.0))


def test_equiprobable_worked_example():
    # positives sorted: 1 2 2 3 5 8 9 13; quartile cut indices 1, 3, 5.
    task = one_feature_task([1, 2, 2, 3, 5, 8, 9, 13])
    mods = equiprobable_modalities(task, eqmod=4)
    assert mods.per_feature == ((1.0, 2.0, 3.0, 8.0, 13.0),)


def test_equiprobable_single_interval():
    task = one_feature_task([1, 2, 2, 3, 5, 8, 9, 13])
    mods = equiprobable_modalities(task, eqmod=1)
    assert mods.per_feature == ((1.0, 13.0),)


def test_equiprobable_identical_positives_dedup():
    task = one_feature_task([7, 7, 7], negatives=[5, 9])
    mods = equiprobable_modalities(task, eqmod=10)
    assert mods.per_feature == ((5.0, 7.0, 9.0),)


def test_equiprobable_rejects_bad_eqmod():
    with pytest.raises(ValueError):
        equiprobable_modalities(one_feature_task([1, 2]), 0)


def test_equiprobable_cap_on_size():
    rng = random.Random(5)
    for _ in range(25):
        values = [rng.randint(0, 40) for _ in range(rng.randint(1, 30))]
        eqmod = rng.randint(1, 12)
        task = one_feature_task(values)
        mods = equiprobable_modalities(task, eqmod).per_feature[0]
        assert len(mods) <= max(eqmod + 1, 2)
        assert list(mods) == sorted(set(mods))
        assert mods[0] == min(values) and mods[-1] == max(values)


def test_equiprobable_subset_of_all_values_when_unconstrained():
    task = one_feature_task([1, 2, 2, 3, 5, 8, 9, 13])
    full = set(all_values_modalities(task).per_feature[0])
    eq = set(equiprobable_modalities(task, eqmod=50).per_feature[0])
    assert eq <= full | {1.0, 13.0}


def test_snap_value_examples():
    mods = (1.0, 2.0, 3.0, 8.0, 13.0)
    assert snap_value(2.5, mods) == 3.0
    assert snap_value(1.0, mods) == 1.0
    assert snap_value(13.0, mods) == 13.0
    with pytest.raises(DataError):
        snap_value(14.0, mods)


def test_snap_is_idempotent():
    rng = random.Random(11)
    for _ in range(20):
        dtask = random_discretized_task(rng)
        again = snap(dtask.task, dtask.modalities)
        assert again.task == dtask.task


def test_snap_never_crosses_a_modality():
    mods = (1.0, 4.0, 9.0)
    for v in [1.0, 1.5, 3.9, 4.0, 4.1, 8.99, 9.0]:
        snapped = snap_value(v, mods)
        assert snapped >= v
        # no modality strictly between v and its snap target
        assert not any(v <= m < snapped for m in mods)


def test_snap_preserves_order():
    task = one_feature_task([1.1, 2.7, 2.2, 8.9], negatives=[0.5, 13.0])
    dtask = discretize(task, eqmod=3)
    raw = [v for (v,) in task.positives]
    snapped = [v for (v,) in dtask.positives]
    for i in range(len(raw)):
        for j in range(len(raw)):
            if raw[i] <= raw[j]:
                assert snapped[i] <= snapped[j]


def test_discretized_values_are_modalities():
    task = one_feature_task([1.1, 2.7, 2.2, 8.9], negatives=[0.5, 13.0])
    dtask = discretize(task, eqmod=3)
    mods = set(dtask.modalities.per_feature[0])
    for (v,) in dtask.positives + dtask.negatives:
        assert v in mods


def test_modalities_bound_all_examples():
    rng = random.Random(3)
    for _ in range(20):
        npos, nneg = rng.randint(1, 10), rng.randint(0, 10)
        task = one_feature_task(
            [rng.uniform(-5, 5) for _ in range(npos)],
            [rng.uniform(-5, 5) for _ in range(nneg)],
        )
        mods = equiprobable_modalities(task, rng.randint(1, 5)).per_feature[0]
        values = [v for (v,) in task.positives + task.negatives]
        assert mods[0] <= min(values)
        assert mods[-1] >= max(values)
