import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import d1_discretized, pattern, random_discretized_task, random_pattern
from intervalrules import (
    EMPTY_NEG_CLOSURE,
    IntervalPattern,
    close_neg,
    close_pos,
    covers,
    extent,
    hull,
    leq,
    more_relevant,
    strictly_leq,
    supports,
)
from intervalrules.patterns import bounding_box, indices_to_mask


def test_interval_pattern_validates_bounds():
    with pytest.raises(ValueError):
        IntervalPattern(bounds=((2.0, 1.0),))


def test_covers_interior_boundary_outside():
    p = pattern((1, 3), (1, 3))
    assert covers(p, (2.0, 2.0))
    assert covers(p, (1.0, 3.0))  # closed boundaries
    assert not covers(pattern((1, 3), (1, 2)), (2.0, 3.0))


def test_covers_arity_mismatch():
    with pytest.raises(ValueError):
        covers(pattern((1, 3)), (1.0, 2.0))


def test_leq_examples():
    assert leq(pattern((2, 2), (2, 3)), pattern((1, 3), (1, 3)))
    a, b = pattern((1, 1), (1, 1)), pattern((2, 2), (3, 3))
    assert not leq(a, b) and not leq(b, a)
    assert leq(a, a)


def test_hull_examples():
    assert hull(pattern((1, 1), (1, 1)), pattern((3, 3), (2, 2))) == pattern((1, 3), (1, 2))
    p = pattern((1, 2), (2, 3))
    assert hull(p, p) == p
    assert hull(pattern((1, 2), (2, 3)), pattern((2, 4), (1, 2))) == pattern((1, 4), (1, 3))


def test_extent_on_worked_task():
    dt = d1_discretized()
    assert extent(pattern((1, 3), (1, 3)), dt.positives) == (0, 1, 2)
    assert extent(pattern((1, 3), (1, 3)), dt.negatives) == (0,)
    assert extent(pattern((1, 2), (1, 3)), dt.positives) == (0, 1)


def test_close_pos_on_worked_task():
    dt = d1_discretized()
    assert close_pos(pattern((1, 4), (1, 3)), dt) == pattern((1, 3), (1, 3))
    assert close_pos(pattern((1, 2), (1, 3)), dt) == pattern((1, 2), (1, 3))
    # pattern covering exactly one positive closes to its singleton box
    assert close_pos(pattern((1, 1), (1, 1)), dt) == pattern((1, 1), (1, 1))


def test_close_pos_requires_nonempty_extent():
    dt = d1_discretized()
    with pytest.raises(ValueError):
        close_pos(pattern((4, 4), (3, 3)), dt)


def test_close_neg_on_worked_task():
    dt = d1_discretized()
    assert close_neg(pattern((1, 3), (1, 3)), dt) == pattern((2, 2), (2, 2))
    assert close_neg(pattern((1, 1), (1, 1)), dt) is EMPTY_NEG_CLOSURE
    assert close_neg(pattern((1, 4), (1, 3)), dt) == pattern((2, 4), (1, 2))


def test_supports_on_worked_task():
    dt = d1_discretized()
    rec = supports(pattern((1, 3), (1, 3)), dt)
    assert (rec.supp_pos, rec.supp_neg) == (3, 1)
    rec = supports(pattern((2, 2), (3, 3)), dt)
    assert (rec.supp_pos, rec.supp_neg) == (1, 0)
    rec = supports(pattern((1, 4), (1, 3)), dt)
    assert (rec.supp_pos, rec.supp_neg) == (3, 2)
    assert rec.tp_indices() == (0, 1, 2)
    assert rec.fp_indices() == (0, 1)


def test_mask_round_trip():
    assert indices_to_mask((0, 2, 5)) == 0b100101
    rec_mask = indices_to_mask(range(4))
    assert rec_mask == 0b1111


def test_more_relevant_examples():
    dt = d1_discretized()
    x = supports(pattern((1, 3), (1, 3)), dt)
    y = supports(pattern((1, 2), (1, 3)), dt)
    # hull is x itself; the positive closures of y and of the hull differ
    assert not more_relevant(x, y, dt)
    assert more_relevant(x, x, dt)
    a = supports(pattern((1, 1), (1, 1)), dt)
    b = supports(pattern((2, 2), (3, 3)), dt)
    assert not more_relevant(a, b, dt)


# --- randomized properties -------------------------------------------------


@st.composite
def tasks(draw):
    seed = draw(st.integers(0, 2**32 - 1))
    return random_discretized_task(random.Random(seed), max_pos=8, max_neg=8)


@st.composite
def task_and_pattern(draw):
    dtask = draw(tasks())
    seed = draw(st.integers(0, 2**32 - 1))
    return dtask, random_pattern(random.Random(seed), dtask)


@st.composite
def task_and_pattern_pair(draw):
    dtask = draw(tasks())
    seed = draw(st.integers(0, 2**32 - 1))
    rng = random.Random(seed)
    inner = random_pattern(rng, dtask)
    outer = hull(inner, random_pattern(rng, dtask))  # inner <= outer by construction
    return dtask, inner, outer


@settings(max_examples=150, deadline=None)
@given(task_and_pattern_pair())
def test_monotonicity_of_extents(tp):
    dtask, inner, outer = tp
    assert leq(inner, outer)
    assert set(extent(inner, dtask.positives)) <= set(extent(outer, dtask.positives))
    assert set(extent(inner, dtask.negatives)) <= set(extent(outer, dtask.negatives))


@settings(max_examples=150, deadline=None)
@given(task_and_pattern())
def test_positive_closure_laws(tp):
    dtask, p = tp
    if not extent(p, dtask.positives):
        return
    closed = close_pos(p, dtask)
    assert close_pos(closed, dtask) == closed  # idempotent
    assert leq(closed, p)  # contractive
    assert extent(closed, dtask.positives) == extent(p, dtask.positives)


@settings(max_examples=150, deadline=None)
@given(task_and_pattern_pair())
def test_positive_closure_monotone(tp):
    dtask, inner, outer = tp
    if not extent(inner, dtask.positives):
        return
    assert leq(close_pos(inner, dtask), close_pos(outer, dtask))


@settings(max_examples=150, deadline=None)
@given(task_and_pattern())
def test_negative_closure_laws(tp):
    dtask, p = tp
    closed = close_neg(p, dtask)
    if closed is EMPTY_NEG_CLOSURE:
        assert extent(p, dtask.negatives) == ()
        return
    assert close_neg(closed, dtask) == closed
    assert leq(closed, p)
    assert extent(closed, dtask.negatives) == extent(p, dtask.negatives)


@settings(max_examples=100, deadline=None)
@given(task_and_pattern_pair())
def test_hull_is_upper_bound(tp):
    _, a, b = tp
    h = hull(a, b)
    assert leq(a, h) and leq(b, h)
    assert hull(a, b) == hull(b, a)


def test_hull_least_upper_bound_exhaustive_small():
    # every box over a 3-value grid in one dimension
    mods = (1.0, 2.0, 4.0)
    boxes = [
        pattern((mods[i], mods[j]))
        for i in range(len(mods))
        for j in range(i, len(mods))
    ]
    for a in boxes:
        for b in boxes:
            h = hull(a, b)
            for z in boxes:
                assert leq(h, z) == (leq(a, z) and leq(b, z))


def test_fp_set_equality_implies_equal_negative_closures():
    rng = random.Random(99)
    for _ in range(50):
        dtask = random_discretized_task(rng, max_pos=8, max_neg=8)
        p, q = random_pattern(rng, dtask), random_pattern(rng, dtask)
        if supports(p, dtask).fp_mask == supports(q, dtask).fp_mask:
            ng_p, ng_q = close_neg(p, dtask), close_neg(q, dtask)
            assert ng_p == ng_q


def test_bounding_box_requires_examples():
    with pytest.raises(ValueError):
        bounding_box([])


def test_strictly_leq():
    assert strictly_leq(pattern((2, 2)), pattern((1, 3)))
    assert not strictly_leq(pattern((1, 3)), pattern((1, 3)))
