"""Interval pattern algebra: covering, ordering, hulls, extents, closures.

An interval pattern is one closed interval per feature; it covers an example
when every feature value falls inside its interval (boundaries included).
Patterns are partially ordered by componentwise interval inclusion, and the
hull of two patterns is the smallest pattern containing both.

Two closure operators drive the mining pipeline: the bounding box of the
positive examples a pattern covers, and the bounding box of the covered
negative examples. A pattern equal to its positive closure is the canonical
(largest) representative among all patterns covering the same positives.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .discretize import DiscretizedTask

Example = Sequence[float]

#: Result of the negative closure when the pattern covers no negatives.
#: Realized as None: it equals only itself, never an actual pattern.
EMPTY_NEG_CLOSURE = None


@dataclass(frozen=True)
class IntervalPattern:
    """One (lower, upper) pair per feature, lower <= upper."""

    bounds: tuple[tuple[float, float], ...]

    def __post_init__(self) -> None:
        for i, (lo, hi) in enumerate(self.bounds):
            if lo > hi:
                raise ValueError(f"feature {i}: lower bound {lo} above upper {hi}")

    @property
    def arity(self) -> int:
        return len(self.bounds)

    def sort_key(self) -> tuple[float, ...]:
        """Canonical lexicographic key: feature-major, lower then upper."""
        return tuple(v for pair in self.bounds for v in pair)

    def __str__(self) -> str:
        return "x".join(f"[{lo:g},{hi:g}]" for lo, hi in self.bounds)


@dataclass(frozen=True)
class PatternRecord:
    """A pattern with its cached extents over a fixed task.

    Extents are stored as dense bitmasks over example indices (bit r set
    means row r is covered), which makes false-positive-set equality a plain
    integer comparison.
    """

    pattern: IntervalPattern
    tp_mask: int
    fp_mask: int
    supp_pos: int
    supp_neg: int

    def tp_indices(self) -> tuple[int, ...]:
        return _mask_to_indices(self.tp_mask)

    def fp_indices(self) -> tuple[int, ...]:
        return _mask_to_indices(self.fp_mask)

    def sort_key(self) -> tuple[float, ...]:
        return self.pattern.sort_key()


def _mask_to_indices(mask: int) -> tuple[int, ...]:
    out = []
    idx = 0
    while mask:
        if mask & 1:
            out.append(idx)
        mask >>= 1
        idx += 1
    return tuple(out)


def indices_to_mask(indices) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def _check_arity(a: int, b: int) -> None:
    if a != b:
        raise ValueError(f"arity mismatch: {a} vs {b}")


def covers(pattern: IntervalPattern, example: Example) -> bool:
    """True when every component of the example lies inside its interval."""
    _check_arity(pattern.arity, len(example))
    return all(lo <= x <= hi for (lo, hi), x in zip(pattern.bounds, example))


def leq(x: IntervalPattern, y: IntervalPattern) -> bool:
    """Componentwise interval inclusion: every interval of x inside y's."""
    xb, yb = x.bounds, y.bounds
    _check_arity(len(xb), len(yb))
    for (xl, xh), (yl, yh) in zip(xb, yb):
        if xl < yl or xh > yh:
            return False
    return True


def strictly_leq(x: IntervalPattern, y: IntervalPattern) -> bool:
    return x != y and leq(x, y)


def hull(x: IntervalPattern, y: IntervalPattern) -> IntervalPattern:
    """Smallest pattern containing both: componentwise min/max of bounds."""
    _check_arity(x.arity, y.arity)
    return IntervalPattern(
        bounds=tuple(
            (min(xl, yl), max(xh, yh))
            for (xl, xh), (yl, yh) in zip(x.bounds, y.bounds)
        )
    )


def extent(pattern: IntervalPattern, examples: Sequence[Example]) -> tuple[int, ...]:
    """Indices of covered examples, ascending."""
    return tuple(i for i, ex in enumerate(examples) if covers(pattern, ex))


def bounding_box(examples: Sequence[Example]) -> IntervalPattern:
    """Componentwise bounding box of a non-empty set of examples."""
    if not examples:
        raise ValueError("bounding box of no examples")
    n = len(examples[0])
    lows = [min(ex[i] for ex in examples) for i in range(n)]
    highs = [max(ex[i] for ex in examples) for i in range(n)]
    return IntervalPattern(bounds=tuple(zip(lows, highs)))


def close_pos(pattern: IntervalPattern, task: DiscretizedTask) -> IntervalPattern:
    """Bounding box of the positives covered by the pattern.

    The result is contained in the input and covers exactly the same
    positives. Raises when the pattern covers no positive example.
    """
    covered = [ex for ex in task.positives if covers(pattern, ex)]
    if not covered:
        raise ValueError("positive closure of a pattern with empty positive extent")
    return bounding_box(covered)


def close_neg(pattern: IntervalPattern, task: DiscretizedTask) -> Optional[IntervalPattern]:
    """Bounding box of the covered negatives, or EMPTY_NEG_CLOSURE (None)."""
    covered = [ex for ex in task.negatives if covers(pattern, ex)]
    if not covered:
        return EMPTY_NEG_CLOSURE
    return bounding_box(covered)


def supports(pattern: IntervalPattern, task: DiscretizedTask) -> PatternRecord:
    """Record with positive/negative extents and support counts."""
    _check_arity(pattern.arity, task.n_features)
    tp = extent(pattern, task.positives)
    fp = extent(pattern, task.negatives)
    return PatternRecord(
        pattern=pattern,
        tp_mask=indices_to_mask(tp),
        fp_mask=indices_to_mask(fp),
        supp_pos=len(tp),
        supp_neg=len(fp),
    )


def more_relevant(x: PatternRecord, y: PatternRecord, task: DiscretizedTask) -> bool:
    """Literal dominance test through the closures of the pair's hull.

    True iff the positive closure of y equals that of hull(x, y) and the
    negative closure of x equals that of hull(x, y). Kept for fidelity
    checks; the production pruning path groups by false-positive set and
    keeps containment-maximal patterns (see the relevance module).
    """
    h = hull(x.pattern, y.pattern)
    if close_pos(y.pattern, task) != close_pos(h, task):
        return False
    return close_neg(x.pattern, task) == close_neg(h, task)
