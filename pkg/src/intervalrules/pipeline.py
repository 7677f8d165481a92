"""End-to-end mining runs: mine, threshold, prune, time.

Glue shared by the command line and the test suite. Timing covers the
mine-and-filter pipeline only; parsing and discretization happen outside the
measured window.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .dataset import BinaryTask, Dataset, split_one_vs_rest
from .discretize import DiscretizedTask, all_values_modalities, equiprobable_modalities, snap
from .miner import MiningParams, accuracy_filter, mine_closed_patterns
from .patterns import PatternRecord
from .relevance import relevance_filter

ALL_VALUES = "all-values"
EQUIPROBABLE = "equiprobable"


def prepare_task(task: BinaryTask, params: MiningParams, modality_mode: str) -> DiscretizedTask:
    """Discretize a task according to the requested modality construction."""
    if modality_mode == ALL_VALUES:
        mods = all_values_modalities(task)
    elif modality_mode == EQUIPROBABLE:
        mods = equiprobable_modalities(task, params.eqmod)
    else:
        raise ValueError(f"unknown modality mode {modality_mode!r}")
    return snap(task, mods)


@dataclass(frozen=True)
class MiningOutcome:
    """Per-stage results of one mining run on one positive class."""

    fcip: list[PatternRecord]
    rules: list[PatternRecord]
    relevant: list[PatternRecord]
    minsup_count: int
    maxfp_count: int
    time_ms: float

    @property
    def counts(self) -> tuple[int, int, int]:
        return (len(self.fcip), len(self.rules), len(self.relevant))


def mine_task(dtask: DiscretizedTask, params: MiningParams) -> MiningOutcome:
    """Mine frequent closed patterns, apply both filters, record elapsed time."""
    minsup_count = params.minsup_count(dtask.n_pos)
    maxfp_count = params.maxfp_count(dtask.n_neg)
    start = time.perf_counter()
    fcip = mine_closed_patterns(dtask, minsup_count)
    rules = accuracy_filter(fcip, maxfp_count)
    relevant = relevance_filter(rules)
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    return MiningOutcome(
        fcip=fcip,
        rules=rules,
        relevant=relevant,
        minsup_count=minsup_count,
        maxfp_count=maxfp_count,
        time_ms=elapsed_ms,
    )


def mine_dataset_class(
    dataset: Dataset, positive_label: str, params: MiningParams, modality_mode: str
) -> tuple[DiscretizedTask, MiningOutcome]:
    """One-vs-rest split, discretization, and mining for one positive class."""
    task = split_one_vs_rest(dataset, positive_label)
    dtask = prepare_task(task, params, modality_mode)
    return dtask, mine_task(dtask, params)


@dataclass(frozen=True)
class SweepRow:
    """One sweep measurement: counts and timing at one support threshold."""

    label: str
    minsup_token: str
    closed: int
    rules: int
    relevant: int
    time_ms: float


def sweep_dataset(
    dataset: Dataset,
    labels: list[str],
    grid: list[tuple[str, int | float]],
    params_base: MiningParams,
    modality_mode: str,
    aggregate: bool = False,
) -> list[SweepRow]:
    """Mine every (class, minsup) combination of the grid.

    ``grid`` pairs a display token with the threshold value it stands for
    (absolute count or fraction). With ``aggregate`` the per-class rows for
    each grid point are summed into a single row labeled ``ALL``.
    """
    per_class: list[SweepRow] = []
    for label in labels:
        task = split_one_vs_rest(dataset, label)
        dtask = prepare_task(task, params_base, modality_mode)
        for token, minsup in grid:
            params = MiningParams(
                minsup=minsup, maxfp=params_base.maxfp, eqmod=params_base.eqmod
            )
            outcome = mine_task(dtask, params)
            closed, rules, relevant = outcome.counts
            per_class.append(
                SweepRow(
                    label=label,
                    minsup_token=token,
                    closed=closed,
                    rules=rules,
                    relevant=relevant,
                    time_ms=outcome.time_ms,
                )
            )
    if not aggregate:
        return per_class
    summed: list[SweepRow] = []
    for token, _ in grid:
        rows = [r for r in per_class if r.minsup_token == token]
        summed.append(
            SweepRow(
                label="ALL",
                minsup_token=token,
                closed=sum(r.closed for r in rows),
                rules=sum(r.rules for r in rows),
                relevant=sum(r.relevant for r in rows),
                time_ms=sum(r.time_ms for r in rows),
            )
        )
    return summed
