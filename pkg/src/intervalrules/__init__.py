"""Mining of relevant interval rules from labeled numerical data.

The pipeline: load a labeled CSV, pick a positive class, reduce each feature
to a small ordered set of candidate interval endpoints, enumerate all
interval patterns closed over the positive examples above a support
threshold, keep those under a false-positive threshold, and prune every
pattern strictly contained in another with the identical false-positive set.
"""

from .dataset import (
    BinaryTask,
    DataError,
    Dataset,
    EmptyPositivesError,
    load_csv,
    split_one_vs_rest,
)
from .discretize import (
    DiscretizedTask,
    ModalitySets,
    all_values_modalities,
    discretize,
    equiprobable_modalities,
    snap,
)
from .miner import MiningParams, accuracy_filter, mine_closed_patterns
from .oracle import (
    OracleCapExceededError,
    build_oracle,
    closed_patterns_from_subsets,
    enumerate_all_closed_bruteforce,
    reference_pipeline,
)
from .patterns import (
    EMPTY_NEG_CLOSURE,
    IntervalPattern,
    PatternRecord,
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
from .pipeline import MiningOutcome, SweepRow, mine_dataset_class, mine_task, prepare_task, sweep_dataset
from .relevance import Removal, relevance_filter, relevance_filter_with_removals

__version__ = "0.1.0"

__all__ = [
    "BinaryTask",
    "DataError",
    "Dataset",
    "DiscretizedTask",
    "EMPTY_NEG_CLOSURE",
    "EmptyPositivesError",
    "IntervalPattern",
    "MiningOutcome",
    "MiningParams",
    "ModalitySets",
    "OracleCapExceededError",
    "PatternRecord",
    "Removal",
    "SweepRow",
    "accuracy_filter",
    "all_values_modalities",
    "build_oracle",
    "close_neg",
    "close_pos",
    "closed_patterns_from_subsets",
    "covers",
    "discretize",
    "enumerate_all_closed_bruteforce",
    "equiprobable_modalities",
    "extent",
    "hull",
    "leq",
    "load_csv",
    "mine_closed_patterns",
    "mine_dataset_class",
    "mine_task",
    "more_relevant",
    "prepare_task",
    "reference_pipeline",
    "relevance_filter",
    "relevance_filter_with_removals",
    "snap",
    "split_one_vs_rest",
    "strictly_leq",
    "supports",
    "sweep_dataset",
]
