"""Loading and validation of labeled numerical datasets.

A dataset is a table of real-valued feature columns plus one class-label
column. Mining always runs on a two-class view (one label against the rest),
so this module also provides the one-vs-rest split.
"""

from __future__ import annotations

import csv
import math
import os
from dataclasses import dataclass


class DataError(Exception):
    """Raised when input data cannot be parsed or validated."""


class EmptyPositivesError(DataError):
    """Raised when a requested positive class has no examples."""


Row = tuple[float, ...]


@dataclass(frozen=True)
class Dataset:
    """Validated numerical dataset: one row per example, one label per row."""

    feature_names: tuple[str, ...]
    rows: tuple[Row, ...]
    labels: tuple[str, ...]

    def __post_init__(self) -> None:
        n = len(self.feature_names)
        if n < 1:
            raise DataError("dataset needs at least one feature column")
        if len(set(self.feature_names)) != n:
            raise DataError("duplicate feature names")
        if len(self.rows) < 1:
            raise DataError("dataset has no rows")
        if len(self.labels) != len(self.rows):
            raise DataError("row/label count mismatch")
        for r, row in enumerate(self.rows):
            if len(row) != n:
                raise DataError(f"row {r + 1} has {len(row)} values, expected {n}")
            for c, v in enumerate(row):
                if not math.isfinite(v):
                    raise DataError(
                        f"non-finite value in row {r + 1}, column {self.feature_names[c]}"
                    )

    @property
    def n_features(self) -> int:
        return len(self.feature_names)

    def class_labels(self) -> tuple[str, ...]:
        """Distinct labels in first-appearance order."""
        seen: dict[str, None] = {}
        for lab in self.labels:
            seen.setdefault(lab)
        return tuple(seen)


@dataclass(frozen=True)
class BinaryTask:
    """Two-class mining task: positive examples vs everything else.

    Example identity is the row index within ``positives`` (resp.
    ``negatives``); extents computed elsewhere are index sets over these
    tuples, so row order is significant and preserved from the dataset.
    """

    feature_names: tuple[str, ...]
    positives: tuple[Row, ...]
    negatives: tuple[Row, ...]
    positive_label: str

    def __post_init__(self) -> None:
        if len(self.positives) < 1:
            raise EmptyPositivesError(
                f"no positive examples for label {self.positive_label!r}"
            )
        n = len(self.feature_names)
        for row in self.positives + self.negatives:
            if len(row) != n:
                raise DataError("example arity does not match feature count")

    @property
    def n_features(self) -> int:
        return len(self.feature_names)

    @property
    def n_pos(self) -> int:
        return len(self.positives)

    @property
    def n_neg(self) -> int:
        return len(self.negatives)


def _parse_cell(text: str, row_num: int, col_name: str) -> float:
    text = text.strip()
    if not text:
        raise DataError(f"missing value in row {row_num}, column {col_name}")
    try:
        value = float(text)
    except ValueError:
        raise DataError(
            f"non-numeric value {text!r} in row {row_num}, column {col_name}"
        ) from None
    if not math.isfinite(value):
        raise DataError(f"non-finite value in row {row_num}, column {col_name}")
    return value


def load_csv(path: str | os.PathLike, class_column: str | int, delimiter: str = ",") -> Dataset:
    """Load a headed CSV file into a Dataset.

    ``class_column`` selects the label column by header name or 0-based
    index; every other column must parse as a finite real number. Data rows
    are numbered from 1 in error messages.
    """
    try:
        with open(path, newline="") as fh:
            reader = csv.reader(fh, delimiter=delimiter)
            try:
                header = next(reader)
            except StopIteration:
                raise DataError(f"empty file: {path}") from None
            header = [h.strip() for h in header]
            if isinstance(class_column, int):
                if not 0 <= class_column < len(header):
                    raise DataError(
                        f"class column index {class_column} out of range "
                        f"(file has {len(header)} columns)"
                    )
                class_idx = class_column
            else:
                if class_column not in header:
                    raise DataError(f"class column {class_column!r} not in header")
                class_idx = header.index(class_column)
            feature_names = tuple(h for i, h in enumerate(header) if i != class_idx)
            if not feature_names:
                raise DataError("no feature columns besides the class column")

            rows: list[Row] = []
            labels: list[str] = []
            for row_num, record in enumerate(reader, start=1):
                if not record or all(not cell.strip() for cell in record):
                    continue  # tolerate blank lines
                if len(record) != len(header):
                    raise DataError(
                        f"row {row_num} has {len(record)} cells, expected {len(header)}"
                    )
                values = tuple(
                    _parse_cell(cell, row_num, header[i])
                    for i, cell in enumerate(record)
                    if i != class_idx
                )
                rows.append(values)
                labels.append(record[class_idx].strip())
    except OSError as exc:
        raise DataError(f"cannot read {path}: {exc}") from exc

    if not rows:
        raise DataError(f"no data rows in {path}")
    return Dataset(feature_names=feature_names, rows=tuple(rows), labels=tuple(labels))


def split_one_vs_rest(dataset: Dataset, positive_label: str) -> BinaryTask:
    """Split a dataset into positives (rows with the label) and negatives.

    Row order within each side preserves dataset order.
    """
    if positive_label not in dataset.labels:
        raise EmptyPositivesError(
            f"label {positive_label!r} does not occur in the dataset"
        )
    positives = tuple(
        row for row, lab in zip(dataset.rows, dataset.labels) if lab == positive_label
    )
    negatives = tuple(
        row for row, lab in zip(dataset.rows, dataset.labels) if lab != positive_label
    )
    return BinaryTask(
        feature_names=dataset.feature_names,
        positives=positives,
        negatives=negatives,
        positive_label=positive_label,
    )
