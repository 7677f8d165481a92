"""Command line front end for mining, sweeping, discretization, and verification."""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction
from pathlib import Path

from .dataset import DataError, Dataset, EmptyPositivesError, load_csv, split_one_vs_rest
from .discretize import equiprobable_modalities
from .miner import MiningParams
from .oracle import DEFAULT_BOX_CAP, OracleCapExceededError, reference_pipeline
from .pipeline import (
    ALL_VALUES,
    EQUIPROBABLE,
    MiningOutcome,
    mine_dataset_class,
    mine_task,
    prepare_task,
    sweep_dataset,
)
from .plots import save_sweep_figures

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_EMPTY_POSITIVES = 3
EXIT_NOT_EQUIVALENT = 4
EXIT_CAP_EXCEEDED = 5


class _Parser(argparse.ArgumentParser):
    # Flag mistakes exit with code 1 (argparse's default is 2, which this
    # tool reserves for data errors).
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_threshold(text: str) -> int | Fraction:
    """An absolute count ("3") or a percentage ("10%", fraction of the side's total).

    Percentages convert to counts by ceiling before the strict comparisons,
    so 10% of 23 negatives means supp- < ceil(2.3) = 3.
    """
    text = text.strip()
    try:
        if text.endswith("%"):
            frac = Fraction(text[:-1]) / 100
            if not 0 <= frac <= 1:
                raise ValueError
            return frac
        value = int(text)
        if value < 0:
            raise ValueError
        return value
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(
            f"{text!r} is not a non-negative count or percentage"
        ) from None


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _class_column(text: str) -> str | int:
    return int(text) if text.isdigit() else text


def _add_data_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", required=True, help="CSV file with a header row")
    p.add_argument(
        "--class-col",
        required=True,
        type=_class_column,
        help="class column, by header name or 0-based index",
    )
    p.add_argument("--delimiter", default=",", help="CSV delimiter (default ,)")


def _add_class_args(p: argparse.ArgumentParser) -> None:
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--positive-label", help="mine rules for this class")
    grp.add_argument(
        "--all-classes",
        action="store_true",
        help="run one-vs-rest for every class label",
    )


def _add_mining_args(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--maxfp",
        type=parse_threshold,
        default=Fraction(1, 10),
        help="false-positive threshold, count or %% of negatives (default 10%%)",
    )
    p.add_argument(
        "--eqmod",
        type=_positive_int,
        default=10,
        help="max equal-frequency modalities per feature (default 10)",
    )
    p.add_argument(
        "--modalities",
        choices=[EQUIPROBABLE, ALL_VALUES],
        default=EQUIPROBABLE,
        help="interval endpoint construction (default equiprobable)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="intervalrules",
        description="Mine relevant interval rules from labeled numerical CSV data.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_mine = sub.add_parser("mine", help="mine rules for one class or all classes")
    _add_data_args(p_mine)
    _add_class_args(p_mine)
    p_mine.add_argument(
        "--minsup",
        type=parse_threshold,
        default=0,
        help="positive-support threshold, count or %% of positives (default 0)",
    )
    _add_mining_args(p_mine)
    p_mine.add_argument("--output", help="write rules to this file")
    p_mine.add_argument("--format", choices=["json", "csv"], default="json")
    p_mine.add_argument(
        "--emit-timings",
        action="store_true",
        help="include measured time_ms in the output file (makes it non-reproducible)",
    )
    p_mine.set_defaults(func=cmd_mine)

    p_sweep = sub.add_parser("sweep", help="mine across a grid of support thresholds")
    _add_data_args(p_sweep)
    _add_class_args(p_sweep)
    _add_mining_args(p_sweep)
    p_sweep.add_argument(
        "--minsup-grid",
        help="comma-separated minsup values (counts or percentages)",
    )
    p_sweep.add_argument(
        "--minsup-steps",
        type=_positive_int,
        default=10,
        help="number of evenly spaced absolute thresholds when no grid is given",
    )
    agg = p_sweep.add_mutually_exclusive_group()
    agg.add_argument("--per-class", action="store_true", help="one row per class (default)")
    agg.add_argument(
        "--sum-classes",
        action="store_true",
        help="sum counts and times over classes per grid point",
    )
    p_sweep.add_argument("--output", help="write the sweep CSV to this file")
    p_sweep.add_argument(
        "--plot",
        action="store_true",
        help="render count and time figures next to the CSV (requires --output)",
    )
    p_sweep.set_defaults(func=cmd_sweep)

    p_disc = sub.add_parser("discretize", help="show the modality sets as JSON")
    _add_data_args(p_disc)
    p_disc.add_argument("--positive-label", required=True)
    p_disc.add_argument("--eqmod", type=_positive_int, default=10)
    p_disc.add_argument("--output", help="write JSON here instead of stdout")
    p_disc.set_defaults(func=cmd_discretize)

    p_verify = sub.add_parser(
        "verify", help="cross-check the miner against brute force on small data"
    )
    _add_data_args(p_verify)
    p_verify.add_argument("--positive-label", required=True)
    p_verify.add_argument("--minsup", type=parse_threshold, default=0)
    _add_mining_args(p_verify)
    p_verify.add_argument(
        "--cap",
        type=_positive_int,
        default=DEFAULT_BOX_CAP,
        help="largest pattern-space size accepted for brute force",
    )
    p_verify.set_defaults(func=cmd_verify)

    return parser


def _load(args) -> Dataset:
    return load_csv(args.input, args.class_col, args.delimiter)


def _selected_labels(dataset: Dataset, args) -> list[str]:
    if args.all_classes:
        return list(dataset.class_labels())
    return [args.positive_label]


def _rule_entry(record, feature_names, n_neg: int, label: str) -> dict:
    return {
        "label": label,
        "conditions": [
            {"feature": name, "lower": lo, "upper": hi}
            for name, (lo, hi) in zip(feature_names, record.pattern.bounds)
        ],
        "supp_pos": record.supp_pos,
        "supp_neg": record.supp_neg,
        "tp_count": record.supp_pos,
        "fp_count": record.supp_neg,
        "tn_count": n_neg - record.supp_neg,
    }


def _write_rules_json(path: str, args, blocks: list[dict]) -> None:
    doc = {
        "dataset": Path(args.input).name,
        "params": {"eqmod": args.eqmod, "modalities": args.modalities},
        "classes": blocks,
    }
    with open(path, "w") as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")


def _write_rules_csv(path: str, feature_names, blocks: list[dict]) -> None:
    header = ["class", "supp_pos", "supp_neg", "tp_count", "fp_count", "tn_count"]
    for name in feature_names:
        header += [f"{name}:lower", f"{name}:upper"]
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        for block in blocks:
            for rule in block["rules"]:
                row = [
                    rule["label"],
                    rule["supp_pos"],
                    rule["supp_neg"],
                    rule["tp_count"],
                    rule["fp_count"],
                    rule["tn_count"],
                ]
                for cond in rule["conditions"]:
                    row += [cond["lower"], cond["upper"]]
                writer.writerow(row)


def _summary_line(label: str, outcome: MiningOutcome) -> str:
    closed, rules, relevant = outcome.counts
    return (
        f"label={label} closed={closed} rules={rules} relevant={relevant} "
        f"time_ms={outcome.time_ms:.1f}"
    )


def cmd_mine(args) -> int:
    dataset = _load(args)
    params = MiningParams(minsup=args.minsup, maxfp=args.maxfp, eqmod=args.eqmod)
    blocks = []
    for label in _selected_labels(dataset, args):
        dtask, outcome = mine_dataset_class(dataset, label, params, args.modalities)
        print(_summary_line(label, outcome))
        block = {
            "label": label,
            "minsup": outcome.minsup_count,
            "maxfp": outcome.maxfp_count,
            "counts": {
                "closed": len(outcome.fcip),
                "rules": len(outcome.rules),
                "relevant": len(outcome.relevant),
            },
            "rules": [
                _rule_entry(r, dataset.feature_names, dtask.n_neg, label)
                for r in outcome.relevant
            ],
        }
        if args.emit_timings:
            block["time_ms"] = round(outcome.time_ms, 3)
        blocks.append(block)
    if args.output:
        if args.format == "json":
            _write_rules_json(args.output, args, blocks)
        else:
            _write_rules_csv(args.output, dataset.feature_names, blocks)
    return EXIT_OK


def _build_grid(args, dataset: Dataset, labels: list[str]) -> list[tuple[str, int | Fraction]]:
    if args.minsup_grid:
        tokens = [t.strip() for t in args.minsup_grid.split(",") if t.strip()]
        if not tokens:
            raise DataError("empty --minsup-grid")
        return [(t, parse_threshold(t)) for t in tokens]
    # Evenly spaced absolute thresholds from 0 up to the smallest class size.
    p_min = min(len(split_one_vs_rest(dataset, lab).positives) for lab in labels)
    steps = args.minsup_steps
    if steps == 1:
        values = [0]
    else:
        values = sorted({round(j * (p_min - 1) / (steps - 1)) for j in range(steps)})
    return [(str(v), v) for v in values]


def cmd_sweep(args) -> int:
    if args.plot and not args.output:
        print("intervalrules sweep: error: --plot requires --output", file=sys.stderr)
        return EXIT_USAGE
    dataset = _load(args)
    labels = _selected_labels(dataset, args)
    try:
        grid = _build_grid(args, dataset, labels)
    except argparse.ArgumentTypeError as exc:
        print(f"intervalrules sweep: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    params = MiningParams(minsup=0, maxfp=args.maxfp, eqmod=args.eqmod)
    rows = sweep_dataset(
        dataset, labels, grid, params, args.modalities, aggregate=args.sum_classes
    )

    lines = ["class,minsup,closed,rules,relevant,time_ms"]
    for r in rows:
        lines.append(
            f"{r.label},{r.minsup_token},{r.closed},{r.rules},{r.relevant},{r.time_ms:.3f}"
        )
    text = "\n".join(lines) + "\n"
    if args.output:
        Path(args.output).write_text(text)
        if args.plot:
            prefix = Path(args.output).with_suffix("")
            for p in save_sweep_figures(rows, prefix):
                print(f"wrote {p}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_discretize(args) -> int:
    dataset = _load(args)
    task = split_one_vs_rest(dataset, args.positive_label)
    mods = equiprobable_modalities(task, args.eqmod)
    doc = {
        name: list(values)
        for name, values in zip(dataset.feature_names, mods.per_feature)
    }
    text = json.dumps(doc, indent=2) + "\n"
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _describe(records, feature_names) -> list[str]:
    return [
        " ".join(
            f"{name}:[{lo:g},{hi:g}]"
            for name, (lo, hi) in zip(feature_names, r.pattern.bounds)
        )
        for r in records
    ]


def cmd_verify(args) -> int:
    dataset = _load(args)
    task = split_one_vs_rest(dataset, args.positive_label)
    params = MiningParams(minsup=args.minsup, maxfp=args.maxfp, eqmod=args.eqmod)
    dtask = prepare_task(task, params, args.modalities)
    reference = reference_pipeline(dtask, params, cap=args.cap)
    mined = mine_task(dtask, params)
    stages = [
        ("closed", mined.fcip, reference.fcip),
        ("rules", mined.rules, reference.rules),
        ("relevant", mined.relevant, reference.relevant),
    ]
    for stage, fast, slow in stages:
        if set(fast) != set(slow):
            missing = sorted(set(slow) - set(fast), key=lambda r: r.sort_key())
            extra = sorted(set(fast) - set(slow), key=lambda r: r.sort_key())
            print(f"MISMATCH at stage {stage}")
            for r in _describe(missing[:5], dataset.feature_names):
                print(f"  missing: {r}")
            for r in _describe(extra[:5], dataset.feature_names):
                print(f"  extra:   {r}")
            return EXIT_NOT_EQUIVALENT
    closed, rules, relevant = mined.counts
    print(f"EQUIVALENT closed={closed} rules={rules} relevant={relevant}")
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_OK
    try:
        return args.func(args)
    except EmptyPositivesError as exc:
        print(f"intervalrules: {exc}", file=sys.stderr)
        return EXIT_EMPTY_POSITIVES
    except DataError as exc:
        print(f"intervalrules: {exc}", file=sys.stderr)
        return EXIT_DATA
    except OracleCapExceededError as exc:
        print(f"intervalrules: {exc}", file=sys.stderr)
        return EXIT_CAP_EXCEEDED


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
