"""Command-line surface: the panel workflows as subcommands.

Every subcommand reads a delimited file, writes its result to --output
(CSV, or SVG for ``plot``), and prints a one-line summary. Workflows
chain through files: ``slope`` writes a per-key table that ``near`` can
consume, ``strata`` writes an allocation that ``plot`` can draw.

Exit codes: 0 success, 1 data error, 2 flag/validation error. Failures
print a single ``error: ...`` line to stderr.
"""

from __future__ import annotations

import argparse
import operator
import os
import re
import sys
import warnings
from pathlib import Path

import pandas as pd

from .errors import DegenerateKeyWarning, PanelscopeError, UnknownColumnError
from .features import BUILTIN_SETS, compute_features
from .io import IngestConfig, read_delimited, read_panel_csv, write_table_csv
from .nearness import key_rss, key_slope, augment_fit, keys_near
from .panel import PanelTable, filter_keys, index_regular, index_summary, join_features, n_obs
from .render import PlotSpec, render_facets
from .sampling import (
    DEFAULT_SEED,
    KeyAllocation,
    allocate_facet_sample,
    sample_frac_keys,
    sample_n_keys,
    stratify_keys,
)

_OPS = {
    "==": operator.eq,
    "!=": operator.ne,
    "<": operator.lt,
    "<=": operator.le,
    ">": operator.gt,
    ">=": operator.ge,
}
_FILTER_RE = re.compile(r"^\s*([\w.]+)\s*(==|!=|<=|>=|<|>)\s*(?![=<>])(.+?)\s*$")


class _UsageError(Exception):
    """Flag/validation problem; maps to exit code 2."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(2)


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--input", required=True, help="delimited input file")
    sub.add_argument("--key", required=True, help="key column name")
    sub.add_argument("--index", required=True, help="index column name")
    sub.add_argument("--regular", action="store_true", help="index is regularly spaced")
    sub.add_argument("--min-obs", type=int, default=0, help="drop keys with fewer observations")
    sub.add_argument("--delimiter", default=",", help="field delimiter (default comma)")
    sub.add_argument("--seed", type=int, default=None, help="RNG seed (default: PANELSCOPE_SEED or 42)")
    sub.add_argument("--output", default=None, help="output file path")


def build_parser() -> _Parser:
    parser = _Parser(prog="panelscope", description=__doc__.splitlines()[0])
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("summary", help="index regularity, index summary, observation tally")
    _add_common(p)

    p = subs.add_parser("features", help="per-key features of a variable")
    _add_common(p)
    p.add_argument("--var", required=True, help="variable to summarise")
    p.add_argument("--set", default="five_num", choices=sorted(BUILTIN_SETS), help="feature set")
    p.add_argument("--filter", default=None, help="keep keys matching '<column> <op> <literal>'")
    p.add_argument("--join", action="store_true", help="with --filter: write the joined panel rows")

    p = subs.add_parser("sample", help="sample keys, or allocate a facet sample")
    _add_common(p)
    p.add_argument("--size", type=int, default=None, help="number of keys to sample")
    p.add_argument("--frac", type=float, default=None, help="fraction of keys to sample")
    p.add_argument("--n-per-facet", type=int, default=3, help="keys per facet (default 3)")
    p.add_argument("--n-facets", type=int, default=12, help="number of facets (default 12)")

    p = subs.add_parser("strata", help="stratify all keys across facets")
    _add_common(p)
    p.add_argument("--n-strata", type=int, default=12, help="number of strata (default 12)")
    p.add_argument("--along", default=None, help="order strata along this column")
    p.add_argument("--descending", action="store_true", help="largest along-summaries first")
    p.add_argument(
        "--along-summary", default="first", choices=("first", "mean", "median"),
        help="per-key scalar used for ordering (default first)",
    )

    p = subs.add_parser("near", help="keys nearest to the five-number summary of a column")
    _add_common(p)
    p.add_argument("--var", required=True, help="feature column to match against")

    p = subs.add_parser("slope", help="per-key least-squares line of a variable on the index")
    _add_common(p)
    p.add_argument("--var", required=True, help="response variable")
    p.add_argument("--full", action="store_true", help="write all rows with pred/res/rss instead")

    p = subs.add_parser("plot", help="render a faceted line plot to SVG")
    _add_common(p)
    p.add_argument("--y", required=True, help="y variable")
    p.add_argument("--x", default=None, help="x variable (default: the index)")
    p.add_argument("--alloc", default=None, help="allocation CSV (key,facet) from sample/strata")
    p.add_argument("--strata", action="store_true", help="stratify all keys instead of sampling")
    p.add_argument("--n-strata", type=int, default=12)
    p.add_argument("--along", default=None)
    p.add_argument("--descending", action="store_true")
    p.add_argument("--n-per-facet", type=int, default=3)
    p.add_argument("--n-facets", type=int, default=12)
    p.add_argument("--n-cols", type=int, default=4)
    p.add_argument("--width", type=int, default=1200)
    p.add_argument("--height", type=int, default=900)
    p.add_argument("--title", default="")
    p.add_argument("--breaks", default=None, help="comma-separated x tick positions")
    p.add_argument("--highlight", default=None, help="comma-separated keys to colour")
    return parser


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("PANELSCOPE_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise _UsageError(f"PANELSCOPE_SEED must be an integer, got {env!r}") from None
    return DEFAULT_SEED


def _load_panel(args) -> PanelTable:
    if not Path(args.input).exists():
        raise _UsageError(f"--input file not found: {args.input}")
    config = IngestConfig(
        args.input, key_col=args.key, index_col=args.index,
        regular=args.regular, delimiter=args.delimiter,
    )
    table = read_panel_csv(config)
    if args.min_obs > 0:
        counts = n_obs(table)
        table = filter_keys(table, counts, lambda row: row["n_obs"] >= args.min_obs)
    return table


def _require_output(args) -> str:
    if not args.output:
        raise _UsageError("--output is required for this subcommand")
    return args.output


def _parse_literal(text: str, features: pd.DataFrame):
    text = text.strip()
    max_match = re.fullmatch(r"max\(([\w.]+)\)", text)
    if max_match:
        col = max_match.group(1)
        if col not in features.columns:
            raise _UsageError(f"--filter references unknown column {col!r}")
        return features[col].max()
    if text.lower() in ("true", "false"):
        return text.lower() == "true"
    if (text.startswith('"') and text.endswith('"')) or (text.startswith("'") and text.endswith("'")):
        return text[1:-1]
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return float(text)
    except ValueError:
        return text


def _parse_filter(expr: str, features: pd.DataFrame):
    match = _FILTER_RE.match(expr)
    if not match:
        raise _UsageError(f"--filter must look like '<column> <op> <literal>', got {expr!r}")
    col, op, literal = match.groups()
    if col not in features.columns:
        raise _UsageError(f"--filter references unknown column {col!r}")
    value = _parse_literal(literal, features)
    compare = _OPS[op]
    return lambda row: bool(compare(row[col], value))


def _cmd_summary(args) -> int:
    table = _load_panel(args)
    counts = n_obs(table)
    summary = index_summary(table)
    try:
        regular = str(index_regular(table)).lower()
    except PanelscopeError:
        regular = "n/a"
    print(
        f"regular={regular} keys={table.n_keys} rows={table.n_rows} "
        f"index: min={summary.min:g} q25={summary.q25:g} median={summary.median:g} "
        f"mean={summary.mean:g} q75={summary.q75:g} max={summary.max:g}"
    )
    if args.output:
        tally = counts["n_obs"].value_counts().sort_index().rename_axis("n_obs").rename("n_keys").reset_index()
        write_table_csv(tally, args.output)
    return 0


def _cmd_features(args) -> int:
    out = _require_output(args)
    table = _load_panel(args)
    features = compute_features(table, args.var, BUILTIN_SETS[args.set]())
    if args.filter:
        predicate = _parse_filter(args.filter, features)
        try:
            kept = filter_keys(table, features, predicate)
        except TypeError as exc:
            raise _UsageError(f"--filter comparison failed: {exc}") from None
        kept_keys = set(kept.frame[table.key_col])
        features = features[features[table.key_col].isin(kept_keys)].reset_index(drop=True)
        if args.join:
            joined = join_features(features, kept)
            write_table_csv(joined, out)
            print(f"wrote {joined.n_rows} joined rows for {joined.n_keys} keys to {out}")
            return 0
    write_table_csv(features, out)
    print(f"wrote {len(features)} feature rows x {features.shape[1]} columns to {out}")
    return 0


def _cmd_sample(args) -> int:
    out = _require_output(args)
    table = _load_panel(args)
    seed = _seed(args)
    if args.size is not None and args.frac is not None:
        raise _UsageError("--size and --frac are mutually exclusive")
    if args.size is not None or args.frac is not None:
        sampled = (
            sample_n_keys(table, args.size, seed)
            if args.size is not None
            else sample_frac_keys(table, args.frac, seed)
        )
        write_table_csv(sampled, out)
        print(f"sampled {sampled.n_keys} keys ({sampled.n_rows} rows) seed={seed} -> {out}")
        return 0
    alloc = allocate_facet_sample(table, args.n_per_facet, args.n_facets, seed)
    write_table_csv(alloc, out)
    print(f"allocated {len(alloc.assignments)} keys to {alloc.n_facets} facets seed={seed} -> {out}")
    return 0


def _cmd_strata(args) -> int:
    out = _require_output(args)
    table = _load_panel(args)
    seed = _seed(args)
    alloc = stratify_keys(
        table, args.n_strata, along=args.along, descending=args.descending,
        summary=args.along_summary, seed=seed,
    )
    write_table_csv(alloc, out)
    print(f"stratified {len(alloc.assignments)} keys into {alloc.n_facets} strata seed={seed} -> {out}")
    return 0


def _cmd_near(args) -> int:
    out = _require_output(args)
    if not Path(args.input).exists():
        raise _UsageError(f"--input file not found: {args.input}")
    features = read_delimited(args.input, args.delimiter)
    if args.key not in features.columns:
        raise _UsageError(f"--key column {args.key!r} not in {args.input}")
    near = keys_near(features, args.var, key=args.key)
    write_table_csv(near, out)
    print(f"wrote {len(near)} nearest-key rows for column {args.var!r} to {out}")
    return 0


def _cmd_slope(args) -> int:
    out = _require_output(args)
    table = _load_panel(args)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", DegenerateKeyWarning)
        if args.full:
            fits = key_slope(table, args.var)
            fitted = set(fits[fits.columns[0]])
            sub = table.with_frame(table.frame[table.frame[table.key_col].isin(fitted)])
            result = augment_fit(sub, fits)
            write_table_csv(result, out)
            n_fit = result.n_keys
        else:
            fits = key_rss(table, args.var)
            write_table_csv(fits, out)
            n_fit = len(fits)
    skipped = sum(1 for w in caught if issubclass(w.category, DegenerateKeyWarning))
    print(f"fit {n_fit} keys ({skipped} skipped as degenerate) -> {out}")
    return 0


def _cmd_plot(args) -> int:
    out = _require_output(args)
    table = _load_panel(args)
    seed = _seed(args)
    if args.alloc:
        alloc_df = read_delimited(args.alloc)
        if not {"key", "facet"} <= set(alloc_df.columns):
            raise _UsageError(f"--alloc file must have key,facet columns: {args.alloc}")
        assignments = dict(zip(alloc_df["key"], alloc_df["facet"].astype(int)))
        alloc = KeyAllocation(assignments, int(alloc_df["facet"].max()), seed)
    elif args.strata:
        alloc = stratify_keys(
            table, args.n_strata, along=args.along, descending=args.descending, seed=seed
        )
    else:
        alloc = allocate_facet_sample(table, args.n_per_facet, args.n_facets, seed)
    breaks = None
    if args.breaks:
        try:
            breaks = tuple(float(b) for b in args.breaks.split(","))
        except ValueError:
            raise _UsageError(f"--breaks must be comma-separated numbers, got {args.breaks!r}") from None
    highlight = tuple(args.highlight.split(",")) if args.highlight else ()
    spec = PlotSpec(
        y_col=args.y, x_col=args.x, width_px=args.width, height_px=args.height,
        n_cols=args.n_cols, title=args.title, breaks=breaks, highlight=highlight,
    )
    render_facets(table, alloc, spec, out)
    print(f"rendered {alloc.n_facets} facets, {len(alloc.assignments)} keys -> {out}")
    return 0


_COMMANDS = {
    "summary": _cmd_summary,
    "features": _cmd_features,
    "sample": _cmd_sample,
    "strata": _cmd_strata,
    "near": _cmd_near,
    "slope": _cmd_slope,
    "plot": _cmd_plot,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except UnknownColumnError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PanelscopeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
