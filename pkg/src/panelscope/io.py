"""Delimited-text ingestion and serialization.

Reading infers each column's type in the order integer -> real -> boolean
-> text, turning the configured NA tokens into missing cells. Writing
renders reals with up to six significant digits, booleans as true/false,
and missing cells as empty fields, so feature tables round-trip.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
import pandas as pd

from .errors import DuplicateKeyIndexError, EmptyTableError, ParseError
from .panel import PanelTable, build_panel
from .sampling import KeyAllocation

DEFAULT_NA_TOKENS = frozenset({"", "NA"})


@dataclass(frozen=True)
class IngestConfig:
    """How to read a delimited file into a panel."""

    path: str | Path
    key_col: str
    index_col: str
    regular: bool = False
    delimiter: str = ","
    na_tokens: frozenset[str] = DEFAULT_NA_TOKENS

    def __post_init__(self):
        if self.key_col == self.index_col:
            raise ValueError("key_col and index_col must differ")
        if len(self.delimiter) != 1:
            raise ValueError("delimiter must be a single character")


def _parse_cell(token: str, na_tokens) -> str | None:
    return None if token in na_tokens else token


def _infer_column(raw: list[str | None]):
    present = [v for v in raw if v is not None]
    has_missing = len(present) < len(raw)
    if not present:
        return [np.nan] * len(raw)

    def _try(cast):
        try:
            return [cast(v) for v in present]
        except ValueError:
            return None

    as_int = _try(int)
    if as_int is not None:
        if has_missing:
            return [np.nan if v is None else float(v) for v in raw]
        return [int(v) for v in raw]
    as_float = _try(float)
    if as_float is not None:
        return [np.nan if v is None else float(v) for v in raw]
    lowered = {v.lower() for v in present}
    if lowered <= {"true", "false"} and not has_missing:
        return [v.lower() == "true" for v in raw]
    return [np.nan if v is None else v for v in raw]


def read_delimited(
    path: str | Path,
    delimiter: str = ",",
    na_tokens=DEFAULT_NA_TOKENS,
) -> pd.DataFrame:
    """Read a headered delimited file with type inference into a DataFrame."""
    path = Path(path)
    with path.open(newline="", encoding="utf-8") as handle:
        reader = csv.reader(handle, delimiter=delimiter)
        try:
            header = next(reader)
        except StopIteration:
            raise EmptyTableError(f"{path}: file is empty") from None
        rows = []
        for line_no, record in enumerate(reader, start=2):
            if not record:
                continue
            if len(record) != len(header):
                raise ParseError(
                    f"expected {len(header)} fields, got {len(record)}", line=line_no
                )
            rows.append([_parse_cell(tok, na_tokens) for tok in record])
    if not rows:
        raise EmptyTableError(f"{path}: no data rows")
    columns = {
        name: _infer_column([row[i] for row in rows]) for i, name in enumerate(header)
    }
    return pd.DataFrame(columns)


def read_panel_csv(config: IngestConfig) -> PanelTable:
    """Read and validate a panel per ``config``; duplicate (key, index)
    pairs fail with the offending line number attached."""
    df = read_delimited(config.path, config.delimiter, config.na_tokens)
    for col in (config.key_col, config.index_col):
        if col not in df.columns:
            raise ParseError(f"{config.path}: missing column {col!r}")
    seen: dict[tuple, int] = {}
    for offset, (k, i) in enumerate(zip(df[config.key_col], df[config.index_col])):
        pair = (k, i)
        if pair in seen:
            raise DuplicateKeyIndexError(k, i, line=offset + 2)
        seen[pair] = offset + 2
    return build_panel(df, config.key_col, config.index_col, config.regular)


def _format_cell(value) -> str:
    if value is None or (isinstance(value, float) and np.isnan(value)):
        return ""
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format(float(value), ".6g")
    return str(value)


def write_table_csv(table, path: str | Path) -> None:
    """Write a feature table, nearest-keys table, key allocation, or panel to CSV.

    Output is UTF-8 with LF line endings; reals carry up to six
    significant digits.
    """
    if isinstance(table, KeyAllocation):
        df = table.to_frame()
    elif isinstance(table, PanelTable):
        df = table.frame
    else:
        df = table
    path = Path(path)
    with path.open("w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(df.columns)
        for record in df.itertuples(index=False):
            writer.writerow([_format_cell(v) for v in record])
