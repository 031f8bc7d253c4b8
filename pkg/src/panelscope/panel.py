"""Long-format panel tables: construction, validation, and book-keeping.

A panel holds repeated measurements of many individuals ("keys") over an
ordered numeric index (years, waves, ...). Rows are stored sorted by
(key, index) and every (key, index) pair must be unique; construction fails
on dirty data rather than silently deduplicating.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Mapping
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np
import pandas as pd

from .errors import (
    ColumnCollisionError,
    DuplicateKeyIndexError,
    EmptyTableError,
    KeyMismatchError,
    MissingColumnError,
    MissingValueError,
    NonNumericColumnError,
    TooFewIndexValuesError,
    UnknownColumnError,
)


class IndexSummary(NamedTuple):
    """Six-number spread of the distinct index values, in index units."""

    min: float
    q25: float
    median: float
    mean: float
    q75: float
    max: float


@dataclass(frozen=True)
class PanelTable:
    """An immutable long-format table with a designated key and index column.

    ``frame`` is sorted by (key, index) and validated at construction:
    both designated columns exist, are distinct, contain no missing cells,
    and no (key, index) pair repeats. Treat ``frame`` as read-only;
    every operation in this package returns a new table.
    """

    frame: pd.DataFrame = field(repr=False)
    key_col: str
    index_col: str
    regular: bool = False
    validate: bool = field(default=True, repr=False, compare=False)

    def __post_init__(self):
        if self.validate:
            _validate(self.frame, self.key_col, self.index_col)

    @property
    def value_cols(self) -> list[str]:
        return [c for c in self.frame.columns if c not in (self.key_col, self.index_col)]

    @property
    def n_rows(self) -> int:
        return len(self.frame)

    @property
    def n_keys(self) -> int:
        return self.frame[self.key_col].nunique()

    def keys(self) -> list:
        """Distinct keys in sorted order."""
        return sorted(self.frame[self.key_col].unique().tolist())

    def key_rows(self, key) -> pd.DataFrame:
        """All rows of one key, in index order."""
        return self.frame[self.frame[self.key_col] == key]

    def with_frame(self, frame: pd.DataFrame) -> "PanelTable":
        """New table around ``frame``, keeping key/index/regular unchanged.

        Meant for frames derived from this (already valid) table by
        dropping rows or adding columns, which cannot break the panel
        invariants, so validation is skipped.
        """
        return PanelTable(
            frame.reset_index(drop=True), self.key_col, self.index_col, self.regular,
            validate=False,
        )


def _validate(df: pd.DataFrame, key_col: str, index_col: str) -> None:
    if key_col == index_col:
        raise MissingColumnError(f"key and index must be distinct columns, both are {key_col!r}")
    for col in (key_col, index_col):
        if col not in df.columns:
            raise MissingColumnError(f"column {col!r} not found (have {list(df.columns)})")
    if df[key_col].isna().any():
        raise MissingValueError(f"missing value in key column {key_col!r}")
    if df[index_col].isna().any():
        raise MissingValueError(f"missing value in index column {index_col!r}")
    if not pd.api.types.is_numeric_dtype(df[index_col]) or pd.api.types.is_bool_dtype(df[index_col]):
        raise NonNumericColumnError(
            f"index column {index_col!r} must be numeric; convert dates to numeric offsets first"
        )
    dup = df.duplicated(subset=[key_col, index_col])
    if dup.any():
        row = df[dup].iloc[0]
        raise DuplicateKeyIndexError(row[key_col], row[index_col])


def build_panel(
    rows: Iterable[Mapping] | pd.DataFrame,
    key_col: str,
    index_col: str,
    regular: bool = False,
) -> PanelTable:
    """Build a validated PanelTable from records or a DataFrame.

    Rows are sorted by (key, index). Construction fails with
    DuplicateKeyIndexError when a (key, index) pair repeats — a sign of
    dirty data that should be resolved before analysis — and with
    MissingColumnError when a designated column is absent.
    """
    df = rows.copy() if isinstance(rows, pd.DataFrame) else pd.DataFrame(list(rows))
    if df.empty:
        raise EmptyTableError("no rows supplied")
    for col in (key_col, index_col):
        if col not in df.columns:
            raise MissingColumnError(f"column {col!r} not found (have {list(df.columns)})")
    df = df.sort_values([key_col, index_col], kind="stable").reset_index(drop=True)
    return PanelTable(df, key_col, index_col, regular)


def _distinct_index(table: PanelTable) -> np.ndarray:
    return np.unique(np.asarray(table.frame[table.index_col], dtype=float))


def index_regular(table: PanelTable) -> bool:
    """True iff the sorted distinct index values are evenly spaced."""
    values = _distinct_index(table)
    if len(values) < 2:
        raise TooFewIndexValuesError("need at least 2 distinct index values")
    gaps = np.diff(values)
    return bool(np.all(gaps == gaps[0]))


def index_summary(table: PanelTable) -> IndexSummary:
    """Six-number summary (min, q25, median, mean, q75, max) of the distinct index values.

    Quartiles interpolate linearly between order statistics, the same rule
    base R's ``summary()`` applies, so printed reference values reproduce.
    """
    if table.n_rows == 0:
        raise EmptyTableError("empty table")
    values = _distinct_index(table)
    q25, med, q75 = np.quantile(values, [0.25, 0.5, 0.75])
    return IndexSummary(
        float(values.min()), float(q25), float(med), float(values.mean()), float(q75), float(values.max())
    )


def n_obs(table: PanelTable) -> pd.DataFrame:
    """One row per key with its observation count, as a feature table."""
    if table.n_rows == 0:
        raise EmptyTableError("empty table")
    counts = (
        table.frame.groupby(table.key_col, sort=True)
        .size()
        .rename("n_obs")
        .reset_index()
    )
    return counts


def add_n_obs(table: PanelTable) -> PanelTable:
    """Same rows plus an ``n_obs`` column, constant within each key."""
    if "n_obs" in table.frame.columns:
        raise ColumnCollisionError("column 'n_obs' already exists")
    if table.n_rows == 0:
        raise EmptyTableError("empty table")
    counts = table.frame.groupby(table.key_col)[table.key_col].transform("size")
    df = table.frame.copy()
    df["n_obs"] = counts.astype("int64")
    return table.with_frame(df)


def filter_keys(
    table: PanelTable,
    features: pd.DataFrame,
    predicate: Callable[[Mapping], bool],
) -> PanelTable:
    """Keep all rows of exactly the keys whose feature row satisfies ``predicate``.

    ``features`` is a one-row-per-key table (first column = key) and the
    predicate receives each row as a plain dict. Row order of the panel is
    preserved.
    """
    key_col = features.columns[0]
    keep = []
    for row in features.to_dict("records"):
        try:
            ok = predicate(row)
        except KeyError as exc:
            raise UnknownColumnError(f"predicate references unknown column {exc.args[0]!r}") from exc
        if ok:
            keep.append(row[key_col])
    mask = table.frame[table.key_col].isin(set(keep))
    return table.with_frame(table.frame[mask])


def join_features(features: pd.DataFrame, table: PanelTable) -> PanelTable:
    """Join a one-row-per-key feature table back onto the panel rows.

    The output holds every panel row whose key appears in ``features``,
    with the feature columns attached (constant within key). Feature keys
    absent from the panel raise KeyMismatchError.
    """
    key_col = features.columns[0]
    feature_keys = set(features[key_col])
    panel_keys = set(table.frame[table.key_col])
    missing = feature_keys - panel_keys
    if missing:
        raise KeyMismatchError(f"feature keys not in panel: {sorted(missing)[:5]}")
    merged = features.merge(
        table.frame.rename(columns={table.key_col: key_col}) if table.key_col != key_col else table.frame,
        on=key_col,
        how="left",
    )
    merged = merged.sort_values([key_col, table.index_col], kind="stable").reset_index(drop=True)
    return PanelTable(merged, key_col, table.index_col, table.regular)
