"""Per-key features: summarise each key's value sequence into one row.

A feature maps one key's values (in index order) to a scalar or a small
named record. ``compute_features`` applies a FeatureSet to every key and
returns one row per key. Quantile-based features use the Hyndman-Fan
type-8 (median-unbiased) sample quantile throughout.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Mapping, Sequence
from dataclasses import dataclass

import numpy as np
import pandas as pd

from .errors import (
    AllMissingForKeyError,
    DuplicateNameError,
    EmptyInputError,
    NonFiniteInputError,
    NonNumericColumnError,
    TooFewValuesError,
    UnknownColumnError,
)
from .panel import PanelTable

MAD_SCALE = 1.4826  # normal-consistency constant for the median absolute deviation

#: Field names that expand verbatim as columns; anything else is prefixed
#: with its entry name to stay unambiguous.
RESERVED_FIELDS = frozenset(
    {
        "min", "q25", "med", "q75", "max",
        "range_diff", "iqr", "var", "sd", "mad",
        "increase", "decrease", "unvary", "monotonic",
        "diff_min", "diff_q25", "diff_median", "diff_mean", "diff_q75",
        "diff_max", "diff_var", "diff_sd", "diff_iqr",
    }
)


def quantile_type8(values: Sequence[float] | np.ndarray, p: float) -> float:
    """Hyndman-Fan type-8 sample quantile of ``values`` at probability ``p``.

    Uses h = (n + 1/3)p + 1/3, clamped to [1, n], interpolating linearly
    between the order statistics either side of h. p=0 returns the minimum
    and p=1 the maximum.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must be in [0, 1], got {p}")
    x = np.asarray(values, dtype=float)
    if x.size == 0:
        raise EmptyInputError("cannot take the quantile of no values")
    if not np.all(np.isfinite(x)):
        raise NonFiniteInputError("values must be finite")
    x = np.sort(x)
    n = x.size
    h = (n + 1.0 / 3.0) * p + 1.0 / 3.0
    h = min(max(h, 1.0), float(n))
    j = int(math.floor(h))
    g = h - j
    if j >= n:
        return float(x[n - 1])
    return float(x[j - 1] + g * (x[j] - x[j - 1]))


def _clean(values) -> np.ndarray:
    x = np.asarray(values, dtype=float)
    return x[~np.isnan(x)]


def _require(x: np.ndarray, n: int, what: str) -> None:
    if x.size == 0:
        raise EmptyInputError(f"{what}: no values left after dropping missing")
    if x.size < n:
        raise TooFewValuesError(f"{what}: need at least {n} values, got {x.size}")


def feat_five_num(values) -> dict[str, float]:
    """Five-number summary: min, q25, med, q75, max (type-8 quantiles)."""
    x = _clean(values)
    _require(x, 1, "five_num")
    return {
        "min": float(x.min()),
        "q25": quantile_type8(x, 0.25),
        "med": quantile_type8(x, 0.50),
        "q75": quantile_type8(x, 0.75),
        "max": float(x.max()),
    }


def feat_ranges(values) -> dict[str, float]:
    """min, max, range difference, and interquartile range."""
    x = _clean(values)
    _require(x, 1, "ranges")
    lo, hi = float(x.min()), float(x.max())
    return {
        "min": lo,
        "max": hi,
        "range_diff": hi - lo,
        "iqr": quantile_type8(x, 0.75) - quantile_type8(x, 0.25),
    }


def feat_spread(values) -> dict[str, float]:
    """Sample variance, standard deviation, scaled MAD, and IQR."""
    x = _clean(values)
    _require(x, 2, "spread")
    var = float(np.var(x, ddof=1))
    med = quantile_type8(x, 0.5)
    return {
        "var": var,
        "sd": math.sqrt(var),
        "mad": quantile_type8(np.abs(x - med), 0.5) * MAD_SCALE,
        "iqr": quantile_type8(x, 0.75) - quantile_type8(x, 0.25),
    }


def increasing(values) -> bool:
    """True iff every consecutive difference is strictly positive."""
    x = _clean(values)
    _require(x, 2, "increasing")
    return bool(np.all(np.diff(x) > 0))


def decreasing(values) -> bool:
    """True iff every consecutive difference is strictly negative."""
    x = _clean(values)
    _require(x, 2, "decreasing")
    return bool(np.all(np.diff(x) < 0))


def unvarying(values) -> bool:
    """True iff every consecutive difference is zero."""
    x = _clean(values)
    _require(x, 2, "unvarying")
    return bool(np.all(np.diff(x) == 0))


def feat_monotonic(values) -> dict[str, bool]:
    """Whether the sequence always increases, decreases, or never varies."""
    x = _clean(values)
    _require(x, 2, "monotonic")
    d = np.diff(x)
    inc = bool(np.all(d > 0))
    dec = bool(np.all(d < 0))
    return {
        "increase": inc,
        "decrease": dec,
        "unvary": bool(np.all(d == 0)),
        "monotonic": inc or dec,
    }


def feat_diff_summary(values) -> dict[str, float]:
    """Summaries of the consecutive differences of the sequence.

    Five-number summary plus mean, sample variance, standard deviation,
    and IQR of the differences. With a single difference the variance and
    standard deviation are NaN (sample variance needs two).
    """
    x = _clean(values)
    _require(x, 2, "diff_summary")
    d = np.diff(x)
    var = float(np.var(d, ddof=1)) if d.size >= 2 else float("nan")
    return {
        "diff_min": float(d.min()),
        "diff_q25": quantile_type8(d, 0.25),
        "diff_median": quantile_type8(d, 0.5),
        "diff_mean": float(d.mean()),
        "diff_q75": quantile_type8(d, 0.75),
        "diff_max": float(d.max()),
        "diff_var": var,
        "diff_sd": math.sqrt(var) if var == var else float("nan"),
        "diff_iqr": quantile_type8(d, 0.75) - quantile_type8(d, 0.25),
    }


def feat_all(values) -> dict[str, float]:
    """Every numeric feature in one record: five-number summary, ranges,
    spread, and difference summaries (19 fields)."""
    out = dict(feat_five_num(values))
    out.update(feat_ranges(values))
    out.update(feat_spread(values))
    out.update(feat_diff_summary(values))
    return out


@dataclass(frozen=True)
class FeatureSet:
    """An ordered collection of named feature functions.

    Each function maps a value sequence to a scalar or a named record;
    record fields expand into columns when the set is applied.
    """

    entries: tuple[tuple[str, Callable], ...]

    def __post_init__(self):
        names = [name for name, _ in self.entries]
        if len(names) != len(set(names)):
            raise DuplicateNameError(f"duplicate feature names in {names}")

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def names(self) -> list[str]:
        return [name for name, _ in self.entries]


def register_feature(set_: FeatureSet, name: str, fn: Callable) -> FeatureSet:
    """Return a new FeatureSet with ``name -> fn`` appended; the original is unchanged."""
    if name in set_.names():
        raise DuplicateNameError(f"feature {name!r} already registered")
    return FeatureSet(set_.entries + ((name, fn),))


def feature_set(features: FeatureSet | Mapping[str, Callable]) -> FeatureSet:
    """Coerce a mapping of name -> function into a FeatureSet."""
    if isinstance(features, FeatureSet):
        return features
    return FeatureSet(tuple(features.items()))


def feature_set_all() -> FeatureSet:
    """The six built-in sets in one: five_num, ranges, spread, monotonic,
    diff_summary, and the combined numeric record."""
    return FeatureSet(
        (
            ("five_num", feat_five_num),
            ("ranges", feat_ranges),
            ("spread", feat_spread),
            ("monotonic", feat_monotonic),
            ("diff_summary", feat_diff_summary),
            ("all", feat_all),
        )
    )


#: Named feature sets selectable from the command line.
BUILTIN_SETS: dict[str, Callable[[], FeatureSet]] = {
    "five_num": lambda: FeatureSet((("five_num", feat_five_num),)),
    "ranges": lambda: FeatureSet((("ranges", feat_ranges),)),
    "spread": lambda: FeatureSet((("spread", feat_spread),)),
    "monotonic": lambda: FeatureSet((("monotonic", feat_monotonic),)),
    "diff_summary": lambda: FeatureSet((("diff_summary", feat_diff_summary),)),
    "all": feature_set_all,
}


def _expand_row(entries, values) -> list[tuple[str, object]]:
    """Apply every entry to one key's values, expanding records into
    (column, value) pairs. Colliding names are kept; they are suffixed later."""
    out: list[tuple[str, object]] = []
    for name, fn in entries:
        result = fn(values)
        if isinstance(result, Mapping):
            for field_name, field_value in result.items():
                col = field_name if field_name in RESERVED_FIELDS else f"{name}_{field_name}"
                out.append((col, field_value))
        else:
            out.append((name, result))
    return out


def _dedupe_columns(columns: list[str]) -> list[str]:
    """Suffix colliding column names with their 1-based position (``name...k``)."""
    counts: dict[str, int] = {}
    for col in columns:
        counts[col] = counts.get(col, 0) + 1
    return [
        f"{col}...{pos}" if counts[col] > 1 else col
        for pos, col in enumerate(columns, start=1)
    ]


def compute_features(
    table: PanelTable,
    var: str,
    features: FeatureSet | Mapping[str, Callable],
) -> pd.DataFrame:
    """One row per key: each feature applied to that key's ``var`` values in index order.

    Missing values are dropped before every feature; a key with no
    remaining values raises AllMissingForKeyError. Record-valued features
    expand into one column per field, and name collisions across entries
    are disambiguated with a positional ``...k`` suffix.
    """
    if var not in table.frame.columns:
        raise UnknownColumnError(f"no column {var!r} in panel")
    if not pd.api.types.is_numeric_dtype(table.frame[var]):
        raise NonNumericColumnError(f"column {var!r} is not numeric")
    entries = feature_set(features).entries

    rows = []
    keys = []
    for key, group in table.frame.groupby(table.key_col, sort=True):
        values = _clean(group[var])
        if values.size == 0:
            raise AllMissingForKeyError(key)
        rows.append(_expand_row(entries, values))
        keys.append(key)

    columns = _dedupe_columns([name for name, _ in rows[0]])
    body = pd.DataFrame([[value for _, value in row] for row in rows], columns=columns)
    body.insert(0, table.key_col, keys)
    return body
