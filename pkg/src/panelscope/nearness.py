"""Per-key linear trends and keys nearest to summary statistics.

``key_slope`` fits an ordinary least-squares line to each key,
``augment_fit`` attaches predictions, residuals, and the per-key residual
sum of squares, and ``keys_near`` finds the "stereotype" keys whose value
sits closest to each population statistic.
"""

from __future__ import annotations

import warnings
from collections.abc import Callable, Mapping

import numpy as np
import pandas as pd

from .errors import (
    DegenerateKeyWarning,
    EmptyFeaturesError,
    MissingFitError,
    NonNumericColumnError,
    NOutOfRangeError,
    UnknownColumnError,
)
from .features import FeatureSet, feature_set, quantile_type8
from .panel import PanelTable

#: Default statistics a key can be stereotypical of.
FIVE_NUM_STATS = FeatureSet(
    (
        ("min", lambda x: float(np.min(x))),
        ("q25", lambda x: quantile_type8(x, 0.25)),
        ("med", lambda x: quantile_type8(x, 0.50)),
        ("q75", lambda x: quantile_type8(x, 0.75)),
        ("max", lambda x: float(np.max(x))),
    )
)


def _check_column(df: pd.DataFrame, col: str) -> None:
    if col not in df.columns:
        raise UnknownColumnError(f"no column {col!r} (have {list(df.columns)})")
    if not pd.api.types.is_numeric_dtype(df[col]):
        raise NonNumericColumnError(f"column {col!r} is not numeric")


def key_slope(table: PanelTable, response: str, predictor: str | None = None) -> pd.DataFrame:
    """Ordinary least-squares intercept and slope of ``response`` on ``predictor``, per key.

    ``predictor`` defaults to the index column. Keys with fewer than two
    distinct predictor values cannot be fit; they are dropped from the
    output with a DegenerateKeyWarning. Rows with a missing response or
    predictor are ignored.
    """
    predictor = table.index_col if predictor is None else predictor
    _check_column(table.frame, response)
    _check_column(table.frame, predictor)

    rows = []
    for key, group in table.frame.groupby(table.key_col, sort=True):
        x = np.asarray(group[predictor], dtype=float)
        y = np.asarray(group[response], dtype=float)
        ok = ~(np.isnan(x) | np.isnan(y))
        x, y = x[ok], y[ok]
        if np.unique(x).size < 2:
            warnings.warn(f"key {key!r} has < 2 distinct predictor values; skipped", DegenerateKeyWarning)
            continue
        sxx = float(np.sum((x - x.mean()) ** 2))
        sxy = float(np.sum((x - x.mean()) * (y - y.mean())))
        slope = sxy / sxx
        rows.append({table.key_col: key, "intercept": float(y.mean() - slope * x.mean()), "slope": slope})

    fits = pd.DataFrame(rows, columns=[table.key_col, "intercept", "slope"])
    fits.attrs["response"] = response
    fits.attrs["predictor"] = predictor
    return fits


def augment_fit(
    table: PanelTable,
    fits: pd.DataFrame,
    response: str | None = None,
    predictor: str | None = None,
) -> PanelTable:
    """Attach ``pred``, ``res``, and per-key ``rss`` columns from fitted lines.

    ``fits`` is the key/intercept/slope table from ``key_slope``; the
    response and predictor columns default to the ones it was fit with.
    Every key in the panel must have a fit.
    """
    response = response or fits.attrs.get("response")
    predictor = predictor or fits.attrs.get("predictor")
    if response is None or predictor is None:
        raise UnknownColumnError("response/predictor not recorded on fits; pass them explicitly")
    _check_column(table.frame, response)
    _check_column(table.frame, predictor)

    key_col = fits.columns[0]
    by_key = fits.set_index(key_col)
    missing = set(table.frame[table.key_col]) - set(by_key.index)
    if missing:
        raise MissingFitError(f"no fit for keys: {sorted(missing)[:5]}")

    df = table.frame.copy()
    intercept = df[table.key_col].map(by_key["intercept"]).to_numpy(dtype=float)
    slope = df[table.key_col].map(by_key["slope"]).to_numpy(dtype=float)
    df["pred"] = intercept + slope * df[predictor].to_numpy(dtype=float)
    df["res"] = df[response].to_numpy(dtype=float) - df["pred"]
    rss = df.assign(_sq=df["res"] ** 2).groupby(table.key_col)["_sq"].transform("sum")
    df["rss"] = rss
    return table.with_frame(df)


def key_rss(table: PanelTable, response: str, predictor: str | None = None) -> pd.DataFrame:
    """One row per fittable key with intercept, slope, and residual sum of squares."""
    fits = key_slope(table, response, predictor)
    fitted_keys = set(fits[fits.columns[0]])
    sub = table.with_frame(table.frame[table.frame[table.key_col].isin(fitted_keys)])
    augmented = augment_fit(sub, fits)
    rss = (
        augmented.frame.groupby(table.key_col, sort=True)["rss"].first().rename("rss").reset_index()
    )
    out = fits.merge(rss, on=fits.columns[0])
    out.attrs.update(fits.attrs)
    return out


def keys_near(
    features: pd.DataFrame,
    var: str,
    stats: FeatureSet | Mapping[str, Callable] | None = None,
    key: str | None = None,
) -> pd.DataFrame:
    """Keys whose ``var`` value is nearest to each summary statistic.

    ``features`` has one row per key (first column = key by default).
    For every statistic (the five-number summary unless ``stats`` is
    given), the statistic is computed over the whole column and every key
    attaining the minimum absolute difference is returned — ties are all
    kept, and one key may appear under several statistics.
    """
    if len(features) == 0:
        raise EmptyFeaturesError("no feature rows")
    key = key or features.columns[0]
    if key not in features.columns:
        raise UnknownColumnError(f"no key column {key!r}")
    _check_column(features, var)
    entries = FIVE_NUM_STATS if stats is None else feature_set(stats)

    values = features[var].to_numpy(dtype=float)
    keys = features[key].to_numpy()
    rows = []
    for stat_name, fn in entries:
        stat_value = float(fn(values))
        diffs = np.abs(values - stat_value)
        best = diffs.min()
        for i in np.flatnonzero(diffs == best):
            rows.append(
                {
                    key: keys[i],
                    var: float(values[i]),
                    "stat": stat_name,
                    "stat_value": stat_value,
                    "stat_diff": float(diffs[i]),
                }
            )
    return pd.DataFrame(rows, columns=[key, var, "stat", "stat_value", "stat_diff"])


def top_n_keys(features: pd.DataFrame, var: str, n: int) -> pd.DataFrame:
    """The ``n`` keys with the largest ``var`` (or smallest for negative ``n``).

    Ties at the boundary are all included, so the result can hold more
    than ``|n|`` rows.
    """
    if len(features) == 0:
        raise EmptyFeaturesError("no feature rows")
    _check_column(features, var)
    if n == 0 or abs(n) > len(features):
        raise NOutOfRangeError(f"n must satisfy 0 < |n| <= {len(features)}, got {n}")
    if n > 0:
        return features.nlargest(n, var, keep="all").reset_index(drop=True)
    return features.nsmallest(-n, var, keep="all").reset_index(drop=True)
