"""Random key sampling and stratification into facets.

All randomness flows through numpy's seedable PCG64 generator
(``np.random.default_rng``), so identical inputs and seed reproduce the
same selection in any process. The seed used is recorded on every
KeyAllocation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import pandas as pd

from .errors import (
    FracOutOfRangeError,
    NotEnoughKeysError,
    SizeExceedsKeysError,
    TooManyStrataError,
    UnknownColumnError,
)
from .panel import PanelTable

DEFAULT_SEED = 42

_ALONG_SUMMARIES = {
    "first": lambda x: float(x[0]),
    "mean": lambda x: float(np.mean(x)),
    "median": lambda x: float(np.median(x)),
}


@dataclass(frozen=True)
class KeyAllocation:
    """A mapping of each selected key to a facet id in 1..n_facets."""

    assignments: dict
    n_facets: int
    seed: int

    def keys(self) -> list:
        return sorted(self.assignments)

    def facet_keys(self, facet: int) -> list:
        return sorted(k for k, f in self.assignments.items() if f == facet)

    def facet_sizes(self) -> dict[int, int]:
        sizes = {f: 0 for f in range(1, self.n_facets + 1)}
        for f in self.assignments.values():
            sizes[f] += 1
        return sizes

    def to_frame(self) -> pd.DataFrame:
        """(key, facet) rows, ordered by facet then key, for CSV output."""
        rows = sorted(self.assignments.items(), key=lambda kv: (kv[1], str(kv[0])))
        return pd.DataFrame(rows, columns=["key", "facet"])


def sample_n_keys(table: PanelTable, size: int, seed: int = DEFAULT_SEED) -> PanelTable:
    """Keep all rows of ``size`` distinct keys drawn uniformly without replacement."""
    keys = table.keys()
    if size < 1 or size > len(keys):
        raise SizeExceedsKeysError(f"size {size} not in 1..{len(keys)}")
    rng = np.random.default_rng(seed)
    chosen = set(rng.choice(len(keys), size=size, replace=False).tolist())
    chosen_keys = {keys[i] for i in chosen}
    return table.with_frame(table.frame[table.frame[table.key_col].isin(chosen_keys)])


def sample_frac_keys(table: PanelTable, frac: float, seed: int = DEFAULT_SEED) -> PanelTable:
    """Sample ``round(frac * n_keys)`` keys (at least one)."""
    if not 0 < frac <= 1:
        raise FracOutOfRangeError(f"frac must be in (0, 1], got {frac}")
    n = table.n_keys
    size = max(1, int(np.floor(frac * n + 0.5)))
    return sample_n_keys(table, size, seed)


def _deal_sizes(n_keys: int, n_facets: int) -> list[int]:
    # earlier facets receive the extras, sizes differ by at most one
    base, extra = divmod(n_keys, n_facets)
    return [base + 1 if i < extra else base for i in range(n_facets)]


def stratify_keys(
    table: PanelTable,
    n_strata: int = 12,
    along: str | None = None,
    descending: bool = False,
    summary: str = "first",
    seed: int = DEFAULT_SEED,
) -> KeyAllocation:
    """Partition every key into one of ``n_strata`` strata.

    Without ``along`` the keys are randomly permuted and dealt out so
    stratum sizes differ by at most one. With ``along`` each key is
    reduced to a scalar (its first value of that column by default, or
    ``mean``/``median``), keys are sorted by that scalar, and contiguous
    runs are cut into strata: stratum 1 holds the smallest summaries
    (earliest-starting keys when along is the index), or the largest with
    ``descending=True``.
    """
    keys = table.keys()
    if n_strata < 1 or n_strata > len(keys):
        raise TooManyStrataError(f"n_strata {n_strata} not in 1..{len(keys)}")
    if along is None:
        rng = np.random.default_rng(seed)
        order = [keys[i] for i in rng.permutation(len(keys))]
    else:
        if along not in table.frame.columns:
            raise UnknownColumnError(f"no column {along!r} in panel")
        if summary not in _ALONG_SUMMARIES:
            raise ValueError(f"summary must be one of {sorted(_ALONG_SUMMARIES)}")
        reduce = _ALONG_SUMMARIES[summary]
        scored = []
        for key, group in table.frame.groupby(table.key_col, sort=True):
            values = np.asarray(group[along], dtype=float)
            values = values[~np.isnan(values)]
            if values.size == 0:
                raise UnknownColumnError(f"key {key!r} has no values of {along!r}")
            scored.append((reduce(values), key))
        scored.sort(key=lambda sk: (-sk[0] if descending else sk[0], str(sk[1])))
        order = [key for _, key in scored]

    assignments = {}
    start = 0
    for facet, size in enumerate(_deal_sizes(len(order), n_strata), start=1):
        for key in order[start : start + size]:
            assignments[key] = facet
        start += size
    return KeyAllocation(assignments, n_strata, seed)


def allocate_facet_sample(
    table: PanelTable,
    n_per_facet: int = 3,
    n_facets: int = 12,
    seed: int = DEFAULT_SEED,
) -> KeyAllocation:
    """Sample ``n_per_facet * n_facets`` keys and deal exactly ``n_per_facet`` to each facet."""
    keys = table.keys()
    needed = n_per_facet * n_facets
    if n_per_facet < 1 or n_facets < 1 or needed > len(keys):
        raise NotEnoughKeysError(f"need {needed} keys, table has {len(keys)}")
    rng = np.random.default_rng(seed)
    picked = [keys[i] for i in rng.choice(len(keys), size=needed, replace=False)]
    assignments = {
        key: facet
        for facet in range(1, n_facets + 1)
        for key in picked[(facet - 1) * n_per_facet : facet * n_per_facet]
    }
    return KeyAllocation(assignments, n_facets, seed)
