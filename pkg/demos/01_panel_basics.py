"""
Panel construction and book-keeping
===================================

A panel is a long-format table of many individuals ("keys") measured
repeatedly over an ordered index. This walk-through builds one from the
bundled heights data and runs the first-look checks: is the index
regularly spaced, how are measurements distributed, and which keys have
enough observations to be worth characterising.
"""

import panelscope as ps
from panelscope.datasets import load_heights

# --- construction validates the key/index contract --------------------------
# Every (key, index) pair must identify a single row; dirty data fails fast.

heights = load_heights()
print(f"{heights.n_keys} countries, {heights.n_rows} rows")
print(heights.frame.head(), "\n")

try:
    ps.build_panel(
        [{"country": "A", "year": 1990, "h": 170.0},
         {"country": "A", "year": 1990, "h": 171.0}],
        key_col="country", index_col="year",
    )
except ps.DuplicateKeyIndexError as err:
    print("duplicate rows are rejected:", err, "\n")

# --- how is the index spaced? ------------------------------------------------
# Pooled over all countries the decades line up on a regular 10-year grid,
# even though each individual country is measured irregularly.

print("index regular:", ps.index_regular(heights))
print("index summary:", ps.index_summary(heights), "\n")

# --- observation counts ------------------------------------------------------
# n_obs gives one row per key; add_n_obs attaches the count to every row so
# sparse keys can be filtered out. Five observations is a reasonable floor
# for talking about a trajectory.

counts = ps.n_obs(heights)
print(counts.head(10), "\n")

counted = ps.add_n_obs(heights)
kept = ps.filter_keys(counted, counts, lambda row: row["n_obs"] >= 5)
dropped = heights.n_keys - kept.n_keys
print(f"keeping keys with >= 5 observations: {kept.n_keys} kept, {dropped} dropped")
print("tally of observation counts:")
print(ps.n_obs(kept)["n_obs"].value_counts().sort_index().head(10))
