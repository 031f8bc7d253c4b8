"""
Characterising every key with features
======================================

A feature collapses one key's sequence of values into a scalar or a small
record, giving one row per key. The built-in sets cover location
(five-number summary), spread, monotonicity, and the spacing of
consecutive differences; custom functions drop in alongside them.
"""

import numpy as np

import panelscope as ps
from panelscope.datasets import load_heights

heights = load_heights()
counts = ps.n_obs(heights)
heights = ps.filter_keys(ps.add_n_obs(heights), counts, lambda row: row["n_obs"] >= 5)

# --- a single feature: the minimum height per country ------------------------

lows = ps.compute_features(heights, "height_cm", {"min": lambda x: float(np.min(x))})
print(lows.head(), "\n")

# --- the five-number summary uses median-unbiased (type-8) quantiles ---------

five = ps.compute_features(heights, "height_cm", {"five": ps.feat_five_num})
print(five.head(10), "\n")

# --- spacing of the measurement years, summarised per country ----------------
# Afghanistan's gaps of 10/50/60/10 years show up as a wide spread.

gaps = ps.compute_features(heights, "year", {"d": ps.feat_diff_summary})
print(gaps.head(5), "\n")

# --- write your own features --------------------------------------------------

firsts = ps.FeatureSet(())
firsts = ps.register_feature(firsts, "first", lambda x: x[0])
firsts = ps.register_feature(firsts, "second", lambda x: x[1])
firsts = ps.register_feature(firsts, "third", lambda x: x[2])
print(ps.compute_features(heights, "height_cm", firsts).head(), "\n")

# --- or run everything at once ------------------------------------------------
# Six sets expand to 45 feature columns; repeated names pick up a positional
# suffix (min...1, min...6, ...) so nothing collides.

everything = ps.compute_features(heights, "height_cm", ps.feature_set_all())
print(f"all features: {everything.shape[0]} rows x {everything.shape[1]} columns")
print(list(everything.columns[:10]), "...")
