"""
Finding the interesting individuals
===================================

A repeatable recipe for pulling unusual keys out of an overplotted mess:

  1. pick a feature worth caring about (say, maximum height, or
     "is it always increasing?")
  2. compute it — one value per key
  3. look at its distribution
  4. join the feature back onto the rows
  5. filter or sort keys by the feature
  6. draw the selected keys against the rest
"""

from pathlib import Path

import numpy as np

import panelscope as ps
from panelscope.datasets import load_heights

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

heights = load_heights()
heights = ps.filter_keys(ps.add_n_obs(heights), ps.n_obs(heights), lambda r: r["n_obs"] >= 5)

# steps 1-2: maximum height, and whether height only ever rises
feats = ps.compute_features(
    heights, "height_cm",
    {"max": lambda x: float(np.max(x)), "increase": ps.increasing},
)
print(feats.head(), "\n")

# step 3: a cheap look at the distribution
print("max height quartiles:", {k: round(v, 1) for k, v in ps.feat_five_num(feats["max"]).items()})
print("always increasing:", int(feats["increase"].sum()), "of", len(feats), "\n")

# step 4: back onto the rows
full = ps.join_features(feats, heights)

# step 5a: only the always-increasing countries
rising = ps.filter_keys(full, feats, lambda row: row["increase"])
print(f"always-increasing rows: {rising.n_rows} across {rising.n_keys} countries:",
      ", ".join(rising.keys()), "\n")

# step 5b: the tallest country on record
tallest = ps.filter_keys(full, feats, lambda row: row["max"] == feats["max"].max())
print("tallest:", tallest.keys()[0], "reaching", tallest.frame["height_cm"].max(), "cm\n")

# step 6: draw them against everything else (grey background, colour on top)
alloc = ps.KeyAllocation({key: 1 for key in heights.keys()}, n_facets=1, seed=0)
spec = ps.PlotSpec(
    y_col="height_cm", n_cols=1, title="Always-increasing countries highlighted",
    highlight=tuple(rising.keys()), width_px=900, height_px=600,
)
ps.render_facets(heights, alloc, spec, OUT / "increasing_highlighted.svg")
print("wrote", OUT / "increasing_highlighted.svg")
