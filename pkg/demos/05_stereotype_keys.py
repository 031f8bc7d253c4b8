"""
Stereotype keys: who best represents a statistic?
=================================================

Fit a straight line to every key, score each fit by its residual sum of
squares, then ask: which keys sit nearest the minimum, quartiles, median,
and maximum of that score? Those are the stereotypes — the cleanest
linear growers at one end, the most erratic series at the other.
"""

from pathlib import Path

import panelscope as ps
from panelscope.datasets import load_heights

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

heights = load_heights()
heights = ps.filter_keys(ps.add_n_obs(heights), ps.n_obs(heights), lambda r: r["n_obs"] >= 5)

# --- one least-squares line per country ---------------------------------------

fits = ps.key_slope(heights, "height_cm")
print(fits.head(), "\n")

augmented = ps.augment_fit(heights, fits)
print(augmented.frame[["country", "year", "height_cm", "pred", "res", "rss"]].head(), "\n")

# --- per-key fit quality, and the keys nearest its five-number summary --------

scores = ps.key_rss(heights, "height_cm")
near = ps.keys_near(scores, "rss")
print(near, "\n")

# --- the three best- and worst-fit countries -----------------------------------

best3 = ps.top_n_keys(scores, "rss", -3)
worst3 = ps.top_n_keys(scores, "rss", 3)
print("lowest rss:", ", ".join(best3["country"]))
print("highest rss:", ", ".join(worst3["country"]), "\n")

# --- draw each stereotype in its own facet -------------------------------------

stereotypes = near["country"].tolist()
alloc = ps.KeyAllocation(
    {key: i + 1 for i, key in enumerate(dict.fromkeys(stereotypes))},
    n_facets=len(dict.fromkeys(stereotypes)), seed=0,
)
spec = ps.PlotSpec(y_col="height_cm", n_cols=5, width_px=1500, height_px=360,
                   title="Keys nearest the five-number summary of per-key RSS")
ps.render_facets(heights, alloc, spec, OUT / "stereotypes.svg")
print("wrote", OUT / "stereotypes.svg")

ps.write_table_csv(near, OUT / "stereotypes.csv")
print("wrote", OUT / "stereotypes.csv")
