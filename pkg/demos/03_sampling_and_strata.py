"""
Breaking up the spaghetti: samples and strata
=============================================

Overlaying a hundred-plus trajectories in one panel hides every
individual. Two remedies: draw a random handful of keys per facet, or
spread *all* keys across facets — optionally ordered along a variable so
each facet covers a band of, say, starting years. Both produce SVG files
you can open in a browser.
"""

from pathlib import Path

import panelscope as ps
from panelscope.datasets import load_heights

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

heights = load_heights()
heights = ps.filter_keys(ps.add_n_obs(heights), ps.n_obs(heights), lambda r: r["n_obs"] >= 5)

# --- a random sample of keys, all rows kept -----------------------------------

twelve = ps.sample_n_keys(heights, 12, seed=2027)
print("sampled:", ", ".join(twelve.keys()[:6]), "...")
tenth = ps.sample_frac_keys(heights, 0.1, seed=2027)
print(f"a 10% sample keeps {tenth.n_keys} of {heights.n_keys} keys\n")

# --- facet sample: 12 facets, 3 keys each (the defaults) -----------------------

sample_alloc = ps.allocate_facet_sample(heights, n_per_facet=3, n_facets=12, seed=2027)
spec = ps.PlotSpec(y_col="height_cm", title="Heights: 3 random keys per facet",
                   breaks=(1750, 1850, 1950))
ps.render_facets(heights, sample_alloc, spec, OUT / "facet_sample.svg")
print("wrote", OUT / "facet_sample.svg")

# --- strata: every key exactly once -------------------------------------------

strata_alloc = ps.stratify_keys(heights, n_strata=12, seed=2027)
spec = ps.PlotSpec(y_col="height_cm", title="Heights: all keys across 12 strata",
                   breaks=(1750, 1850, 1950))
ps.render_facets(heights, strata_alloc, spec, OUT / "facet_strata.svg")
print("wrote", OUT / "facet_strata.svg")

# --- strata ordered along the starting year ------------------------------------
# Stratum 1 collects the earliest-measured countries, stratum 12 the latest.

along_alloc = ps.stratify_keys(heights, n_strata=12, along="year", seed=2027)
first_years = ps.compute_features(heights, "year", {"first": lambda x: x[0]})
by_key = dict(zip(first_years["country"], first_years["first"]))
for stratum in (1, 12):
    keys = along_alloc.facet_keys(stratum)
    years = sorted(by_key[k] for k in keys)
    print(f"stratum {stratum:2d}: first years {years[0]:.0f}..{years[-1]:.0f}")
spec = ps.PlotSpec(y_col="height_cm", title="Strata ordered by first measurement year",
                   breaks=(1750, 1850, 1950))
ps.render_facets(heights, along_alloc, spec, OUT / "facet_strata_along_year.svg")
print("wrote", OUT / "facet_strata_along_year.svg")
