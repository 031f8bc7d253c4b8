"""panelscope: browse longitudinal (panel) data analytically and graphically.

Build a validated key+index panel, summarise every key with features,
sample or stratify keys into facets, fit per-key linear trends, find the
keys nearest to summary statistics, and render faceted line plots to SVG.
"""

from .errors import (
    AllMissingForKeyError,
    ColumnCollisionError,
    DegenerateKeyWarning,
    DuplicateKeyIndexError,
    DuplicateNameError,
    EmptyFeaturesError,
    EmptyInputError,
    EmptyTableError,
    FracOutOfRangeError,
    KeyMismatchError,
    MissingColumnError,
    MissingFitError,
    MissingValueError,
    NonFiniteInputError,
    NonNumericColumnError,
    NOutOfRangeError,
    NotEnoughKeysError,
    PanelscopeError,
    ParseError,
    SizeExceedsKeysError,
    TooFewIndexValuesError,
    TooFewValuesError,
    TooManyStrataError,
    UnknownColumnError,
)
from .features import (
    BUILTIN_SETS,
    FeatureSet,
    compute_features,
    decreasing,
    feat_all,
    feat_diff_summary,
    feat_five_num,
    feat_monotonic,
    feat_ranges,
    feat_spread,
    feature_set,
    feature_set_all,
    increasing,
    quantile_type8,
    register_feature,
    unvarying,
)
from .io import IngestConfig, read_delimited, read_panel_csv, write_table_csv
from .nearness import FIVE_NUM_STATS, augment_fit, key_rss, key_slope, keys_near, top_n_keys
from .panel import (
    IndexSummary,
    PanelTable,
    add_n_obs,
    build_panel,
    filter_keys,
    index_regular,
    index_summary,
    join_features,
    n_obs,
)
from .render import PlotSpec, render_facets
from .sampling import (
    DEFAULT_SEED,
    KeyAllocation,
    allocate_facet_sample,
    sample_frac_keys,
    sample_n_keys,
    stratify_keys,
)

__version__ = "0.1.0"

__all__ = [
    "PanelTable",
    "IndexSummary",
    "build_panel",
    "index_regular",
    "index_summary",
    "n_obs",
    "add_n_obs",
    "filter_keys",
    "join_features",
    "FeatureSet",
    "quantile_type8",
    "compute_features",
    "feat_five_num",
    "feat_ranges",
    "feat_spread",
    "feat_monotonic",
    "feat_diff_summary",
    "feat_all",
    "feature_set",
    "feature_set_all",
    "register_feature",
    "increasing",
    "decreasing",
    "unvarying",
    "BUILTIN_SETS",
    "KeyAllocation",
    "DEFAULT_SEED",
    "sample_n_keys",
    "sample_frac_keys",
    "stratify_keys",
    "allocate_facet_sample",
    "key_slope",
    "key_rss",
    "augment_fit",
    "keys_near",
    "top_n_keys",
    "FIVE_NUM_STATS",
    "IngestConfig",
    "read_panel_csv",
    "read_delimited",
    "write_table_csv",
    "PlotSpec",
    "render_facets",
    "PanelscopeError",
    "DuplicateKeyIndexError",
    "MissingColumnError",
    "MissingValueError",
    "NonNumericColumnError",
    "EmptyTableError",
    "TooFewIndexValuesError",
    "ColumnCollisionError",
    "UnknownColumnError",
    "KeyMismatchError",
    "EmptyInputError",
    "NonFiniteInputError",
    "TooFewValuesError",
    "AllMissingForKeyError",
    "DuplicateNameError",
    "SizeExceedsKeysError",
    "FracOutOfRangeError",
    "TooManyStrataError",
    "NotEnoughKeysError",
    "MissingFitError",
    "NOutOfRangeError",
    "EmptyFeaturesError",
    "ParseError",
    "DegenerateKeyWarning",
]
