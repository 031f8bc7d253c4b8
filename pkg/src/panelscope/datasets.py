"""Bundled demonstration data."""

from __future__ import annotations

from pathlib import Path

from .io import IngestConfig, read_panel_csv
from .panel import PanelTable

_DATA_DIR = Path(__file__).parent / "data"


def heights_path() -> Path:
    """Path of the bundled heights CSV (country, year, height_cm, continent)."""
    return _DATA_DIR / "heights.csv"


def load_heights() -> PanelTable:
    """Average adult male height (cm) for 144 countries at irregular
    decade intervals, 1710-2000, keyed by country and indexed by year."""
    config = IngestConfig(heights_path(), key_col="country", index_col="year", regular=False)
    return read_panel_csv(config)
