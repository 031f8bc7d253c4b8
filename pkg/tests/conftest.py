import pandas as pd
import pytest

import panelscope as ps
from panelscope.datasets import load_heights


@pytest.fixture(scope="session")
def heights() -> ps.PanelTable:
    """The bundled fixture as ingested: 144 countries."""
    return load_heights()


@pytest.fixture(scope="session")
def heights_kept(heights) -> ps.PanelTable:
    """Countries with at least five observations, as the workflows use."""
    counted = ps.add_n_obs(heights)
    return ps.filter_keys(counted, ps.n_obs(counted), lambda row: row["n_obs"] >= 5)


@pytest.fixture()
def small_panel() -> ps.PanelTable:
    rows = []
    for key, series in [
        ("a", [(0, 1.0), (1, 2.0), (2, 4.0)]),
        ("b", [(0, 5.0), (1, 4.0), (2, 3.0), (3, 2.0)]),
        ("c", [(0, 7.0), (2, 7.0)]),
    ]:
        rows.extend({"key": key, "t": t, "value": v} for t, v in series)
    return ps.build_panel(rows, key_col="key", index_col="t")


def make_panel(series: dict, key_col="key", index_col="t", value_col="value") -> ps.PanelTable:
    rows = [
        {key_col: key, index_col: t, value_col: v}
        for key, pairs in series.items()
        for t, v in pairs
    ]
    return ps.build_panel(rows, key_col=key_col, index_col=index_col)


@pytest.fixture()
def feature_frame() -> pd.DataFrame:
    return pd.DataFrame({"key": list("abcde"), "value": [1.0, 2.0, 3.0, 4.0, 5.0]})
