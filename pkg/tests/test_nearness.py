import numpy as np
import pandas as pd
import pytest

import panelscope as ps
from conftest import make_panel


@pytest.fixture()
def three_lines() -> ps.PanelTable:
    return make_panel(
        {
            "a": [(0, 0.0), (1, 2.0), (2, 4.0)],
            "b": [(0, 1.0), (1, 1.0), (2, 1.0)],
            "c": [(0, 0.0), (1, 1.0), (2, 0.0)],
        }
    )


class TestKeySlope:
    def test_exact_line(self, three_lines):
        fits = ps.key_slope(three_lines, "value").set_index("key")
        assert fits.loc["a", "intercept"] == pytest.approx(0)
        assert fits.loc["a", "slope"] == pytest.approx(2)

    def test_constant_response(self, three_lines):
        fits = ps.key_slope(three_lines, "value").set_index("key")
        assert fits.loc["b", "intercept"] == pytest.approx(1)
        assert fits.loc["b", "slope"] == pytest.approx(0)

    def test_tent_shape(self, three_lines):
        fits = ps.key_slope(three_lines, "value").set_index("key")
        assert fits.loc["c", "slope"] == pytest.approx(0)
        assert fits.loc["c", "intercept"] == pytest.approx(1 / 3)

    def test_degenerate_key_skipped_with_warning(self):
        table = make_panel({"a": [(0, 1.0), (1, 2.0)], "z": [(5, 3.0)]})
        with pytest.warns(ps.DegenerateKeyWarning):
            fits = ps.key_slope(table, "value")
        assert fits["key"].tolist() == ["a"]

    def test_predictor_defaults_to_index(self, three_lines):
        by_name = ps.key_slope(three_lines, "value", "t")
        by_default = ps.key_slope(three_lines, "value")
        pd.testing.assert_frame_equal(by_name, by_default)


class TestAugmentFit:
    def test_exact_line_zero_residuals(self, three_lines):
        fits = ps.key_slope(three_lines, "value")
        out = ps.augment_fit(three_lines, fits)
        key_a = out.frame[out.frame["key"] == "a"]
        assert np.allclose(key_a["res"], 0) and np.allclose(key_a["rss"], 0)

    def test_tent_rss(self, three_lines):
        out = ps.augment_fit(three_lines, ps.key_slope(three_lines, "value"))
        key_c = out.frame[out.frame["key"] == "c"]
        assert key_c["rss"].iloc[0] == pytest.approx(2 / 3)
        assert key_c["res"].tolist() == pytest.approx([-1 / 3, 2 / 3, -1 / 3])

    def test_rss_is_sum_of_squared_residuals(self, heights_kept):
        out = ps.augment_fit(heights_kept, ps.key_slope(heights_kept, "height_cm"))
        per_key = out.frame.groupby("country").agg(rss=("rss", "first"), check=("res", lambda r: (r**2).sum()))
        assert np.allclose(per_key["rss"], per_key["check"])

    def test_row_count_unchanged(self, heights_kept):
        out = ps.augment_fit(heights_kept, ps.key_slope(heights_kept, "height_cm"))
        assert out.n_rows == heights_kept.n_rows

    def test_missing_fit(self, three_lines):
        fits = ps.key_slope(three_lines, "value")
        with pytest.raises(ps.MissingFitError):
            ps.augment_fit(three_lines, fits[fits["key"] != "b"])


class TestKeysNear:
    def test_five_values(self, feature_frame):
        near = ps.keys_near(feature_frame, "value")
        by_stat = {row["stat"]: row for _, row in near.iterrows()}
        assert by_stat["min"]["key"] == "a" and by_stat["min"]["stat_diff"] == 0
        assert by_stat["q25"]["key"] == "b"
        assert by_stat["q25"]["stat_diff"] == pytest.approx(0.3333, abs=1e-4)
        assert by_stat["med"]["key"] == "c" and by_stat["med"]["stat_diff"] == 0
        assert by_stat["q75"]["key"] == "d"
        assert by_stat["q75"]["stat_diff"] == pytest.approx(0.3333, abs=1e-4)
        assert by_stat["max"]["key"] == "e" and by_stat["max"]["stat_diff"] == 0

    def test_exact_match_has_zero_diff(self):
        frame = pd.DataFrame({"key": ["a", "b", "c"], "v": [1.0, 2.0, 3.0]})
        near = ps.keys_near(frame, "v")
        med = near[near["stat"] == "med"].iloc[0]
        assert med["key"] == "b" and med["stat_diff"] == 0

    def test_all_equal_column_returns_every_key(self):
        frame = pd.DataFrame({"key": list("abc"), "v": [2.0, 2.0, 2.0]})
        near = ps.keys_near(frame, "v")
        assert len(near) == 15  # 3 keys x 5 stats
        assert (near["stat_diff"] == 0).all()

    def test_heights_rss_stereotypes_minimal(self, heights_kept):
        fits = ps.key_rss(heights_kept, "height_cm")
        near = ps.keys_near(fits, "rss")
        values = fits["rss"].to_numpy()
        for _, row in near.iterrows():
            assert abs(row["rss"] - row["stat_value"]) == row["stat_diff"]
            assert row["stat_diff"] <= np.abs(values - row["stat_value"]).min() + 1e-12

    def test_custom_stats(self, feature_frame):
        near = ps.keys_near(feature_frame, "value", stats={"mean": lambda x: float(np.mean(x))})
        assert near["stat"].tolist() == ["mean"]
        assert near["key"].iloc[0] == "c"

    def test_empty_features(self):
        with pytest.raises(ps.EmptyFeaturesError):
            ps.keys_near(pd.DataFrame({"key": [], "v": []}), "v")

    def test_unknown_column(self, feature_frame):
        with pytest.raises(ps.UnknownColumnError):
            ps.keys_near(feature_frame, "nope")


class TestTopNKeys:
    def test_top_three(self, feature_frame):
        top = ps.top_n_keys(feature_frame, "value", 3)
        assert sorted(top["value"]) == [3, 4, 5]

    def test_bottom_three(self, feature_frame):
        bottom = ps.top_n_keys(feature_frame, "value", -3)
        assert sorted(bottom["value"]) == [1, 2, 3]

    def test_single_top(self):
        frame = pd.DataFrame({"key": list("abcd"), "v": [1.0, 2.0, 2.0, 5.0]})
        top = ps.top_n_keys(frame, "v", 1)
        assert top["key"].tolist() == ["d"]

    def test_boundary_ties_included(self):
        frame = pd.DataFrame({"key": list("abcd"), "v": [1.0, 2.0, 2.0, 5.0]})
        top = ps.top_n_keys(frame, "v", 2)
        assert sorted(top["key"]) == ["b", "c", "d"]

    def test_n_out_of_range(self, feature_frame):
        for n in (0, 6, -6):
            with pytest.raises(ps.NOutOfRangeError):
                ps.top_n_keys(feature_frame, "value", n)
