import numpy as np
import pandas as pd
import pytest

import panelscope as ps
from panelscope.datasets import heights_path
from panelscope.io import read_delimited


def config_for(path, **overrides):
    defaults = dict(key_col="country", index_col="year", regular=False)
    defaults.update(overrides)
    return ps.IngestConfig(path, **defaults)


class TestIngestConfig:
    def test_key_index_must_differ(self, tmp_path):
        with pytest.raises(ValueError):
            ps.IngestConfig(tmp_path / "x.csv", key_col="a", index_col="a")

    def test_delimiter_single_char(self, tmp_path):
        with pytest.raises(ValueError):
            ps.IngestConfig(tmp_path / "x.csv", key_col="a", index_col="b", delimiter=";;")


class TestReadPanelCsv:
    def test_heights_fixture(self):
        table = ps.read_panel_csv(config_for(heights_path()))
        assert table.n_keys == 144
        assert set(table.frame.columns) == {"country", "year", "height_cm", "continent"}

    def test_header_only_is_empty(self, tmp_path):
        path = tmp_path / "empty.csv"
        path.write_text("country,year,height_cm\n")
        with pytest.raises(ps.EmptyTableError):
            ps.read_panel_csv(config_for(path))

    def test_duplicate_pair_reports_line(self, tmp_path):
        path = tmp_path / "dup.csv"
        path.write_text("country,year,h\nA,1990,1.0\nB,1990,2.0\nA,1990,3.0\n")
        with pytest.raises(ps.DuplicateKeyIndexError) as excinfo:
            ps.read_panel_csv(config_for(path))
        assert excinfo.value.line == 4

    def test_na_tokens_become_missing(self, tmp_path):
        path = tmp_path / "na.csv"
        path.write_text("country,year,h\nA,1990,NA\nA,2000,1.5\n")
        table = ps.read_panel_csv(config_for(path))
        assert np.isnan(table.frame["h"].iloc[0])

    def test_custom_na_tokens(self, tmp_path):
        path = tmp_path / "na2.csv"
        path.write_text("country,year,h\nA,1990,-999\nA,2000,1.5\n")
        table = ps.read_panel_csv(config_for(path, na_tokens=frozenset({"", "-999"})))
        assert np.isnan(table.frame["h"].iloc[0])

    def test_type_inference(self, tmp_path):
        path = tmp_path / "types.csv"
        path.write_text(
            "country,year,h,count,flag,label\n"
            "A,1990,1.5,3,true,x\n"
            "A,2000,2.0,4,false,y\n"
        )
        frame = ps.read_panel_csv(config_for(path)).frame
        assert frame["year"].dtype.kind == "i"
        assert frame["h"].dtype.kind == "f"
        assert frame["count"].dtype.kind == "i"
        assert frame["flag"].dtype.kind == "b"
        assert frame["label"].dtype == object

    def test_alternate_delimiter(self, tmp_path):
        path = tmp_path / "semi.csv"
        path.write_text("country;year;h\nA;1990;1.5\n")
        table = ps.read_panel_csv(config_for(path, delimiter=";"))
        assert table.n_rows == 1

    def test_ragged_row_is_parse_error(self, tmp_path):
        path = tmp_path / "ragged.csv"
        path.write_text("country,year,h\nA,1990\n")
        with pytest.raises(ps.ParseError) as excinfo:
            ps.read_panel_csv(config_for(path))
        assert excinfo.value.line == 2

    def test_missing_designated_column(self, tmp_path):
        path = tmp_path / "nocol.csv"
        path.write_text("country,h\nA,1.5\n")
        with pytest.raises(ps.ParseError):
            ps.read_panel_csv(config_for(path))


class TestWriteTableCsv:
    def test_five_num_file_has_120_lines(self, heights_kept, tmp_path):
        feats = ps.compute_features(heights_kept, "height_cm", {"five": ps.feat_five_num})
        out = tmp_path / "five.csv"
        ps.write_table_csv(feats, out)
        lines = out.read_text().splitlines()
        assert len(lines) == 120
        assert lines[0] == "country,min,q25,med,q75,max"

    def test_empty_nearest_keys_is_header_only(self, tmp_path):
        empty = pd.DataFrame(columns=["key", "value", "stat", "stat_value", "stat_diff"])
        out = tmp_path / "near.csv"
        ps.write_table_csv(empty, out)
        assert out.read_text() == "key,value,stat,stat_value,stat_diff\n"

    def test_roundtrip_values(self, heights_kept, tmp_path):
        feats = ps.compute_features(heights_kept, "height_cm", {"five": ps.feat_five_num})
        out = tmp_path / "rt.csv"
        ps.write_table_csv(feats, out)
        back = read_delimited(out)
        assert list(back.columns) == list(feats.columns)
        assert back["country"].tolist() == feats["country"].tolist()
        for col in ("min", "q25", "med", "q75", "max"):
            # six significant digits bound the round-trip error
            assert np.allclose(back[col], feats[col], rtol=5e-6, atol=1e-6)

    def test_roundtrip_booleans(self, heights_kept, tmp_path):
        feats = ps.compute_features(heights_kept, "height_cm", {"m": ps.feat_monotonic})
        out = tmp_path / "mono.csv"
        ps.write_table_csv(feats, out)
        back = read_delimited(out)
        assert back["increase"].dtype.kind == "b"
        assert back["increase"].tolist() == feats["increase"].tolist()

    def test_six_significant_digits(self, tmp_path):
        frame = pd.DataFrame({"key": ["a"], "v": [1234.56789]})
        out = tmp_path / "digits.csv"
        ps.write_table_csv(frame, out)
        assert out.read_text().splitlines()[1] == "a,1234.57"

    def test_missing_written_as_empty(self, tmp_path):
        frame = pd.DataFrame({"key": ["a", "b"], "v": [float("nan"), 2.0]})
        out = tmp_path / "na.csv"
        ps.write_table_csv(frame, out)
        assert out.read_text().splitlines()[1] == "a,"

    def test_lf_line_endings(self, tmp_path):
        frame = pd.DataFrame({"key": ["a"], "v": [1.0]})
        out = tmp_path / "lf.csv"
        ps.write_table_csv(frame, out)
        raw = out.read_bytes()
        assert b"\r" not in raw and raw.endswith(b"\n")

    def test_key_allocation_roundtrip(self, heights_kept, tmp_path):
        alloc = ps.stratify_keys(heights_kept, 12, seed=6)
        out = tmp_path / "alloc.csv"
        ps.write_table_csv(alloc, out)
        back = read_delimited(out)
        assert list(back.columns) == ["key", "facet"]
        assert len(back) == 119
        assert dict(zip(back["key"], back["facet"])) == alloc.assignments

    def test_panel_table_writable(self, small_panel, tmp_path):
        out = tmp_path / "panel.csv"
        ps.write_table_csv(small_panel, out)
        back = read_delimited(out)
        assert len(back) == small_panel.n_rows
