#!/usr/bin/env python3
"""Regenerates the bundled fixture under data/fixture/.

427 synthetic employment sites across 32 European countries, 45 of which lack
at least one signal. Country unemployment rates are approximate 2013 annual
averages. Output is deterministic for the fixed seed.
"""
import json
import math
import pathlib
import random

SEED = 20131029
TOTAL_SITES = 427
INCOMPLETE_SITES = 45

RATES = {
    "AT": 4.9, "BE": 8.4, "BG": 13.0, "CH": 4.4, "CY": 15.9, "CZ": 7.0, "DE": 5.2,
    "DK": 7.0, "EE": 8.6, "ES": 26.1, "FI": 8.2, "FR": 10.3, "GB": 7.6, "GR": 27.5,
    "HR": 17.3, "HU": 10.2, "IE": 13.1, "IS": 5.4, "IT": 12.1, "LT": 11.8, "LU": 5.9,
    "LV": 11.9, "MT": 6.4, "NL": 7.3, "NO": 3.5, "PL": 10.3, "PT": 16.4, "RO": 7.1,
    "SE": 8.0, "SI": 10.1, "SK": 14.2, "TR": 8.7,
}

# Missing-signal patterns for the incomplete sites: (rank, trend, traffic) present?
PATTERNS = ([(True, True, False)] * 20 + [(True, False, True)] * 10 +
            [(False, True, True)] * 8 + [(False, False, True)] * 3 +
            [(True, False, False)] * 2 + [(False, False, False)] * 2)
assert len(PATTERNS) == INCOMPLETE_SITES


def fmt(x):
    return repr(float(x))


def main():
    rng = random.Random(SEED)
    countries = sorted(RATES)
    mean_rate = sum(RATES.values()) / len(RATES)
    sd_rate = math.sqrt(sum((r - mean_rate) ** 2 for r in RATES.values()) / (len(RATES) - 1))

    # Every country gets at least 5 sites; the rest are spread at random.
    per_country = {c: 5 for c in countries}
    for _ in range(TOTAL_SITES - 5 * len(countries)):
        per_country[rng.choice(countries)] += 1

    sites = []
    for c in countries:
        for k in range(per_country[c]):
            z_rate = (RATES[c] - mean_rate) / sd_rate
            attractiveness = 0.6 * z_rate + 0.8 * rng.gauss(0.0, 1.0)
            rank = max(1, int(round(math.exp(12.6 - 1.3 * attractiveness + 0.9 * rng.gauss(0.0, 1.0)))))
            trend = min(100.0, max(0.0, round(50.0 + 18.0 * attractiveness + 8.0 * rng.gauss(0.0, 1.0), 1)))
            traffic = round(math.exp(8.5 + 1.1 * attractiveness + 0.7 * rng.gauss(0.0, 1.0)))
            url = "www.jobsite-%03d.%s" % (k + 1, c.lower())
            sites.append({"url": url, "country": c, "rank": rank, "trend": trend, "traffic": float(traffic)})

    incomplete = rng.sample(range(TOTAL_SITES), INCOMPLETE_SITES)
    for idx, pattern in zip(incomplete, PATTERNS):
        for present, key in zip(pattern, ("rank", "trend", "traffic")):
            if not present:
                sites[idx][key] = None

    rng.shuffle(sites)
    out = pathlib.Path(__file__).resolve().parent / "fixture"
    out.mkdir(exist_ok=True)

    def cell(v, integer=False):
        if v is None:
            return ""
        return str(v) if integer else fmt(v)

    with open(out / "sites.csv", "w", newline="\n") as f:
        f.write("url,country,rank,trend,traffic\n")
        for s in sites:
            f.write("%s,%s,%s,%s,%s\n" % (s["url"], s["country"], cell(s["rank"], True),
                                         cell(s["trend"]), cell(s["traffic"])))

    with open(out / "site_list.csv", "w", newline="\n") as f:
        f.write("url,country,rank,trend,traffic\n")
        for s in sites:
            f.write("%s,%s,,,\n" % (s["url"], s["country"]))

    recorded = {s["url"]: {"rank": s["rank"], "trend": s["trend"], "traffic": s["traffic"]} for s in sites}
    with open(out / "signals.json", "w", newline="\n") as f:
        json.dump(recorded, f, indent=1, sort_keys=True)
        f.write("\n")

    with open(out / "indicators.csv", "w", newline="\n") as f:
        f.write("country,unemployment_rate\n")
        for c in countries:
            f.write("%s,%s\n" % (c, fmt(RATES[c])))


if __name__ == "__main__":
    main()
