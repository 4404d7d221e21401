#!/usr/bin/env python3
"""Extract knot and link fixtures from the KnotInfo/LinkInfo CSV tables.

Usage: make_fixtures.py CSV_DIR OUT_DIR

CSV_DIR holds knotinfo_data_complete.csv and linkinfo_data_complete.csv
('|'-separated, as shipped in the database_knotinfo package).  Writes one
.pd file per diagram plus catalog.json with the tabulated invariants.
"""

import csv
import json
import re
import sys
from pathlib import Path

KNOTS_UP_TO = 9
EXTRA_KNOTS = ["11n_19", "11n_38", "11n_57"]
LINKS = [
    "L2a1{0}", "L2a1{1}", "L4a1{0}", "L4a1{1}", "L5a1{0}", "L6a4{0,0}",
    "L6n1{0,0}", "L6n1{1,0}", "L6n1{0,1}", "L6n1{1,1}", "L7n1{0}", "L7n1{1}",
    "L7n2{0}", "L7n2{1}", "L8n1{0}", "L8n6{0,0}", "L8n8{0,0,0}",
]


def tuples(text):
    nums = [int(x) for x in re.findall(r"-?\d+", text)]
    return [nums[i:i + 4] for i in range(0, len(nums), 4)]


def pd_text(ts):
    return " ".join("X[%d,%d,%d,%d]" % tuple(t) for t in ts)


def kh_delta(poly):
    """Reduced KH polynomial in t, q to {delta: rank} with delta = 2i - j."""
    out = {}
    for term in poly.replace(" ", "").split("+"):
        if not term:
            continue
        coef = 1
        m = re.match(r"^(\d+)\*?(.*)$", term)
        if m:
            coef = int(m.group(1))
            term = m.group(2)
        i = j = 0
        for var, exp in re.findall(r"([tq])(?:\^\(?(-?\d+)\)?)?", term):
            e = int(exp) if exp else 1
            if var == "t":
                i = e
            else:
                j = e
        d = 2 * i - j
        out[d] = out.get(d, 0) + coef
    return {str(k): v for k, v in sorted(out.items()) if v}


def safe(name):
    return re.sub(r"[^A-Za-z0-9_]+", "_", name).strip("_")


def main():
    src, dst = Path(sys.argv[1]), Path(sys.argv[2])
    csv.field_size_limit(10**9)
    dst.mkdir(parents=True, exist_ok=True)
    catalog = []

    with open(src / "knotinfo_data_complete.csv") as f:
        rows = list(csv.DictReader(f, delimiter="|"))
    for r in rows:
        name = r["name"]
        m = re.match(r"^(\d+)(?:[an])?_(\d+)$", name)
        if not m:
            continue
        n = int(m.group(1))
        wanted = (3 <= n <= KNOTS_UP_TO) or name in EXTRA_KNOTS or (n == 10 and r["alternating"] == "N")
        if not wanted:
            continue
        fname = safe(name) + ".pd"
        (dst / fname).write_text(pd_text(tuples(r["pd_notation"])) + "\n")
        catalog.append({
            "name": name,
            "file": fname,
            "kind": "knot",
            "crossings": n,
            "alternating": r["alternating"] == "Y",
            "signature": int(r["signature"]),
            "determinant": int(r["determinant"]),
            "khovanov_reduced_mod2": kh_delta(r["khovanov_reduced_mod2_polynomial"]),
        })

    with open(src / "linkinfo_data_complete.csv") as f:
        rows = {r["name"]: r for r in csv.DictReader(f, delimiter="|")}
    for name in LINKS:
        r = rows[name]
        fname = safe(name) + ".pd"
        (dst / fname).write_text(pd_text(tuples(r["pd_notation_vector"])) + "\n")
        catalog.append({
            "name": name,
            "file": fname,
            "kind": "link",
            "crossings": int(r["crossing_number"]),
            "alternating": r["alternating"] == "Y",
            "signature": int(r["signature"]),
            "determinant": int(r["determinant"]),
        })

    (dst / "catalog.json").write_text(json.dumps(catalog, indent=1) + "\n")
    print("wrote %d fixtures" % len(catalog))


if __name__ == "__main__":
    main()
