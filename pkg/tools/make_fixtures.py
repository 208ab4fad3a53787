"""Regenerate the PD fixture directory from the KnotInfo csv dump.

Usage: python tools/make_fixtures.py /path/to/database_knotinfo

The package ``database_knotinfo`` is only needed here, never at runtime.
"""

from __future__ import annotations

import ast
import csv
import json
import sys
from pathlib import Path

import sympy as sp

OUT = Path(__file__).resolve().parents[1] / "src" / "gammazero" / "data"
MUTANTS = {"11n_34": "conway", "11n_42": "kinoshita_terasaka"}


def homfly_terms(text: str) -> list[list[int]]:
    v, z = sp.symbols("v z")
    expr = sp.expand(sp.sympify(text.replace("^", "**"), locals={"v": v, "z": z}))
    out = []
    for term in sp.Add.make_args(expr):
        c, rest = term.as_coeff_Mul()
        powers = rest.as_powers_dict()
        out.append([int(powers.get(v, 0)), int(powers.get(z, 0)), int(c)])
    return sorted(out)


def main(root: str) -> None:
    csv.field_size_limit(10**9)
    path = Path(root) / "csv_data" / "knotinfo_data_complete.csv"
    with path.open() as fh:
        reader = csv.reader(fh, delimiter="|")
        header = next(reader)
        next(reader)
        rows = [dict(zip(header, r)) for r in reader]
    table = {}
    (OUT / "pd").mkdir(parents=True, exist_ok=True)
    for row in rows:
        name = row["name"]
        crossings = int(row["crossing_number"]) if row.get("crossing_number") else None
        if not (crossings is not None and crossings <= 9) and name not in MUTANTS:
            continue
        if name in ("0_1",):
            continue
        pd = ast.literal_eval(row["pd_notation"])
        fname = MUTANTS.get(name, "K" + name.replace("_", "_"))
        lines = [
            f"# name: {name}",
            "# source: KnotInfo table (database_knotinfo 2026.10.5, pd_notation column)",
            "# convention: X i j k l; i is the incoming under-edge, labels listed counterclockwise;",
            "# orientation: each component is traversed in increasing edge-label order",
        ]
        lines += ["X " + " ".join(str(x) for x in xing) for xing in pd]
        (OUT / "pd" / f"{fname}.pd").write_text("\n".join(lines) + "\n")
        table[name] = {
            "file": f"pd/{fname}.pd",
            "crossing_number": crossings,
            "braid": ast.literal_eval(row["braid_notation"]) if row["braid_notation"].startswith("[") else None,
            "homfly_knotinfo_vz": homfly_terms(row["homfly_polynomial"]),
            "alexander": row["alexander_polynomial"],
        }
    meta = {
        "source": "KnotInfo (database_knotinfo 2026.10.5)",
        "homfly_convention": "v^-1 P(L+) - v P(L-) = z P(L0), P(unknot) = 1; terms are [v-exp, z-exp, coeff]",
        "knots": table,
    }
    (OUT / "knot_table.json").write_text(json.dumps(meta, indent=1, sort_keys=True) + "\n")
    print(f"wrote {len(table)} knots")


if __name__ == "__main__":
    main(sys.argv[1])
