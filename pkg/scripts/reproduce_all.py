#!/usr/bin/env python3
"""Run every classification and uniqueness check and write the reports to a directory."""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from mixedenergy import census
from mixedenergy.errors import VerificationError
from mixedenergy.hypercube import verify_phi0


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-o", "--out", default="results", help="output directory")
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--skip-q4", action="store_true", help="skip the 32768-orientation Q4 run")
    ap.add_argument("--n-max", type=int, default=8, choices=(4, 6, 8, 10))
    args = ap.parse_args()

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    runs = [
        ("k4_mixed", lambda: census.reproduce_k4_classes("full")),
        ("q3_mixed", lambda: census.reproduce_q3_classes("pruned", args.jobs)),
        ("q3_oriented", lambda: census.reproduce_hypercube_orientations(3, args.jobs)),
    ]
    if not args.skip_q4:
        runs.append(("q4_oriented", lambda: census.reproduce_hypercube_orientations(4, args.jobs)))

    failed = False
    for name, fn in runs:
        t0 = time.perf_counter()
        try:
            res = fn()
        except VerificationError as exc:
            print(f"{name}: FAIL {exc}")
            failed = True
            continue
        (out / f"{name}.json").write_text(res.report.to_json(meta=False))
        print(f"{name}: {res.report.raw_hits} hits, {len(res.classes)} classes, {time.perf_counter() - t0:.1f}s")

    rows = census.cubic_underlying_scan(args.n_max)
    (out / "cubic_scan.csv").write_text(census.scan_to_csv(rows))
    print(f"cubic_scan: {len(rows)} graphs, nonzero on {sorted(r.name for r in rows if r.raw_hits)}")

    phi = []
    for k in range(1, 11):
        rep = verify_phi0(k)
        phi.append({"k": k, "square_is_kI": rep.square_is_kI, "energy": rep.energy,
                    "expected_energy": rep.expected_energy})
    (out / "phi0.json").write_text(json.dumps(phi, indent=2) + "\n")
    print("phi0: H^2 = kI for k = 1..10")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
