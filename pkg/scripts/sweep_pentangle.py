#!/usr/bin/env python3
"""Sweep pentangle fillings over a range of height bounds and report how the
counts of constrained tuples grow.  Everything passing the three two-bridge
necessary conditions is expected to simplify at every bound."""

import argparse
import json
import time

from surgeryforge.pentangle import verify_simplification


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-bound", type=int, default=6)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    for bound in range(2, args.max_bound + 1):
        t0 = time.monotonic()
        report = verify_simplification(bound, jobs=args.jobs)
        elapsed = time.monotonic() - t0
        print(json.dumps({
            "bound": bound,
            "slopes": report.slope_count,
            "tuples": report.tuples_checked,
            "necessary_all_three": report.necessary_all_three,
            "simplified": report.simplified,
            "counterexamples": len(report.counterexamples),
            "seconds": round(elapsed, 3),
        }, sort_keys=True))
        if report.counterexamples:
            return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
