#!/usr/bin/env python3
"""Run the reference length sweep and print one line per (length, q) pair.

Exit status is 0 when every pair lands on its expected verdict, 1
otherwise.  Use --json for NDJSON instead of the aligned table.
"""
import argparse
import json
import sys

from selfdual.table import all_match, field_label, run_table


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--json", action="store_true", help="emit NDJSON")
    args = ap.parse_args(argv)

    outcomes = run_table()
    if args.json:
        for o in outcomes:
            print(json.dumps(o.to_json(), sort_keys=True))
    else:
        print("%-8s %-6s %-12s %-10s %-18s %-8s %s"
              % ("length", "q", "verdict", "reason", "distance", "secs", "ok"))
        for o in outcomes:
            if o.verdict == "CONFIRMED":
                dist = o.detail["distance"]
                if "exact" in dist:
                    shown = "d = %d" % dist["exact"]
                else:
                    shown = "d >= %d" % dist["lower_bound"]
                shown += " (%s)" % o.detail["mds"]
            else:
                shown = "-"
            print("%-8d %-6s %-12s %-10s %-18s %-8.2f %s"
                  % (o.length, field_label(o.p, o.t), o.verdict,
                     o.reason or "-", shown, o.seconds,
                     "yes" if o.matches_expected else "MISMATCH"))
    total = sum(o.seconds for o in outcomes)
    confirmed = sum(o.verdict == "CONFIRMED" for o in outcomes)
    sys.stdout.flush()
    print("# %d pairs, %d confirmed, %.1f s total"
          % (len(outcomes), confirmed, total), file=sys.stderr)
    return 0 if all_match(outcomes) else 1


if __name__ == "__main__":
    sys.exit(main())
