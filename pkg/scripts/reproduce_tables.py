"""Print the timing tables for quadratic and biquadratic fields.

Absolute milliseconds depend on the machine; the comparison between columns
and the zero failure count are what carry over.

    python scripts/reproduce_tables.py [--max-count 100000] [--csv out.csv]
"""

import argparse
import sys

from quatdiv.bench import BRUTE_MAX_COUNT, format_table, run_benchmark, write_csv

COUNTS = (100, 1000, 10_000, 100_000)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-count", type=int, default=COUNTS[-1])
    ap.add_argument("--budget-s", type=float, default=600.0)
    ap.add_argument("--csv", help="also append every row to this CSV file")
    args = ap.parse_args(argv)

    all_rows = []
    for mode in ("quad", "biquad"):
        runs = []
        for n in COUNTS:
            if n > args.max_count:
                break
            methods = ["fast", "oracle"] + (["brute"] if n <= BRUTE_MAX_COUNT else [])
            rows = run_benchmark(n, mode, methods, budget_s=args.budget_s)
            runs.append(rows)
            all_rows.extend(rows)
            print(f"{mode} {n}: done", file=sys.stderr)
        print(f"\n{mode} fields (total ms; brute only up to {BRUTE_MAX_COUNT} cases)")
        print(format_table(runs))
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            write_csv(all_rows, fh)
    return 0


if __name__ == "__main__":
    sys.exit(main())
