"""Run the theorem-vs-oracle sweeps at the acceptance bounds and summarize clauses.

    python scripts/run_sweeps.py
"""

import sys
import time

from quatdiv.sweeps import sweep

BOUNDS = [(1, 50, 200), (2, 20, 100), (3, 10, 50)]  # (rank, max |d|, max prime)


def main():
    bad = 0
    for rank, max_d, max_prime in BOUNDS:
        t0 = time.perf_counter()
        rep = sweep(rank, max_prime, max_d)
        dt = time.perf_counter() - t0
        print(f"rank {rank} (|d| <= {max_d}, p,q <= {max_prime}): {rep.cases} cases, "
              f"{len(rep.disagreements)} disagreements, {dt:.1f}s")
        for (verdict, clause), n in sorted(rep.counts.items()):
            print(f"    {verdict:<9} {clause:<16} {n}")
        bad += len(rep.disagreements)
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
