"""Exhaustive theorem-vs-oracle agreement sweeps."""

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations

from quatdiv.arith import is_prime, is_squarefree
from quatdiv.classify import classify_multiquadratic
from quatdiv.errors import DegenerateField
from quatdiv.oracle import decide
from quatdiv.quadfields import MultiQuadField


def primes_upto(n):
    return [p for p in range(2, n + 1) if is_prime(p)]


def generators_upto(m):
    return [d for d in range(-m, m + 1) if d not in (0, 1) and is_squarefree(d)]


def fields_of_rank(rank, max_d):
    for ds in combinations(generators_upto(max_d), rank):
        try:
            yield MultiQuadField(ds)
        except DegenerateField:
            continue


@dataclass
class SweepReport:
    rank: int
    cases: int = 0
    counts: Counter = field(default_factory=Counter)
    disagreements: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.disagreements

    @property
    def theorem_cases(self):
        return sum(n for (_, clause), n in self.counts.items() if clause != "generic-oracle")


def sweep(rank, max_prime, max_d):
    """Compare the classification rule with the oracle on every ordered prime pair."""
    primes = primes_upto(max_prime)
    report = SweepReport(rank)
    for fld in fields_of_rank(rank, max_d):
        for p in primes:
            for q in primes:
                fast = classify_multiquadratic(fld, p, q)
                ref = decide(fld, p, q)
                report.cases += 1
                report.counts[(str(fast.verdict), fast.certificate.clause)] += 1
                if fast.verdict is not ref.verdict:
                    report.disagreements.append((fld.ds, p, q, fast, ref))
    return report
