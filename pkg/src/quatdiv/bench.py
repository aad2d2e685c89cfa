"""Timing harness: fast theorem vs. place oracle vs. local brute force.

Case enumeration (fixed, so runs are reproducible):

* prime pairs {p, q} with p < q, ordered by q then p:
  (2,3), (2,5), (3,5), (2,7), (3,7), (5,7), ...
* quadratic generators ordered by |d| with the negative first, skipping d = 1:
  -1, -2, 2, -3, 3, -5, 5, ...
* biquadratic generator couples {d_i, d_j} (i < j in the list above), ordered
  by j then i, skipping degenerate composites.

With r = ceil(sqrt(count)), the first r fields are crossed with the first r
prime pairs (field-major) and the product is truncated to ``count`` cases.
"""

import csv
import enum
import io
import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import count as _count, islice
from math import isqrt

from quatdiv.arith import is_prime, is_squarefree, sqf_product
from quatdiv.classify import classify_biquadratic, classify_quadratic
from quatdiv.oracle import decide, decide_local

DEFAULT_BUDGET_S = 600.0
BRUTE_MAX_COUNT = 1000
CSV_HEADER = ("method", "mode", "case_count", "total_ms", "agreement_failures")


class Mode(str, enum.Enum):
    QUAD = "quad"
    BIQUAD = "biquad"


class Method(str, enum.Enum):
    FAST = "fast"
    ORACLE = "oracle"
    BRUTE = "brute"


@dataclass(frozen=True)
class Case:
    ds: tuple
    p: int
    q: int

    @property
    def field_spec(self):
        if len(self.ds) == 1:
            return f"quad:{self.ds[0]}"
        return "multi:" + ",".join(str(d) for d in self.ds)


@dataclass
class CaseSet:
    mode: Mode
    cases: list


@dataclass
class BenchRow:
    method: Method
    mode: Mode
    case_count: int
    total_ms: float | None
    agreement_failures: int = 0
    verdicts: list = field(default_factory=list, repr=False)

    @property
    def finished(self):
        return self.total_ms is not None


def prime_pairs():
    primes = []
    for n in _count(2):
        if is_prime(n):
            for p in primes:
                yield p, n
            primes.append(n)


def signed_squarefree():
    yield -1
    for n in _count(2):
        if is_squarefree(n):
            yield -n
            yield n


def quad_fields():
    for d in signed_squarefree():
        yield (d,)


def biquad_fields():
    seen = []
    for d in signed_squarefree():
        for e in seen:
            if e != d and sqf_product(e, d) != 1:
                yield (e, d)
        seen.append(d)


def generate_cases(count, mode):
    if count < 1:
        raise ValueError("count must be positive")
    mode = Mode(mode)
    r = isqrt(count - 1) + 1
    fields = list(islice(quad_fields() if mode is Mode.QUAD else biquad_fields(), r))
    pairs = list(islice(prime_pairs(), r))
    cases = [Case(ds, p, q) for ds in fields for p, q in pairs]
    return CaseSet(mode, cases[:count])


def _solver(method, mode):
    if method is Method.FAST:
        if mode is Mode.QUAD:
            return lambda c: classify_quadratic(c.ds[0], c.p, c.q)
        return lambda c: classify_biquadratic(c.ds[0], c.ds[1], c.p, c.q)
    if method is Method.ORACLE:
        return lambda c: decide(c.ds, c.p, c.q)
    return lambda c: decide_local(c.ds, c.p, c.q)


def _run_method(method, caseset, budget_s, workers, sink):
    solve = _solver(method, caseset.mode)
    cases = caseset.cases
    deadline = time.perf_counter() + budget_s
    verdicts = []

    def run_chunk(chunk):
        out = []
        for c in chunk:
            if time.perf_counter() > deadline:
                return None
            if sink is None:
                out.append((solve(c), None))
            else:
                t0 = time.perf_counter_ns()
                dec = solve(c)
                out.append((dec, (time.perf_counter_ns() - t0) / 1000))
        return out

    chunk = 512
    chunks = [cases[i:i + chunk] for i in range(0, len(cases), chunk)]
    t0 = time.perf_counter()
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run_chunk, chunks))
    else:
        results = []
        for ch in chunks:
            res = run_chunk(ch)
            results.append(res)
            if res is None:
                break
    elapsed_ms = (time.perf_counter() - t0) * 1000
    if any(res is None for res in results):
        return BenchRow(method, caseset.mode, len(cases), None)
    for res in results:
        for case, (dec, micros) in zip(cases[len(verdicts):], res):
            verdicts.append(dec.verdict)
            if sink is not None:
                sink({
                    "field": case.field_spec,
                    "p": case.p,
                    "q": case.q,
                    "verdict": str(dec.verdict),
                    "certificate": dec.certificate.to_dict(),
                    "method": method.value,
                    "micros": micros,
                })
    return BenchRow(method, caseset.mode, len(cases), elapsed_ms, verdicts=verdicts)


def run_benchmark(count, mode, methods, single_thread=True, workers=None,
                  budget_s=DEFAULT_BUDGET_S, sink=None):
    """Time each method over the same generated cases and cross-check verdicts.

    A method exceeding ``budget_s`` yields a row with total_ms None ("n.a.").
    agreement_failures counts cases where a method disagrees with at least one
    other finished method.  ``sink`` receives one dict per case (JSON-lines).
    """
    mode = Mode(mode)
    methods = [Method(m) for m in methods]
    if Method.BRUTE in methods and count > BRUTE_MAX_COUNT:
        raise ValueError(f"brute-force method is limited to count <= {BRUTE_MAX_COUNT}")
    caseset = generate_cases(count, mode)
    nworkers = None if single_thread else workers
    rows = [_run_method(m, caseset, budget_s, nworkers, sink) for m in methods]
    done = [r for r in rows if r.finished]
    for row in done:
        row.agreement_failures = sum(
            any(other.verdicts[i] is not v for other in done if other is not row)
            for i, v in enumerate(row.verdicts)
        )
    return rows


def _fmt_ms(row):
    return "n.a." if row.total_ms is None else f"{row.total_ms:.1f}"


def write_csv(rows, fh):
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        w.writerow([r.method.value, r.mode.value, r.case_count, _fmt_ms(r), r.agreement_failures])


def to_csv(rows):
    buf = io.StringIO()
    write_csv(rows, buf)
    return buf.getvalue()


_TITLES = {Method.FAST: "Fast theorem", Method.ORACLE: "Place oracle", Method.BRUTE: "Local brute"}


def format_table(runs):
    """Table with one line per case count and one timing column (ms) per method.

    ``runs`` is a list of row-lists, one per run_benchmark call.
    """
    methods = []
    for rows in runs:
        for r in rows:
            if r.method not in methods:
                methods.append(r.method)
    head = ["# of algebras"] + [_TITLES[m] for m in methods] + ["failures"]
    lines = []
    for rows in runs:
        by = {r.method: r for r in rows}
        n = rows[0].case_count if rows else 0
        cells = [str(n)] + [_fmt_ms(by[m]) if m in by else "" for m in methods]
        cells.append(str(sum(r.agreement_failures for r in rows)))
        lines.append(cells)
    widths = [max(len(head[i]), *(len(l[i]) for l in lines)) for i in range(len(head))]
    sep = "+" + "+".join("-" * (w + 2) for w in widths) + "+"
    fmt = lambda cells: "| " + " | ".join(c.rjust(w) for c, w in zip(cells, widths)) + " |"
    return "\n".join([sep, fmt(head), sep, *map(fmt, lines), sep])


def jsonl_sink(fh):
    return lambda obj: fh.write(json.dumps(obj) + "\n")
