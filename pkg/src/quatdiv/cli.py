"""Command-line front end.

Exit codes: 0 success, 1 verification disagreement, 2 input error.
"""

import argparse
import json
import sys

from quatdiv import bench, sweeps
from quatdiv.arith import PrimeArg
from quatdiv.classify import classify_multiquadratic
from quatdiv.dihedral import (
    HilbertClassFieldDesc,
    KummerFieldDesc,
    class_number_imag_quadratic,
    classify_hilbert_class_field,
    classify_kummer_s3,
)
from quatdiv.errors import InvalidArgument
from quatdiv.oracle import decide
from quatdiv.quadfields import MultiQuadField
from quatdiv.ramq import classify_over_Q

FIELD_HELP = "rational | quad:<d> | multi:<d1,d2,...> | kummer:<alpha> | hcf:<d>"


def _int(text, what):
    try:
        return int(text)
    except ValueError:
        raise InvalidArgument(f"{what} must be an integer, got {text!r}") from None


def parse_field(spec):
    """Parse a field specifier into (kind, payload) with payload validated."""
    kind, _, rest = spec.partition(":")
    if kind == "rational" and not rest:
        return "rational", ()
    if kind == "quad":
        return "multi", MultiQuadField((_int(rest, "d"),))
    if kind == "multi":
        return "multi", MultiQuadField(tuple(_int(x, "d") for x in rest.split(",")))
    if kind == "kummer":
        return "kummer", KummerFieldDesc(_int(rest, "alpha"))
    if kind == "hcf":
        return "hcf", HilbertClassFieldDesc.of(_int(rest, "d"))
    raise InvalidArgument(f"unknown field specifier {spec!r}; expected {FIELD_HELP}")


def _classify(kind, payload, p, q):
    if kind == "rational":
        return classify_over_Q(p, q)
    if kind == "multi":
        return classify_multiquadratic(payload, p, q)
    if kind == "kummer":
        return classify_kummer_s3(payload, p, q)
    return classify_hilbert_class_field(payload, p, q)


def _oracle_field(kind, payload):
    # odd-degree extensions are checked over their quadratic base
    if kind == "rational":
        return ()
    if kind == "multi":
        return payload
    if kind == "kummer":
        return (-3,)
    return (payload.d,)


def _print_decision(dec, field, p, q, as_json, out):
    if as_json:
        obj = {"field": field, "p": p, "q": q}
        obj.update(dec.to_dict())
        out.write(json.dumps(obj) + "\n")
        return
    c = dec.certificate
    out.write(f"H_K({p},{q}) over {field}: {dec.verdict}\n")
    notes = [f"route={c.route}", f"clause={c.clause}"]
    if c.swapped:
        notes.append("swapped")
    if c.descent:
        notes.append(f"{c.descent} over Q(sqrt({c.ds[0]}))")
    out.write("  " + " ".join(notes) + "\n")
    for s in c.symbols:
        args = ", ".join(str(list(a)) if isinstance(a, tuple) else str(a) for a in s.args)
        out.write(f"  {s.kind}({args}) = {s.value}\n")


def cmd_classify(args, out):
    p, q = PrimeArg(args.p), PrimeArg(args.q)
    kind, payload = parse_field(args.field)
    dec = _classify(kind, payload, int(p), int(q))
    _print_decision(dec, args.field, int(p), int(q), args.json, out)
    return 0


def cmd_oracle_check(args, out):
    p, q = PrimeArg(args.p), PrimeArg(args.q)
    kind, payload = parse_field(args.field)
    fast = _classify(kind, payload, int(p), int(q))
    ref = decide(_oracle_field(kind, payload), int(p), int(q))
    agree = fast.verdict is ref.verdict
    if args.json:
        out.write(json.dumps({
            "field": args.field, "p": int(p), "q": int(q), "agree": agree,
            "classify": fast.to_dict(), "oracle": ref.to_dict(),
        }) + "\n")
    else:
        _print_decision(ref, args.field, int(p), int(q), False, out)
        out.write(f"classify: {fast.verdict} ({fast.certificate.clause}); "
                  f"{'agree' if agree else 'DISAGREE'}\n")
    return 0 if agree else 1


def cmd_verify(args, out):
    if args.max_prime < 2 or args.max_d < 2:
        raise InvalidArgument("--max-prime and --max-d must be at least 2")
    report = sweeps.sweep(args.rank, args.max_prime, args.max_d)
    out.write(f"rank {report.rank}: {report.cases} cases, "
              f"{report.theorem_cases} decided by a theorem clause, "
              f"{len(report.disagreements)} disagreements\n")
    for (verdict, clause), n in sorted(report.counts.items()):
        out.write(f"  {verdict:<9} {clause:<16} {n}\n")
    for ds, p, q, fast, ref in report.disagreements[:10]:
        out.write(f"  MISMATCH ds={list(ds)} p={p} q={q}: classify {fast.verdict} "
                  f"({fast.certificate.clause}), oracle {ref.verdict}\n")
    return 0 if report.ok else 1


def cmd_bench(args, out):
    try:
        methods = [bench.Method(m) for m in args.methods.split(",")]
    except ValueError:
        raise InvalidArgument("--methods must be a comma list of fast,oracle,brute") from None
    if args.count < 1:
        raise InvalidArgument("--count must be positive")
    if bench.Method.BRUTE in methods and args.count > bench.BRUTE_MAX_COUNT:
        raise InvalidArgument(f"brute method is limited to --count <= {bench.BRUTE_MAX_COUNT}")
    sink = bench.jsonl_sink(out) if args.out == "jsonl" else None
    rows = bench.run_benchmark(args.count, args.mode, methods,
                               single_thread=args.single_thread, workers=args.workers,
                               budget_s=args.budget_s, sink=sink)
    if args.out == "csv":
        bench.write_csv(rows, out)
    elif args.out == "table":
        out.write(bench.format_table([rows]) + "\n")
    return 0


def cmd_class_number(args, out):
    h = class_number_imag_quadratic(args.d)
    if args.json:
        out.write(json.dumps({"d": args.d, "class_number": h}) + "\n")
    else:
        out.write(f"h(Q(sqrt({args.d}))) = {h}\n")
    return 0


def build_parser():
    ap = argparse.ArgumentParser(prog="quatdiv", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    for name, helptext in (("classify", "decide split vs. division with the fast theorems"),
                           ("oracle-check", "run the place-based oracle and compare")):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("--p", type=int, required=True)
        sp.add_argument("--q", type=int, required=True)
        sp.add_argument("--field", required=True, help=FIELD_HELP)
        sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("verify", help="exhaustive theorem-vs-oracle sweep")
    sp.add_argument("--max-prime", type=int, required=True)
    sp.add_argument("--max-d", type=int, required=True)
    sp.add_argument("--rank", type=int, choices=(1, 2, 3), required=True)

    sp = sub.add_parser(
        "bench", help="time fast/oracle/brute methods",
        description="Cases: prime pairs p<q ordered by q then p; generators ordered by |d|, "
                    "negative before positive, d=1 skipped.",
    )
    sp.add_argument("--count", type=int, required=True)
    sp.add_argument("--mode", choices=("quad", "biquad"), required=True)
    sp.add_argument("--methods", default="fast,oracle")
    sp.add_argument("--out", choices=("csv", "table", "jsonl"), default="table")
    sp.add_argument("--single-thread", action="store_true")
    sp.add_argument("--workers", type=int, default=4)
    sp.add_argument("--budget-s", type=float, default=bench.DEFAULT_BUDGET_S)

    sp = sub.add_parser("class-number", help="class number of an imaginary quadratic field")
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--json", action="store_true")
    return ap


COMMANDS = {
    "classify": cmd_classify,
    "oracle-check": cmd_oracle_check,
    "verify": cmd_verify,
    "bench": cmd_bench,
    "class-number": cmd_class_number,
}


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except InvalidArgument as e:
        print(f"quatdiv: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
