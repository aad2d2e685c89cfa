"""Place-based ground truth for H_K(p, q) over a multiquadratic K.

H_K is split at a place w of K above a rational prime l exactly when the
local degree [K_w : Q_l] is even.  For K with Galois group (Z/2)^n that degree
is a power of two, so H_K stays ramified above l iff H_Q ramifies at l and l
splits completely in K.  H_K is a division algebra iff some such l exists.
"""

from quatdiv.arith import PrimeArg
from quatdiv.decision import Certificate, Decision, Recorder, Verdict
from quatdiv.local import conic_precision
from quatdiv.quadfields import MultiQuadField
from quatdiv.ramq import classify_over_Q, generic_rule


def _from_ramified(ramified, ds, ev):
    if not ramified:
        return "unramified", Verdict.SPLIT
    for ell in ramified:
        if ev("splits", ds, ell):
            return "ramified-prime-splits", Verdict.DIVISION
    return "no-ramified-prime-splits", Verdict.SPLIT


def oracle_rule(p, q, ds, ev):
    _, ramified = generic_rule(p, q, ev)
    return _from_ramified(ramified, ds, ev)


def local_brute_rule(p, q, ds, ev):
    """Same decision as oracle_rule, with ramification found by exhaustive conic search."""
    ramified = sorted(
        ell for ell in {2, p, q} if not ev("conic", p, q, ell, conic_precision(p, q, ell))
    )
    return _from_ramified(ramified, ds, ev)


def _generators(field):
    if isinstance(field, MultiQuadField):
        return field.ds
    ds = tuple(int(d) for d in field)
    return MultiQuadField(ds).ds if ds else ()


def decide(field, p, q):
    """Oracle decision over ``field`` (a MultiQuadField or a sequence of generators).

    An empty sequence means K = Q.
    """
    ds = _generators(field)
    p, q = int(PrimeArg(p)), int(PrimeArg(q))
    ev = Recorder()
    clause, verdict = oracle_rule(p, q, ds, ev)
    return Decision(verdict, Certificate("oracle", clause, p, q, ds, ev.as_tuple()))


def decide_local(field, p, q):
    """Like decide, but deciding ramification by brute-force conic search (slow)."""
    ds = _generators(field)
    p, q = int(PrimeArg(p)), int(PrimeArg(q))
    ev = Recorder()
    clause, verdict = local_brute_rule(p, q, ds, ev)
    return Decision(verdict, Certificate("local", clause, p, q, ds, ev.as_tuple()))


def decide_over_Q(p, q):
    return classify_over_Q(p, q)
