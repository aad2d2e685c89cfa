"""Legendre-symbol classification of H_K(p, q) over multiquadratic K.

One rule covers ranks 1, 2 and n: each discriminant condition is required for
all generators at once, and "d = 1 mod 8" becomes "every d_i = 1 mod 8".
(2, p) is canonicalized to (p, 2); the swap is
recorded in the certificate.
"""

from quatdiv.arith import PrimeArg
from quatdiv.decision import Certificate, Decision, Recorder, Verdict
from quatdiv.oracle import oracle_rule
from quatdiv.quadfields import MultiQuadField, discriminant

DIV, SPLIT = Verdict.DIVISION, Verdict.SPLIT


def _base_splits(p, q, ev):
    """H_Q(p, q) is already a matrix algebra, hence so is H_K(p, q)."""
    if p == q == 2:
        return True
    if q == 2:
        return ev("mod", p, 8) in (1, 7)
    if p == q:
        return ev("mod", p, 4) == 1
    return ev("legendre", q, p) == 1 and (ev("mod", p, 4) == 1 or ev("mod", q, 4) == 1)


def theorem_rule(p, q, ds, ev):
    """Return (clause, verdict), or (clause, None) when no clause applies.

    Expects p, q already normalized so that q == 2 whenever exactly one is 2.
    """
    if _base_splits(p, q, ev):
        return "base-split", SPLIT

    def residues(ell):
        return all(ev("legendre", discriminant(d), ell) == 1 for d in ds)

    def one_mod_8():
        return all(ev("mod", d, 8) == 1 for d in ds)

    if q == 2:
        # p = 3 or 5 mod 8 here
        return "case2", (DIV if residues(p) or one_mod_8() else SPLIT)
    pm, qm = ev("mod", p, 4), ev("mod", q, 4)
    if p != q and (pm == 1 or qm == 1) and ev("legendre", p, q) == -1:
        return "case1", (DIV if residues(p) or residues(q) else SPLIT)
    if pm == 3 and qm == 3:
        if ev("legendre", q, p) != 1 and (residues(p) or one_mod_8()):
            return "case3-p", DIV
        if ev("legendre", p, q) != 1 and (residues(q) or one_mod_8()):
            return "case3-q", DIV
        return "case3", SPLIT
    return "uncovered", None


def _decide(p, q, ds, coprime_hypothesis=False):
    p, q = int(PrimeArg(p)), int(PrimeArg(q))
    swapped = p == 2 and q != 2
    if swapped:
        p, q = q, p
    ev = Recorder()
    clause, verdict = theorem_rule(p, q, ds, ev)
    if verdict is not None and coprime_hypothesis and clause != "base-split":
        # the rank-n theorem assumes distinct primes coprime to every generator
        if p == q or any(d % p == 0 or d % q == 0 for d in ds):
            verdict = None
    if verdict is None:
        ev = Recorder()
        _, verdict = oracle_rule(p, q, ds, ev)
        cert = Certificate("oracle", "generic-oracle", p, q, ds, ev.as_tuple(),
                           delegated=True, swapped=swapped)
        return Decision(verdict, cert)
    return Decision(verdict, Certificate("theorem", clause, p, q, ds, ev.as_tuple(), swapped=swapped))


def classify_quadratic(d, p, q):
    return _decide(p, q, MultiQuadField((d,)).ds)


def classify_biquadratic(d1, d2, p, q):
    return _decide(p, q, MultiQuadField((d1, d2)).ds)


def classify_multiquadratic(field, p, q):
    if not isinstance(field, MultiQuadField):
        field = MultiQuadField(tuple(field))
    return _decide(p, q, field.ds, coprime_hypothesis=field.rank >= 3)
