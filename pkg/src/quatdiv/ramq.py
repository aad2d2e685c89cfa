"""Ramified primes of H_Q(p, q): case lemmas (fast) and Hilbert symbols (generic)."""

from dataclasses import dataclass, field

from quatdiv.arith import PrimeArg
from quatdiv.decision import Certificate, Decision, Recorder, Verdict


@dataclass(frozen=True)
class RamSet:
    """Finite ramified primes of H_Q(p, q); their product is the reduced discriminant."""

    primes: tuple
    clause: str = field(default="generic", compare=False)

    @property
    def discriminant(self):
        out = 1
        for ell in self.primes:
            out *= ell
        return out

    def __contains__(self, ell):
        return ell in self.primes

    def __len__(self):
        return len(self.primes)


def generic_rule(p, q, ev):
    return "generic", tuple(sorted(ell for ell in {2, p, q} if ev("hilbert", p, q, ell) == -1))


def _normalize(p, q):
    # put 2 in second position
    return (q, p, True) if p == 2 and q != 2 else (p, q, False)


def fast_clauses(p, q, ev):
    """Every case-lemma hypothesis satisfied by (p, q), as (clause, primes) pairs.

    The list is exhaustive on prime pairs and, by the trichotomy for prime
    parameters, has exactly one entry.
    """
    p, q, _ = _normalize(p, q)
    hits = []
    if p == q == 2:
        hits.append(("split-2-2", ()))
    elif q == 2:
        r = ev("mod", p, 8)
        if r in (1, 7):
            hits.append(("split-q2-pm1-mod8", ()))
        elif r == 3:
            hits.append(("q2-p3-mod8", (2, p)))
        else:
            hits.append(("q2-p5-mod8", (2, p)))
    else:
        pm, qm = ev("mod", p, 4), ev("mod", q, 4)
        if p == q:
            if pm == 1:
                hits.append(("split-p-eq-q-1mod4", ()))
            else:
                hits.append(("both-3mod4", (2, p)))
        elif pm == 1 or qm == 1:
            if ev("legendre", q, p) == 1:
                hits.append(("split-residue", ()))
            if ev("legendre", p, q) == -1:
                hits.append(("pq-nonresidue", tuple(sorted((p, q)))))
        else:
            if ev("legendre", q, p) != 1:
                hits.append(("both-3mod4", (2, p)))
            if ev("legendre", p, q) != 1:
                hits.append(("both-3mod4", (2, q)))
    return hits


def fast_rule(p, q, ev):
    hits = fast_clauses(p, q, ev)
    if not hits:
        return generic_rule(p, q, ev)
    clause, primes = hits[0]
    return clause, tuple(sorted(primes))


def ramified_primes_generic(p, q):
    p, q = int(PrimeArg(p)), int(PrimeArg(q))
    clause, primes = generic_rule(p, q, Recorder())
    return RamSet(primes, clause)


def ramified_primes_fast(p, q):
    p, q = int(PrimeArg(p)), int(PrimeArg(q))
    clause, primes = fast_rule(p, q, Recorder())
    return RamSet(primes, clause)


def over_q_rule(p, q, ds, ev):
    clause, primes = fast_rule(p, q, ev)
    return clause, (Verdict.DIVISION if primes else Verdict.SPLIT)


def classify_over_Q(p, q):
    """H_Q(p, q) is split iff its reduced discriminant is 1."""
    p, q = int(PrimeArg(p)), int(PrimeArg(q))
    ev = Recorder()
    clause, verdict = over_q_rule(p, q, (), ev)
    return Decision(verdict, Certificate("ramq", clause, p, q, (), ev.as_tuple()))
