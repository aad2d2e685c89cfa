import pytest

from quatdiv import Verdict, classify_over_Q, ramified_primes_fast, ramified_primes_generic, replay
from quatdiv.decision import Recorder
from quatdiv.local import local_split
from quatdiv.ramq import fast_clauses

from oracles import sieve

PRIMES = sieve(200)


def _ramified_by_conics(p, q):
    return tuple(ell for ell in sorted({2, p, q}) if not local_split(p, q, ell))


@pytest.mark.parametrize("p, q, expected", [(2, 2, ()), (5, 2, (2, 5)), (3, 11, (2, 3))])
def test_generic_examples(p, q, expected):
    assert ramified_primes_generic(p, q).primes == expected
    assert _ramified_by_conics(p, q) == expected


@pytest.mark.parametrize("p, q, expected", [(7, 47, (2, 7)), (5, 3, (3, 5)), (17, 2, ())])
def test_fast_examples(p, q, expected):
    assert ramified_primes_fast(p, q).primes == expected
    assert ramified_primes_generic(p, q).primes == expected


def test_fast_example_clauses():
    assert ramified_primes_fast(7, 47).clause == "both-3mod4"
    assert ramified_primes_fast(5, 3).clause == "pq-nonresidue"
    assert ramified_primes_fast(17, 2).clause == "split-q2-pm1-mod8"


@pytest.mark.parametrize("p, q, expected", [(2, 2, Verdict.SPLIT), (7, 47, Verdict.DIVISION),
                                             (13, 13, Verdict.SPLIT)])
def test_classify_over_q_examples(p, q, expected):
    dec = classify_over_Q(p, q)
    assert dec.verdict is expected
    assert replay(dec.certificate, dec.verdict) is expected


def test_generic_agrees_with_conic_search():
    for p in PRIMES[:15]:
        for q in PRIMES[:15]:
            assert ramified_primes_generic(p, q).primes == _ramified_by_conics(p, q)


def test_ramset_invariants():
    for p in PRIMES:
        for q in PRIMES:
            r = ramified_primes_generic(p, q)
            assert len(r) in (0, 2)
            assert all((2 * p * q) % ell == 0 for ell in r.primes)
            assert r.discriminant in (1, *(a * b for a in r.primes for b in r.primes if a < b))


def test_case_analysis_covers_each_pair_once():
    for p in PRIMES:
        for q in PRIMES:
            assert len(fast_clauses(p, q, Recorder())) == 1, (p, q)


def test_symmetric_branch_matches_generic():
    # p = q = 3 mod 4 with (q/p) = 1 is handled by the swapped branch
    for p in PRIMES:
        for q in PRIMES:
            if p % 4 == 3 and q % 4 == 3 and p != q:
                assert ramified_primes_fast(p, q) == ramified_primes_generic(p, q)
