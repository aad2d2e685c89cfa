import pytest
from hypothesis import given, strategies as st

from quatdiv import DegenerateField, InvalidArgument, MultiQuadField, QuadField, SplitType
from quatdiv.arith import third_subfield
from quatdiv.quadfields import discriminant, prime_decomposition, splits_completely

from oracles import sieve, squares_mod

PRIMES = sieve(100)
SQF = [d for d in range(-30, 31) if d not in (0, 1) and all(d % (k * k) for k in range(2, 6))]


@pytest.mark.parametrize("d, expected", [(5, 5), (3, 12), (-1, -4)])
def test_discriminant_examples(d, expected):
    assert discriminant(d) == expected


@given(st.sampled_from(SQF))
def test_discriminant_is_0_or_1_mod_4(d):
    assert discriminant(d) % 4 in (0, 1)
    assert QuadField.of(d).disc == discriminant(d)


@pytest.mark.parametrize(
    "d, p, expected",
    [(17, 2, SplitType.SPLIT), (5, 2, SplitType.INERT), (3, 11, SplitType.SPLIT)],
)
def test_prime_decomposition_examples(d, p, expected):
    assert prime_decomposition(d, p) is expected


def _decomposition_by_polynomial(d, p):
    # count roots of the minimal polynomial of the ring generator mod p
    if d % 4 == 1:
        f = lambda x: x * x - x + (1 - d) // 4
        disc = d
    else:
        f = lambda x: x * x - d
        disc = 4 * d
    if disc % p == 0:
        return SplitType.RAMIFIED
    roots = sum(1 for x in range(p) if f(x) % p == 0)
    return SplitType.SPLIT if roots == 2 else SplitType.INERT


def test_prime_decomposition_matches_root_count():
    for d in SQF:
        for p in PRIMES:
            assert prime_decomposition(d, p) is _decomposition_by_polynomial(d, p), (d, p)


@pytest.mark.parametrize(
    "ds, p, expected", [([17, 41], 2, True), ([3], 7, False), ([2, 3], 23, True)]
)
def test_splits_completely_examples(ds, p, expected):
    assert splits_completely(ds, p) is expected


def test_splits_completely_example_square_tables():
    assert 5 not in squares_mod(7) and 12 % 7 == 5
    sq23 = squares_mod(23)
    assert 8 in sq23 and 12 in sq23


def test_third_subfield_also_splits():
    for i, d1 in enumerate(SQF):
        for d2 in SQF[i + 1:]:
            try:
                fld = MultiQuadField((d1, d2))
            except DegenerateField:
                continue
            d3 = third_subfield(d1, d2)
            for p in PRIMES[1:]:
                if splits_completely(fld, p):
                    assert prime_decomposition(d3, p) is SplitType.SPLIT
                    assert all(prime_decomposition(d, p) is SplitType.SPLIT for d in fld.ds)


@pytest.mark.parametrize("ds", [(2, 3, 6), (-1, 2, -2), (3, 3), (5, 20), (-3, 5, 7, -105)])
def test_multiquad_rejects_dependent(ds):
    with pytest.raises(InvalidArgument):
        MultiQuadField(ds)


def test_multiquad_accepts_independent():
    fld = MultiQuadField((2, 3, 5, -1))
    assert fld.rank == 4
    assert [k.disc for k in fld.subfields] == [8, 12, 5, -4]
