import pytest

from quatdiv import (
    HilbertClassFieldDesc,
    HypothesisViolation,
    InvalidArgument,
    KummerFieldDesc,
    Verdict,
    class_number_imag_quadratic,
    classify_hilbert_class_field,
    classify_kummer_s3,
    classify_quadratic,
    decide,
)
from quatdiv.quadfields import discriminant

from oracles import class_number_analytic, sieve

DIV, SPLIT = Verdict.DIVISION, Verdict.SPLIT
NEG_SQF = [d for d in range(-200, 0) if all(d % (k * k) for k in range(2, 15))]


@pytest.mark.parametrize("d, h", [(-1, 1), (-23, 3), (-47, 5)])
def test_class_number_examples(d, h):
    assert class_number_imag_quadratic(d) == h
    assert class_number_analytic(discriminant(d)) == h


def test_class_number_matches_analytic_formula():
    for d in NEG_SQF:
        assert class_number_imag_quadratic(d) == class_number_analytic(discriminant(d)), d


def test_class_number_one_list():
    ones = [d for d in NEG_SQF if class_number_imag_quadratic(d) == 1]
    assert sorted(ones) == [-163, -67, -43, -19, -11, -7, -3, -2, -1]


def test_class_number_rejects_real():
    with pytest.raises(InvalidArgument):
        class_number_imag_quadratic(5)


@pytest.mark.parametrize("alpha, p, q", [(2, 7, 5), (2, 3, 2), (5, 7, 5)])
def test_kummer_examples(alpha, p, q):
    expected = decide([-3], p, q).verdict
    assert classify_kummer_s3(alpha, p, q).verdict is expected


def test_kummer_example_values():
    assert classify_kummer_s3(2, 7, 5).verdict is DIV
    assert classify_kummer_s3(2, 7, 5).certificate.descent == "descent"
    # 3 ramifies in Q(sqrt(-3)), so (-3/3) = 0 and the q = 2 family reads Split
    dec = classify_kummer_s3(2, 3, 2)
    assert dec.verdict is SPLIT
    assert dec.certificate.descent == "descent"
    # (13/17) = 1 with 13 = 1 mod 4: H_Q splits, no named family applies
    dec = classify_kummer_s3(2, 13, 17)
    assert dec.verdict is SPLIT
    assert dec.certificate.descent == "descent-generic"


@pytest.mark.parametrize("alpha", [0, 1, -1, 8, 24, -16])
def test_kummer_rejects(alpha):
    with pytest.raises(InvalidArgument):
        KummerFieldDesc(alpha)


def test_hcf_examples():
    dec = classify_hilbert_class_field(-23, 5, 3)
    assert dec.verdict is DIV
    assert dec.certificate.clause == "case1"
    assert decide([-23], 5, 3).verdict is DIV
    for d in (-1, -5):
        with pytest.raises(HypothesisViolation):
            classify_hilbert_class_field(d, 5, 3)


def test_hcf_desc_checks_h():
    assert HilbertClassFieldDesc.of(-47).h == 5
    with pytest.raises(HypothesisViolation):
        HilbertClassFieldDesc(-47, 3)
    with pytest.raises(InvalidArgument):
        HilbertClassFieldDesc.of(23)


def test_hcf_matches_quadratic():
    for d in (-23, -31, -47, -59, -71, -79, -83):
        for p in sieve(30):
            for q in sieve(30):
                a = classify_hilbert_class_field(d, p, q)
                assert a.verdict is classify_quadratic(d, p, q).verdict
                assert a.certificate.descent in ("descent", "descent-generic")
