"""Odd-degree descent for S3 Kummer fields and Hilbert class fields.

A quaternion algebra over F splits over an odd-degree extension K/F iff it
already splits over F.  Both K = Q(zeta_3, alpha^(1/3)) over F = Q(sqrt(-3))
and the Hilbert class field of an imaginary quadratic F with odd prime class
number are such extensions, so the answer is read off over F.
"""

from dataclasses import dataclass, replace
from math import gcd

from quatdiv.arith import PrimeArg, SquarefreeD, _jacobi, factor, is_prime
from quatdiv.classify import classify_quadratic
from quatdiv.errors import HypothesisViolation, InvalidArgument
from quatdiv.quadfields import discriminant


def class_number_imag_quadratic(d):
    """Class number of Q(sqrt(d)), d < 0, by counting reduced primitive forms.

    A form (a, b, c) with b^2 - 4ac = disc is reduced when |b| <= a <= c,
    with b >= 0 whenever |b| == a or a == c.
    """
    d = int(SquarefreeD(d))
    if d > 0:
        raise InvalidArgument("class numbers are only computed for imaginary quadratic fields")
    D = discriminant(d)
    h = 0
    a = 1
    while 3 * a * a <= -D:
        for b in range(-a + 1, a + 1):
            num = b * b - D
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a or (b < 0 and a == c):
                continue
            if gcd(gcd(a, b), c) == 1:
                h += 1
        a += 1
    return h


def _is_cubefree(n):
    return all(e < 3 for e in factor(n).values())


@dataclass(frozen=True)
class KummerFieldDesc:
    """K = Q(zeta_3, alpha^(1/3)) for a cubefree integer alpha that is not a cube."""

    alpha: int

    def __post_init__(self):
        a = int(self.alpha)
        # +-1 are cubes, and K would collapse to Q(zeta_3)
        if a in (0, 1, -1):
            raise InvalidArgument(f"alpha = {a} does not give a degree-3 Kummer extension")
        if not _is_cubefree(a):
            raise InvalidArgument(f"alpha = {a} is not cubefree")
        object.__setattr__(self, "alpha", a)


@dataclass(frozen=True)
class HilbertClassFieldDesc:
    """Hilbert class field of Q(sqrt(d)), d < 0, whose class number h is an odd prime."""

    d: int
    h: int

    @classmethod
    def of(cls, d):
        return cls(int(d), class_number_imag_quadratic(d))

    def __post_init__(self):
        if int(SquarefreeD(self.d)) >= 0:
            raise InvalidArgument("the base field must be imaginary quadratic")
        if self.h != class_number_imag_quadratic(self.d):
            raise HypothesisViolation(f"h = {self.h} is not the class number of Q(sqrt({self.d}))")
        if self.h == 2 or not is_prime(self.h):
            raise HypothesisViolation(
                f"class number of Q(sqrt({self.d})) is {self.h}, not an odd prime"
            )


def _in_named_hypotheses(p, q):
    # the three prime-pair families for which the descent is stated explicitly;
    # H(p, q) = H(q, p), so each family is tested in both orders
    for a, b in ((p, q), (q, p)):
        if b == 2 and a % 8 == 3:
            return True
        if a == b or 2 in (a, b):
            continue
        if (a % 4 == 1 or b % 4 == 1) and _jacobi(a, b) == -1:
            return True
        if a % 4 == 3 and b % 4 == 3 and _jacobi(b, a) != 1:
            return True
    return False


def _descend(d, p, q):
    p, q = int(PrimeArg(p)), int(PrimeArg(q))
    base = classify_quadratic(d, p, q)
    tag = "descent" if _in_named_hypotheses(p, q) else "descent-generic"
    return replace(base, certificate=replace(base.certificate, descent=tag))


def classify_kummer_s3(desc, p, q):
    if not isinstance(desc, KummerFieldDesc):
        desc = KummerFieldDesc(desc)
    return _descend(-3, p, q)


def classify_hilbert_class_field(desc, p, q):
    if not isinstance(desc, HilbertClassFieldDesc):
        desc = HilbertClassFieldDesc.of(desc)
    return _descend(desc.d, p, q)
