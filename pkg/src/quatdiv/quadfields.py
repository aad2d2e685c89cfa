"""Quadratic field discriminants and splitting of rational primes in multiquadratic fields."""

import enum
from dataclasses import dataclass
from itertools import combinations

from quatdiv.arith import PrimeArg, SquarefreeD, _jacobi, sqf_product
from quatdiv.errors import DegenerateField, InvalidArgument


class SplitType(enum.Enum):
    RAMIFIED = "Ramified"
    SPLIT = "Split"
    INERT = "Inert"


def discriminant(d):
    d = int(d)
    return d if d % 4 == 1 else 4 * d


def _decomposition(d, p):
    if p == 2:
        r = d % 8
        if r == 1:
            return SplitType.SPLIT
        if r == 5:
            return SplitType.INERT
        return SplitType.RAMIFIED
    s = _jacobi(discriminant(d), p)
    if s == 0:
        return SplitType.RAMIFIED
    return SplitType.SPLIT if s == 1 else SplitType.INERT


def prime_decomposition(d, p):
    """How the rational prime p decomposes in Q(sqrt(d))."""
    return _decomposition(int(SquarefreeD(d)), int(PrimeArg(p)))


@dataclass(frozen=True)
class QuadField:
    d: int
    disc: int

    @classmethod
    def of(cls, d):
        d = int(SquarefreeD(d))
        return cls(d, discriminant(d))


@dataclass(frozen=True)
class MultiQuadField:
    """Q(sqrt(d_1), ..., sqrt(d_n)) with Galois group (Z/2)^n.

    Construction rejects repeated generators and any sub-list whose product is
    a square, since then the composite has smaller degree.
    """

    ds: tuple

    def __post_init__(self):
        ds = tuple(int(SquarefreeD(d)) for d in self.ds)
        if not ds:
            raise InvalidArgument("a multiquadratic field needs at least one generator")
        if len(set(ds)) != len(ds):
            raise DegenerateField(f"repeated generator in {list(ds)}")
        for k in range(2, len(ds) + 1):
            for sub in combinations(ds, k):
                s = 1
                for d in sub:
                    s = sqf_product(s, d)
                if s == 1:
                    raise DegenerateField(f"product of {list(sub)} is a square")
        object.__setattr__(self, "ds", ds)

    @property
    def rank(self):
        return len(self.ds)

    @property
    def subfields(self):
        return tuple(QuadField(d, discriminant(d)) for d in self.ds)


def splits_completely_ds(ds, p):
    # p splits completely in the composite iff it splits in every Q(sqrt(d_i))
    return all(_decomposition(d, p) is SplitType.SPLIT for d in ds)


def splits_completely(field, p):
    if not isinstance(field, MultiQuadField):
        field = MultiQuadField(tuple(field))
    return splits_completely_ds(field.ds, int(PrimeArg(p)))
