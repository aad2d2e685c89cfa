"""Integer primitives: primality, squarefree parts, Legendre symbols."""

from math import gcd, isqrt

from quatdiv.errors import DegenerateField, InvalidArgument

# Miller-Rabin with the first twelve prime bases is exact below 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_LIMIT = 1 << 64


def _check_range(n):
    if not -_LIMIT < n < _LIMIT:
        raise InvalidArgument(f"{n} is outside the 64-bit range")


def is_prime(n):
    _check_range(n)
    if n < 2:
        return False
    for b in _MR_BASES:
        if n % b == 0:
            return n == b
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factor(n):
    """Trial-division factorization of |n| as a dict {prime: exponent}."""
    n = abs(n)
    if n == 0:
        raise InvalidArgument("cannot factor 0")
    out = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    p = 5
    while p * p <= n:
        for f in (p, p + 2):
            while n % f == 0:
                out[f] = out.get(f, 0) + 1
                n //= f
        p += 6
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def squarefree_part(n):
    """Return (s, f) with n = s * f**2, s squarefree and of the same sign as n."""
    if n == 0:
        raise InvalidArgument("squarefree_part of 0")
    _check_range(n)
    s, f = 1, 1
    for p, e in factor(n).items():
        if e % 2:
            s *= p
        f *= p ** (e // 2)
    return (s if n > 0 else -s), f


def is_squarefree(n):
    return n != 0 and squarefree_part(n)[1] == 1


def is_square(n):
    return n >= 0 and isqrt(n) ** 2 == n


def valuation(n, p):
    """p-adic valuation of a nonzero integer."""
    if n == 0:
        raise InvalidArgument("valuation of 0")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


class PrimeArg(int):
    """A positive prime in the 64-bit range."""

    def __new__(cls, value):
        value = int(value)
        if not is_prime(value):
            raise InvalidArgument(f"{value} is not a positive prime")
        return super().__new__(cls, value)


class SquarefreeD(int):
    """A squarefree integer other than 0 and 1, possibly negative."""

    def __new__(cls, value):
        value = int(value)
        if value in (0, 1):
            raise InvalidArgument(f"d = {value} gives K = Q")
        if not is_squarefree(value):
            raise InvalidArgument(f"{value} is not squarefree")
        return super().__new__(cls, value)


def _jacobi(a, n):
    # binary reciprocity; n odd and positive
    a %= n
    acc = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                acc = -acc
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            acc = -acc
        a %= n
    return acc if n == 1 else 0


def legendre(a, p):
    """Legendre symbol (a/p) for an odd prime p; 0 when p divides a."""
    if p == 2:
        raise InvalidArgument("Legendre symbol needs an odd prime modulus")
    if p < 2 or not is_prime(p):
        raise InvalidArgument(f"{p} is not an odd prime")
    return _jacobi(a, p)


def sqf_product(a, b):
    """Squarefree part of a*b for squarefree a, b (signed)."""
    g = gcd(a, b)
    return (a // g) * (b // g)


def third_subfield(d1, d2):
    """Generator of the third quadratic subfield of Q(sqrt(d1), sqrt(d2)).

    Returns the signed squarefree part of d1*d2, so that Q(sqrt(d1*d2)) = Q(sqrt(d3)).
    """
    d1, d2 = SquarefreeD(d1), SquarefreeD(d2)
    d3 = sqf_product(int(d1), int(d2))
    if d3 == 1:
        raise DegenerateField(f"Q(sqrt({d1}), sqrt({d2})) is not biquadratic")
    return SquarefreeD(d3)
