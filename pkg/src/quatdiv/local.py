"""Hilbert symbols over Q_v and an exhaustive local conic search."""

from functools import lru_cache

from quatdiv.arith import _jacobi, is_prime, valuation
from quatdiv.errors import InvalidArgument

# Sage's convention: the real place is written as the "prime" -1.
REAL_PLACE = -1


def _split_off(n, p):
    a = 0
    while n % p == 0:
        n //= p
        a += 1
    return a, n


def _eps(x):
    return ((x - 1) // 2) % 2


def _omega(x):
    return ((x * x - 1) // 8) % 2


def hilbert_symbol(a, b, v):
    """(a, b)_v for nonzero integers a, b; v a prime or REAL_PLACE."""
    if a == 0 or b == 0:
        raise InvalidArgument("Hilbert symbol needs nonzero arguments")
    if v == REAL_PLACE:
        return -1 if a < 0 and b < 0 else 1
    if v == 2:
        alpha, u = _split_off(a, 2)
        beta, w = _split_off(b, 2)
        e = _eps(u) * _eps(w) + alpha * _omega(w) + beta * _omega(u)
        return -1 if e % 2 else 1
    alpha, u = _split_off(a, v)
    beta, w = _split_off(b, v)
    s = -1 if (alpha * beta * ((v - 1) // 2)) % 2 else 1
    if beta % 2:
        s *= _jacobi(u, v)
    if alpha % 2:
        s *= _jacobi(w, v)
    return s


def conic_precision(a, b, p):
    """Power of p at which mod-p^k solvability of a x^2 + b y^2 = z^2 is decisive."""
    return valuation(4 * a * b, p) + (3 if p == 2 else 1)


@lru_cache(maxsize=256)
def _squares(m):
    return frozenset(z * z % m for z in range(m))


def conic_solvable_mod(a, b, p, k):
    """Whether a x^2 + b y^2 = z^2 has a primitive solution modulo p^k.

    Primitive means not all of x, y, z divisible by p.  Any such solution has
    x or y a unit (otherwise p | z too), and scaling by that unit's inverse
    normalizes it to 1, so the search runs over one free coordinate against
    the full table of squares mod p^k.
    """
    if a == 0 or b == 0:
        raise InvalidArgument("conic coefficients must be nonzero")
    if k < 1:
        raise InvalidArgument("precision k must be positive")
    if p < 2 or not is_prime(p):
        raise InvalidArgument(f"{p} is not a prime")
    m = p ** k
    if m >= 1 << 64:
        raise InvalidArgument(f"modulus {p}^{k} overflows 64 bits")
    sq = _squares(m)
    a %= m
    b %= m
    if any((a + b * t) % m in sq for t in sq):
        return True
    return any((a * t + b) % m in sq for t in sq)


def local_split(a, b, p):
    """Brute-force analogue of hilbert_symbol(a, b, p) == 1."""
    return conic_solvable_mod(a, b, p, conic_precision(a, b, p))
