"""Small exact integer helpers shared by the field constructions and the sieve.

Everything here is integer-only; no floats anywhere.
"""

from __future__ import annotations

import math
from functools import lru_cache


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization as {prime: exponent}. Trial division; fine for n <= ~10**12."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_power(q: int) -> tuple[int, int] | None:
    """Return (p, f) with q = p**f, or None if q is not a prime power >= 2."""
    if q < 2:
        return None
    fac = factorize(q)
    if len(fac) != 1:
        return None
    (p, f), = fac.items()
    return p, f


def prime_powers_upto(lo: int, hi: int) -> list[int]:
    return [q for q in range(lo, hi + 1) if prime_power(q) is not None]


def is_perfect_square(n: int) -> tuple[bool, int]:
    """Certified integer square test: returns (is_square, isqrt(n)) with r*r <= n < (r+1)**2."""
    if n < 0:
        return False, 0
    r = math.isqrt(n)
    return r * r == n, r


@lru_cache(maxsize=None)
def smallest_primitive_root(p: int) -> int:
    """Smallest primitive root mod a prime p."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2:
        return 1
    order_facs = list(factorize(p - 1))
    for g in range(2, p):
        if all(pow(g, (p - 1) // ell, p) != 1 for ell in order_facs):
            return g
    raise AssertionError("unreachable: some residue is primitive")
