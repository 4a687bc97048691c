"""Exact integer arithmetic and the quadratic-symbol zoo.

Everything here works on plain Python ints (arbitrary precision) or, for the
real Hilbert symbol, anything ordered against zero.  The Kronecker symbol is
the full extension of the Legendre/Jacobi symbol to arbitrary integer
denominators, including 2, negative values, and 0.
"""

from __future__ import annotations

import math

from .errors import ConsistencyError, DomainError


def sign(n) -> int:
    return 1 if n > 0 else (-1 if n < 0 else 0)


def val2(n: int) -> tuple[int, int]:
    """Split nonzero n as 2**e * odd; return (e, odd) with sign(odd) = sign(n)."""
    if n == 0:
        raise DomainError("val2(0) is undefined")
    e = ((n if n > 0 else -n) & -(n if n > 0 else -n)).bit_length() - 1
    return e, n >> e


def odd_part(n: int) -> int:
    return val2(n)[1]


def hilbert_real(a, b) -> int:
    """Real Hilbert symbol: -1 iff both arguments are negative, else +1.

    A single zero argument is allowed and treated as +1; this extension keeps
    kronecker(0, -1) = +1, matching the convention that the symbol is 1
    whenever numerator and denominator are coprime.
    """
    if a == 0 and b == 0:
        raise DomainError("hilbert_real(0, 0) is undefined")
    return -1 if (a < 0 and b < 0) else 1


def kronecker(k: int, n: int) -> int:
    """Kronecker symbol (k/n) for arbitrary integers.

    Multiplicative over the factorization of n, with (k/2) = 0 for even k and
    (-1)**((k*k-1)//8) for odd k, (k/-1) the real Hilbert symbol against -1,
    and (k/0) = 1 if k = +-1 else 0.  Uses the binary Jacobi algorithm; no
    factoring is ever performed.
    """
    if n == 0:
        return 1 if k in (1, -1) else 0
    result = 1
    if n < 0:
        n = -n
        if k < 0:
            result = -1
    if n % 2 == 0:
        if k % 2 == 0:
            return 0
        e, n = val2(n)
        if e % 2 == 1 and k % 8 in (3, 5):
            result = -result
    # n is now odd and positive: standard binary Jacobi loop.
    k %= n
    while k:
        while k % 2 == 0:
            k //= 2
            if n % 8 in (3, 5):
                result = -result
        k, n = n, k
        if k % 4 == 3 and n % 4 == 3:
            result = -result
        k %= n
    return result if n == 1 else 0


def is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def legendre_oracle(k: int, p: int) -> int:
    """Legendre symbol decided by exhaustive squaring of residues mod p.

    Deliberately independent of kronecker(): used to cross-check it.
    """
    if not is_odd_prime(p):
        raise DomainError(f"{p} is not an odd prime")
    r = k % p
    if r == 0:
        return 0
    squares = {i * i % p for i in range(1, p)}
    return 1 if r in squares else -1


def invmod(a: int, m: int) -> int:
    """Inverse of a modulo m > 0."""
    if m <= 0:
        raise DomainError("modulus must be positive")
    return pow(a, -1, m)


def crt(r1: int, m1: int, r2: int, m2: int) -> tuple[int, int]:
    """Solve x = r1 (mod m1), x = r2 (mod m2); return (x, lcm(m1, m2)).

    Moduli need not be coprime; an inconsistent pair raises ConsistencyError.
    """
    if m1 <= 0 or m2 <= 0:
        raise DomainError("moduli must be positive")
    g = math.gcd(m1, m2)
    if (r2 - r1) % g:
        raise ConsistencyError(f"incompatible congruences mod {m1} and {m2}")
    l = m1 // g * m2
    t = (r2 - r1) // g * invmod(m1 // g, m2 // g) % (m2 // g) if m2 != g else 0
    return (r1 + m1 * t) % l, l


def smallest_positive_cong(r: int, m: int) -> int:
    """Smallest positive integer congruent to r modulo |m| (m nonzero)."""
    if m == 0:
        raise DomainError("zero modulus")
    v = r % abs(m)
    return v if v > 0 else v + abs(m)
