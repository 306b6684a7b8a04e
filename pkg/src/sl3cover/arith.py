"""Integer utilities: quadratic symbols, factorization, CRT.

Python ints are arbitrary precision already, so everything here is a plain
function on int.  The Kronecker symbol follows the standard extension of the
Jacobi symbol to all integer denominators (including 0 and negatives), with
(k/-1) given by the real Hilbert symbol.
"""
from __future__ import annotations

import math
from functools import lru_cache


def sign(n: int) -> int:
    return (n > 0) - (n < 0)


def hilbert_real(a: int, b: int) -> int:
    """Real Hilbert symbol: -1 iff both arguments are negative."""
    if a == 0 or b == 0:
        raise ValueError("hilbert_real requires nonzero arguments")
    return -1 if (a < 0 and b < 0) else 1


def kronecker(k: int, n: int) -> int:
    """Kronecker symbol (k/n), defined for all integers n.

    (k/0) is 1 for k = +-1 and 0 otherwise; (k/-1) is -1 iff k < 0.
    """
    if n == 0:
        return 1 if k in (1, -1) else 0
    result = 1
    if n < 0:
        n = -n
        if k < 0:
            result = -result
    if n % 2 == 0:
        if k % 2 == 0:
            return 0
        t = 0
        while n % 2 == 0:
            n //= 2
            t += 1
        if t % 2 and k % 8 in (3, 5):
            result = -result
    # Jacobi symbol for odd positive n.
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


def two_valuation(n: int) -> int:
    if n == 0:
        raise ValueError("two_valuation(0) is undefined")
    return (abs(n) & -abs(n)).bit_length() - 1


def odd_part(n: int) -> int:
    """Signed odd part: odd_part(-24) == -3."""
    return n >> two_valuation(n) if n else _raise_zero()


def _raise_zero():
    raise ValueError("odd_part(0) is undefined")


def valuation(n: int, p: int) -> int:
    if n == 0:
        raise ValueError("valuation of 0 is undefined")
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


@lru_cache(maxsize=None)
def _factorize_abs(n: int) -> tuple[tuple[int, int], ...]:
    out = []
    e = two_valuation(n)
    if e:
        out.append((2, e))
        n >>= e
    p = 3
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def factorize(n: int) -> tuple[int, list[tuple[int, int]]]:
    """Sign and ascending prime factorization; factorize(-9) == (-1, [(3, 2)])."""
    if n == 0:
        raise ValueError("factorize(0) is undefined")
    return sign(n), list(_factorize_abs(abs(n)))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    facs = _factorize_abs(n)
    return len(facs) == 1 and facs[0][1] == 1


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("euler_phi requires n >= 1")
    out = 1
    for p, e in _factorize_abs(n):
        out *= (p - 1) * p ** (e - 1)
    return out


def divisors(n: int) -> list[int]:
    """Positive divisors of |n| in ascending order."""
    out = [1]
    for p, e in _factorize_abs(abs(n)):
        out = [d * p**k for d in out for k in range(e + 1)]
    return sorted(out)


def mod_inverse(a: int, n: int) -> int:
    if n < 1:
        raise ValueError("modulus must be positive")
    if math.gcd(a, n) != 1:
        raise ValueError(f"{a} is not invertible mod {n}")
    return pow(a, -1, n)


def crt_pair(r1: int, m1: int, r2: int, m2: int) -> tuple[int, int] | None:
    """Solve x = r1 (mod m1), x = r2 (mod m2); moduli need not be coprime.

    Returns (x, lcm(m1, m2)) or None when the congruences are incompatible.
    """
    g = math.gcd(m1, m2)
    if (r2 - r1) % g:
        return None
    l = m1 // g * m2
    t = ((r2 - r1) // g * pow(m1 // g, -1, m2 // g)) % (m2 // g)
    return (r1 + m1 * t) % l, l


def crt(pairs: list[tuple[int, int]]) -> tuple[int, int]:
    """Simultaneous congruences x = r (mod m) for (r, m) in pairs.

    Returns (x, M) with 0 <= x < M = lcm of the moduli; raises ValueError
    when the system is incompatible.
    """
    r, m = 0, 1
    for r2, m2 in pairs:
        if m2 < 1:
            raise ValueError("moduli must be positive")
        combined = crt_pair(r, m, r2 % m2, m2)
        if combined is None:
            raise ValueError("incompatible congruences")
        r, m = combined
    return r, m


def primes_up_to(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [i for i, b in enumerate(sieve) if b]
