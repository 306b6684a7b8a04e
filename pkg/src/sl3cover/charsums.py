"""Quadratic Gauss sums, their dyadic refinements, and Kloosterman-type sums.

All values are exact CycElem; the Dirichlet-series partial sums at the end
are the only floating-point surface.
"""
from __future__ import annotations

from math import gcd

from .arith import euler_phi, kronecker, primes_up_to
from .cyclotomic import CycElem


def gauss_sum(d: int, m: int, n: int) -> CycElem:
    """sum over x in (Z/n)^* of (x/d) e^{2 pi i m x / n}; requires d | n."""
    if d < 1 or n < 1:
        raise ValueError("d and n must be positive")
    if n % d:
        raise ValueError("d must divide n")
    coeffs: dict[int, int] = {}
    for x in range(n):
        if gcd(x, n) == 1:
            chi = kronecker(x, d)
            if chi:
                j = (m * x) % n
                coeffs[j] = coeffs.get(j, 0) + chi
    return CycElem(n, coeffs)


def gauss_sum_even(eps: int, i: int, m: int, k: int) -> CycElem:
    """Dyadic Gauss sum over units x = eps (mod 4) of (Z/2^k), character (x/2^i).

    Well defined for k >= 3, and for k = 2 when i is even (trivial character).
    """
    if eps not in (1, -1):
        raise ValueError("eps must be +-1")
    if i < 0:
        raise ValueError("character exponent must be >= 0")
    if not (k >= 3 or (k == 2 and i % 2 == 0)):
        raise ValueError("modulus 2^k needs k >= 3, or k = 2 with even character exponent")
    n = 1 << k
    target = eps % 4
    coeffs: dict[int, int] = {}
    for x in range(1, n, 2):
        if x % 4 == target:
            chi = kronecker(x, 1 << i)
            j = (m * x) % n
            coeffs[j] = coeffs.get(j, 0) + chi
    return CycElem(n, coeffs)


EPSILON_EXPONENT = {1: 0, 3: 1}  # eps_d = i^e for odd d mod 4


def kloosterman_sum(kappa: int, n: int, c: int) -> CycElem:
    """sum over d mod 4c of eps_d^{-kappa} (4c/d) e(nd/4c); even d contribute 0."""
    if c < 1:
        raise ValueError("c must be positive")
    q = 4 * c
    plain: dict[int, int] = {}  # d = 1 mod 4 part
    twisted: dict[int, int] = {}  # d = 3 mod 4 part, carries i^{-kappa}
    for d in range(1, q, 2):
        chi = kronecker(q, d)
        if not chi:
            continue
        j = (n * d) % q
        bucket = plain if d % 4 == 1 else twisted
        bucket[j] = bucket.get(j, 0) + chi
    result = CycElem(q, plain)
    if twisted:
        result = result + CycElem.root(4, (-kappa) % 4) * CycElem(q, twisted)
    return result


def kloosterman_zero_value(kappa: int, n: int) -> CycElem:
    """Closed form of the Kloosterman-type sum at index 0 and modulus 4n."""
    if n < 1:
        raise ValueError("n must be positive")
    r = int(n**0.5)
    while r * r < n:
        r += 1
    if r * r != n:
        return CycElem(1)
    half_phi = euler_phi(4 * n) // 2
    return (CycElem.from_int(1) + CycElem.root(4, (-kappa) % 4)) * half_phi


def kloosterman_series_partial(
    eps: int, nu: complex, n: int, cutoff: int, prime_bound: int = 100_000
) -> complex:
    """Partial sum of eps*i*4^{-nu-1} zeta_2(2nu+1) sum_c c^{-nu-1} K_eps(-n; 4c)."""
    if eps not in (1, -1):
        raise ValueError("eps must be +-1")
    if complex(nu).real <= 1:
        raise ValueError("requires Re(nu) > 1")
    if cutoff < 0:
        raise ValueError("cutoff must be >= 0")
    if cutoff == 0:
        return 0j
    zeta2 = 1 + 0j
    for p in primes_up_to(prime_bound):
        if p != 2:
            zeta2 /= 1 - p ** (-(2 * nu + 1))
    total = 0j
    for c in range(1, cutoff + 1):
        k = kloosterman_sum(eps, -n, c)
        if k.coeffs:
            total += c ** (-nu - 1) * k.to_complex()
    return eps * 1j * 4 ** (-nu - 1) * zeta2 * total
