"""The exponential sums of splitting signs against coordinate phases.

Three independent routes to the same value:

* brute force over the enumerated coset parameters,
* closed forms at prime powers assembled from Gauss sums,
* a general evaluator that peels odd primes by twisted multiplicativity and
  finishes at a dyadic or unit leaf.

Everything is exact CycElem arithmetic; the test suite pits the routes
against each other.
"""
from __future__ import annotations

from functools import lru_cache
from math import gcd, lcm

from .arith import euler_phi, factorize, hilbert_real, kronecker, two_valuation, valuation
from .charsums import gauss_sum, gauss_sum_even
from .cosets import BRUTE_FORCE_CAP, enumerate_bruteforce
from .cyclotomic import CycElem
from .splitting import splitting_sign

ZERO = CycElem(1)
ONE = CycElem.from_int(1)


def _g(p: int, char_exp: int, m: int, mod_exp: int) -> CycElem:
    """Gauss sum with character (x/p^char_exp) at modulus p^mod_exp.

    The character only depends on the parity of char_exp, so the exponent is
    reduced mod 2 to keep the divisibility d | n of the plain definition.
    """
    if mod_exp == 0:
        return ONE
    d = p if char_exp % 2 else 1
    return gauss_sum(d, m, p**mod_exp)


def _g_eps(eps: int, char_exp: int, m: int, mod_exp: int) -> CycElem:
    """Dyadic Gauss sum over x = eps (mod 4), extended down to modulus 2.

    At modulus 2 the only representative is x = 1, so the eps = -1 branch is
    empty; this is the reading under which the k = l factorization below
    reproduces the brute-force sum.
    """
    if mod_exp >= 3 or (mod_exp == 2 and char_exp % 2 == 0):
        return gauss_sum_even(eps, char_exp % 2 if mod_exp < 3 else char_exp, m, mod_exp)
    if mod_exp == 1:
        if char_exp % 2:
            raise ValueError("odd character exponent is ill-defined at modulus 2")
        if eps % 4 == 1:
            return CycElem(2, {m % 2: 1})
        return ZERO
    raise ValueError("dyadic Gauss sum not defined here")


def _delta_divides(pk: int, m: int) -> int:
    return 1 if m % pk == 0 else 0


# ---------------------------------------------------------------------------
# brute force


def exp_sum_bruteforce_many(
    a1: int, a2: int, m_pairs: list[tuple[int, int]]
) -> dict[tuple[int, int], CycElem]:
    """One enumeration, many phase indices: {(m1, m2): sum}."""
    if a1 == 0 or a2 == 0:
        raise ValueError("leading coordinates must be nonzero")
    if abs(a1 * a2) > BRUTE_FORCE_CAP:
        raise ValueError("pair exceeds the brute-force cap")
    n = lcm(abs(a1), abs(a2))
    k1, k2 = n // a1, n // a2
    weighted = [
        (splitting_sign(p), p.b1 * k1 % n, p.b2 * k2 % n)
        for p in enumerate_bruteforce(a1, a2).elements
    ]
    out = {}
    for m1, m2 in m_pairs:
        acc: dict[int, int] = {}
        for s, j1, j2 in weighted:
            j = (m1 * j1 + m2 * j2) % n
            acc[j] = acc.get(j, 0) + s
        out[(m1, m2)] = CycElem(n, acc)
    return out


def exp_sum_bruteforce(a1: int, a2: int, m1: int, m2: int) -> CycElem:
    return exp_sum_bruteforce_many(a1, a2, [(m1, m2)])[(m1, m2)]


# ---------------------------------------------------------------------------
# closed forms at odd prime powers


@lru_cache(maxsize=None)
def exp_sum_prime_odd(p: int, k: int, l: int, mu: int, m1: int, m2: int) -> CycElem:
    """Closed form of the sum for the pair (p^k, mu p^l), p an odd prime."""
    if p == 2 or p < 3 or not _is_odd_prime(p):
        raise ValueError("p must be an odd prime")
    if mu not in (1, -1) or k < l or l < 0:
        raise ValueError("requires mu = +-1 and k >= l >= 0")
    if k == 0:
        return ONE if mu == -1 else ZERO
    if l == 0:
        if (p**k + mu) % 4 == 0:
            return _g(p, k, m1, k)
        return ZERO
    if k > l:
        if (p ** (k - l) + mu) % 4:
            return ZERO
        total = p**l * _g(p, l, m2, l) * _g(p, k, m1, k - l)
        phi = euler_phi(p**l)
        for i in range(l % 2, l, 2):
            total = total + phi * (_g(p, i, m2, i) * _g(p, k, m1, k - i))
        return total
    # k == l
    if mu == 1:
        return ZERO
    total = ZERO
    for i in range(1, k):
        total = total + p ** (k - i) * (
            _g(p, i, m2, i) * _g(p, k - i, -m2, i) * _g(p, k, m1, k - i)
        )
    if k % 2 == 0:
        pk = p**k
        corr = (
            _delta_divides(pk, m1) * pk
            + _delta_divides(pk, m2) * pk
            - _delta_divides(pk // p, m1) * (pk // p)
        )
        total = total + euler_phi(pk) * corr
    return total


def _is_odd_prime(p: int) -> bool:
    from .arith import is_prime

    return p % 2 == 1 and is_prime(p)


# ---------------------------------------------------------------------------
# closed forms at powers of two


@lru_cache(maxsize=None)
def exp_sum_prime_two(k: int, l: int, mu: int, m1: int, m2: int) -> CycElem:
    """Closed form for the pair (2^k, mu 2^l), k >= l >= 0."""
    if mu not in (1, -1) or k < l or l < 0:
        raise ValueError("requires mu = +-1 and k >= l >= 0")
    if k == 0:
        return ONE if mu == -1 else ZERO
    if k > l:
        if l < 2:
            return ZERO
        if k - l == 1:
            prefactor, flip = (-mu) ** l, True
        elif k - l == 2:
            prefactor, flip = (-1) ** l, False
        else:
            prefactor, flip = 1, False
        total = ZERO
        for i in range(l % 2, l - 1, 2):
            if flip:
                pair = _g_eps(1, k, m1, k - i) * _g_eps(-1, l, m2, i + 2) + (-mu) * (
                    _g_eps(-1, k, m1, k - i) * _g_eps(1, l, m2, i + 2)
                )
            else:
                pair = _g_eps(1, k, m1, k - i) * _g_eps(1, l, m2, i + 2) + (-mu) * (
                    _g_eps(-1, k, m1, k - i) * _g_eps(-1, l, m2, i + 2)
                )
            total = total + pair
        return prefactor * 2**l * total
    # k == l > 0
    if mu == -1:
        if k % 2:
            return ZERO
        pk = 1 << k
        corr = (
            _delta_divides(pk, m1) * pk
            + _delta_divides(pk, m2) * pk
            - _delta_divides(pk >> 1, m1) * (pk >> 1)
        )
        total: CycElem = CycElem.from_int(corr)
        for i in range(1, k):
            total = total + (-1) ** i * (_g(2, 0, m1, k - i) * _g(2, 0, m2, i))
        for i in range(1, k):
            if m2 % (1 << (i - 1)) == 0:
                total = total + (1 << (i - 1)) * _g(2, 0, m1, k - i)
        return pk * total
    if k % 2:
        return ZERO
    total = ZERO
    for i in range(k):
        left = _g_eps(1, 2, m1, k - i) + (-1) ** (i + 1) * _g_eps(-1, 2, m1, k - i)
        right = _g_eps(1, 2, m2, i + 1) + (-1) ** i * _g_eps(-1, 2, m2, i + 1)
        total = total + left * right
    return (1 << k) * total


# ---------------------------------------------------------------------------
# general evaluator


def _inv_times(a: int, n: int, m: int) -> int:
    """(a^{-1} mod n) * m, with the modulus-1 inverse taken as 1."""
    if n == 1:
        return m
    return pow(a, -1, n) * m


def _prime_leaf(p: int, k: int, l: int, eps: int, m1: int, m2: int) -> CycElem:
    """Sum for (p^k, eps p^l) with either exponent order, via the symmetries."""
    if k < l:
        if eps == 1:
            return -_prime_leaf(p, l, k, 1, -m2, -m1)
        return _prime_leaf(p, l, k, -1, -m2, m1)
    if p == 2:
        return exp_sum_prime_two(k, l, eps, m1, m2)
    return exp_sum_prime_odd(p, k, l, eps, m1, m2)


def exp_sum(a1: int, a2: int, m1: int, m2: int) -> CycElem:
    """The exponential sum for any nonzero pair, by twisted multiplicativity.

    Sign and valuation symmetries first normalize to a1 > 0 with the dyadic
    part of a1 at least that of a2; odd primes are then split off largest
    first, and the remaining dyadic or unit pair is evaluated in closed form.
    """
    if a1 == 0 or a2 == 0:
        raise ValueError("leading coordinates must be nonzero")
    if (a1 + a2) % 4:
        return ZERO
    if a1 < 0:
        return exp_sum(-a1, -a2, m1, -m2)
    if two_valuation(a2) > two_valuation(a1):
        if a2 > 0:
            return -exp_sum(a2, a1, -m2, -m1)
        return exp_sum(-a2, -a1, -m2, m1)
    odd_primes = sorted(
        {q for q, _ in factorize(a1)[1] + factorize(a2)[1] if q != 2}, reverse=True
    )
    if not odd_primes:
        k, l = two_valuation(a1), two_valuation(abs(a2))
        assert a1 == 1 << k and abs(a2) == 1 << l
        return _prime_leaf(2, k, l, 1 if a2 > 0 else -1, m1, m2)
    p = odd_primes[0]
    k = valuation(a1, p)
    l = valuation(a2, p)
    big1, big2 = p**k, p**l
    rest1, rest2 = a1 // big1, a2 // big2
    mu = kronecker(-1, -big1 * big2)
    correction = kronecker(rest2, kronecker(-1, big1) * big1) * kronecker(rest1, big2)
    # Index twists come from the Bezout split of the composite phase
    # denominators; the second-coordinate ones pick up mu and the quadratic
    # sign of big2 because the coset bijection twists that slot.
    left = _prime_leaf(
        p, k, l, mu, _inv_times(rest1, big1, m1), mu * _inv_times(rest2, big2, m2)
    )
    if left.is_zero():
        return ZERO
    right = exp_sum(
        rest1,
        -mu * rest2,
        _inv_times(big1, rest1, m1),
        kronecker(-1, big2) * _inv_times(big2, abs(rest2), m2),
    )
    return correction * (left * right)


# ---------------------------------------------------------------------------
# Gauss-product rewriting at odd prime powers (prime-power phase indices)


def exp_sum_gauss_form(p: int, k: int, l: int, mu: int, r1: int, r2: int) -> CycElem:
    """Product-of-Gauss-sums form of the sum for (p^k, mu p^l) at phase
    indices (p^r1, p^r2); p odd, r1, r2 >= 0."""
    if not _is_odd_prime(p):
        raise ValueError("p must be an odd prime")
    if r1 < 0 or r2 < 0:
        raise ValueError("phase exponents must be >= 0")
    if mu not in (1, -1) or k < l or l < 0 or k == 0:
        raise ValueError("requires mu = +-1 and k >= l >= 0 with k > 0")
    if k > l:
        if (p ** (k - l) + mu) % 4:
            return ZERO
        total = ZERO
        for i in range(l + 1):
            total = total + (
                _gp(p, i, i, i) * _gp(p, l - i, r2, l - i) * _gp(p, k, r1 + l - i, k)
            )
        return total
    if mu == 1:
        return ZERO
    # The minus sign rides on the third factor; putting it on the first is
    # only equivalent for even k or p = 1 mod 4 (brute force pins this).
    total = ZERO
    for i in range(k):
        total = total + (
            _gp(p, i, r2, i) * _gp(p, k, r1 + i, k) * _gp_neg(p, k - i, r2 + k - 2 * i, k - i)
        )
    if r2 >= k:
        total = total + p**k * _gp(p, k, k, k)
    return total


def _gp(p: int, char_exp: int, m_exp: int, mod_exp: int) -> CycElem:
    # negative phase exponents denote scaled-down sums that vanish identically
    if m_exp < 0:
        return ZERO
    return _g(p, char_exp, p**m_exp, mod_exp)


def _gp_neg(p: int, char_exp: int, m_exp: int, mod_exp: int) -> CycElem:
    if m_exp < 0:
        return ZERO
    return _g(p, char_exp, -(p**m_exp), mod_exp)


# ---------------------------------------------------------------------------
# the (0, 0) phase: an integer-valued, genuinely multiplicative special case


def _const_pp(p: int, k: int, l: int) -> int:
    """Integer value of the sum for (p^k, -p^l) at phase (0, 0), k, l >= 0."""
    if k < l:
        k, l = l, k
    if k == 0:
        return 1
    if p == 2:
        if l < 2 or k % 2 or l % 2:
            return 0
        if k == l:
            return (k + 4) << (2 * k - 2)
        return (l // 2) << (k + l - 1)
    if k % 2 or l % 2:
        return 0
    if l == 0:
        return euler_phi(p**k)
    if k == l:
        pk = p**k
        return euler_phi(pk) * p ** (k - 2) * (
            (k + 2) // 2 * p * p - (k - 1) * p + (k - 2) // 2
        )
    return euler_phi(p ** (k - 1)) * euler_phi(p**l) * ((l + 2) // 2 * p - (l - 2) // 2)


def exp_sum_constant(a1: int, a2: int) -> int:
    """The (0,0)-phase sum as a plain integer, via true multiplicativity."""
    if a1 == 0 or a2 == 0:
        raise ValueError("leading coordinates must be nonzero")
    if a1 < 0:
        a1, a2 = -a1, -a2
    if a2 > 0 or (a1 + a2) % 4:
        return 0
    a2 = -a2
    out = 1
    for q in {q for q, _ in factorize(a1)[1] + factorize(a2)[1]}:
        out *= _const_pp(q, valuation(a1, q) if a1 % q == 0 else 0,
                         valuation(a2, q) if a2 % q == 0 else 0)
        if not out:
            return 0
    return out
