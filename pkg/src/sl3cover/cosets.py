"""Enumeration of the double-coset parameter sets S(a1, a2).

Brute force solves the quadric congruence directly over the fundamental
domain b1/a1, b2/a2, c2/(4 a2) in [0, 1); the closed enumerations materialize
the per-case descriptions at prime powers and for coprime pairs.  Both
produce identical, fully normalized coordinate tuples, so set comparison is
literal.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .arith import crt_pair, kronecker, mod_inverse
from .sl3 import ScaledPlucker

BRUTE_FORCE_CAP = 50_000


@dataclass(frozen=True)
class CosetSet:
    a1: int
    a2: int
    elements: tuple[ScaledPlucker, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def astuples(self) -> set[tuple[int, ...]]:
        return {p.astuple() for p in self.elements}


def _fund_range(a: int) -> range:
    # b with b/a in [0, 1): [0, a) for a > 0, (a, 0] for a < 0
    return range(0, a) if a > 0 else range(a + 1, 1)


def normalize(p: ScaledPlucker) -> ScaledPlucker:
    """Double-coset representative with b1/a1, b2/a2, c2/(4 a2) in [0, 1)."""
    a1, b1, c1, a2, b2, c2 = p.astuple()
    if a1 == 0 or a2 == 0:
        raise ValueError("normalization needs nonzero leading coordinates")
    x = b1 // a1  # floor division keeps b1 - a1*x in the fundamental domain
    y = -(b2 // a2)
    c2_shifted = c2 + 4 * b2 * x
    b1_new = b1 - a1 * x
    b2_new = b2 + a2 * y
    # Python's mod tracks the divisor sign, landing exactly in the
    # fundamental domain: [0, 4 a2) for a2 > 0 and (4 a2, 0] for a2 < 0.
    c2_new = c2_shifted % (4 * a2)
    num = a1 * c2_new + 4 * b1_new * b2_new
    if num % a2:
        raise ValueError("coordinates violate the quadric congruence")
    c1_new = -num // a2
    return ScaledPlucker(a1, b1_new, c1_new, a2, b2_new, c2_new)


def enumerate_bruteforce(a1: int, a2: int) -> CosetSet:
    """All normalized coordinate tuples with leading pair (a1, a2)."""
    if a1 == 0 or a2 == 0:
        raise ValueError("leading coordinates must be nonzero")
    if abs(a1 * a2) > BRUTE_FORCE_CAP:
        raise ValueError(
            f"|a1*a2| > {BRUTE_FORCE_CAP}: use the closed enumeration for large pairs"
        )
    found = []
    if (a1 + a2) % 4:
        return CosetSet(a1, a2, ())
    m = abs(a2)
    for b1 in _fund_range(a1):
        for b2 in _fund_range(a2):
            # a1*c2 = -4 b1 b2 (mod a2) combined with c2 = -1 (mod 4)
            g = gcd(a1, m)
            if (4 * b1 * b2) % g:
                continue
            m_red = m // g
            if m_red > 1:
                r = (-4 * b1 * b2 // g) * pow(a1 // g, -1, m_red) % m_red
                sol = crt_pair(r, m_red, 3, 4)
            else:
                sol = (3, 4)
            if sol is None:
                continue
            r0, step = sol
            lo, hi = (0, 4 * a2) if a2 > 0 else (4 * a2 + 1, 1)
            first = lo + (r0 - lo) % step
            for c2 in range(first, hi, step):
                c1 = -(a1 * c2 + 4 * b1 * b2) // a2
                if c1 % 4 != 3:
                    continue
                if gcd(gcd(a1, b1), c1) != 1 or gcd(gcd(a2, b2), c2) != 1:
                    continue
                found.append(ScaledPlucker(a1, b1, c1, a2, b2, c2))
    return CosetSet(a1, a2, tuple(sorted(found, key=lambda p: p.astuple())))


def _build(a1, b1, a2, b2, c2) -> ScaledPlucker:
    c1 = -(a1 * c2 + 4 * b1 * b2) // a2
    return ScaledPlucker(a1, b1, c1, a2, b2, c2)


def enumerate_coprime(a1: int, a2: int) -> CosetSet:
    """Closed enumeration for coprime (a1, a2); the count is phi(a1) phi(|a2|)."""
    if a1 == 0 or a2 == 0 or gcd(a1, abs(a2)) != 1:
        raise ValueError("requires nonzero coprime leading coordinates")
    if (a1 + a2) % 4:
        return CosetSet(a1, a2, ())
    out = []
    for b1 in _fund_range(a1):
        if gcd(b1, a1) != 1:
            continue
        for b2 in _fund_range(a2):
            if gcd(b2, a2) != 1:
                continue
            if abs(a2) > 1:
                r = (-4 * b1 * b2) * pow(a1, -1, abs(a2)) % abs(a2)
                c2, step = crt_pair(r, abs(a2), 3, 4)
            else:
                c2, step = 3, 4
            lo = 0 if a2 > 0 else 4 * a2 + 1
            c2 = lo + (c2 - lo) % step
            out.append(_build(a1, b1, a2, b2, c2))
    return CosetSet(a1, a2, tuple(sorted(out, key=lambda p: p.astuple())))


def _c2_domain(a2: int, unit: bool, p: int | None = None):
    """c2 = -1 (mod 4) in the fundamental domain, optionally coprime to p."""
    lo, hi = (0, 4 * a2) if a2 > 0 else (4 * a2 + 1, 1)
    first = lo + (3 - lo) % 4
    for c2 in range(first, hi, 4):
        if unit and c2 % p == 0:
            continue
        yield c2


def _signed_units(bound: int, mu: int, p: int | None = None):
    """b with 0 < mu*b < bound, and p (when given) not dividing b."""
    for v in range(1, bound):
        if p is None or v % p:
            yield mu * v


def enumerate_closed(p: int, k: int, l: int, mu: int) -> CosetSet:
    """Closed enumeration of S(p^k, mu p^l) for prime p, k >= l >= 0."""
    if mu not in (1, -1):
        raise ValueError("mu must be +-1")
    if k < l or l < 0:
        raise ValueError("requires k >= l >= 0; use the symmetries to swap")
    a1, a2 = p**k, mu * p**l
    if (a1 + a2) % 4:
        return CosetSet(a1, a2, ())
    if l == 0:
        return enumerate_coprime(a1, a2)
    if p == 2:
        return _closed_two(k, l, mu)
    return _closed_odd(p, k, l, mu)


def _closed_odd(p: int, k: int, l: int, mu: int) -> CosetSet:
    a1, a2 = p**k, mu * p**l
    out = []
    if k > l:
        # b2 = 0 family: b1 a unit mod p^k, c2 a unit times the congruence class
        for b1 in range(a1):
            if b1 % p:
                for c2 in _c2_domain(a2, True, p):
                    out.append(_build(a1, b1, a2, 0, c2))
        # b2 != 0, valuation split i + j = l
        for i in range(1, l + 1):
            j = l - i
            for b1u in _signed_units(p ** (k - i), 1, p):
                b1 = b1u * p**i
                for b2u in _signed_units(p ** (l - j), mu, p):
                    b2 = b2u * p**j
                    unit_c2 = j > 0
                    for c2 in _c2_domain(a2, unit_c2, p):
                        out.append(_build(a1, b1, a2, b2, c2))
    else:
        # k == l and mu == -1 (mu == +1 is empty by the congruence)
        for c2 in _c2_domain(a2, True, p):
            out.append(_build(a1, 0, a2, 0, c2))  # both zero
            for b2 in _signed_units(p**k, -1):
                out.append(_build(a1, 0, a2, b2, c2))
            for b1 in _signed_units(p**k, 1):
                out.append(_build(a1, b1, a2, 0, c2))
        for i in range(1, k):
            for j in range(1, k):
                if i + j < k:
                    continue
                for b1u in _signed_units(p ** (k - i), 1, p):
                    b1 = b1u * p**i
                    for b2u in _signed_units(p ** (k - j), -1, p):
                        b2 = b2u * p**j
                        for c2 in _c2_domain(a2, True, p):
                            if i + j == k and (c2 + 4 * b1u * b2u) % p == 0:
                                continue
                            out.append(_build(a1, b1, a2, b2, c2))
    return CosetSet(a1, a2, tuple(sorted(out, key=lambda q: q.astuple())))


def _closed_two(k: int, l: int, mu: int) -> CosetSet:
    a1, a2 = 2**k, mu * 2**l
    out = []
    if k > l:
        if l < 2:
            return CosetSet(a1, a2, ())
        want = (mu + 2 ** (k - l)) % 4
        for i in range(0, l - 1):
            j = l - 2 - i
            if j < 0 or j >= l:
                continue
            for b1u in _signed_units(2 ** (k - i), 1, 2):
                b1 = b1u * 2**i
                for b2u in _signed_units(2 ** (l - j), mu, 2):
                    b2 = b2u * 2**j
                    if (b1u * b2u) % 4 != want:
                        continue
                    for c2 in _c2_domain(a2, False):
                        out.append(_build(a1, b1, a2, b2, c2))
    elif mu == -1:
        for c2 in _c2_domain(a2, False):
            out.append(_build(a1, 0, a2, 0, c2))
            for b2 in _signed_units(2**k, -1):
                out.append(_build(a1, 0, a2, b2, c2))
            for b1 in _signed_units(2**k, 1):
                out.append(_build(a1, b1, a2, 0, c2))
        for i in range(0, k):
            for j in range(0, k):
                if i + j < k:
                    continue
                for b1u in _signed_units(2 ** (k - i), 1, 2):
                    for b2u in _signed_units(2 ** (k - j), -1, 2):
                        for c2 in _c2_domain(a2, False):
                            out.append(_build(a1, b1u * 2**i, a2, b2u * 2**j, c2))
    else:
        for i in range(0, k):
            j = k - 1 - i
            for b1u in _signed_units(2 ** (k - i), 1, 2):
                for b2u in _signed_units(2 ** (k - j), 1, 2):
                    for c2 in _c2_domain(a2, False):
                        out.append(_build(a1, b1u * 2**i, a2, b2u * 2**j, c2))
    return CosetSet(a1, a2, tuple(sorted(out, key=lambda q: q.astuple())))


def smallest_gamma(alpha1: int, a2: int) -> int:
    """Smallest positive integer that is 1 mod 4 and alpha1 mod a2."""
    if abs(a2) == 1:
        return 1
    from .arith import crt

    r, m = crt([(1, 4), (alpha1 % abs(a2), abs(a2))])
    return r if r else m


def split_coset(
    x: ScaledPlucker, a1: int, a2: int, alpha1: int, alpha2: int
) -> tuple[ScaledPlucker, ScaledPlucker]:
    """The multiplicative bijection S(a1 alpha1, a2 alpha2) ->
    S(a1, mu a2) x S(alpha1, -mu alpha2), outputs normalized."""
    if a1 <= 0 or alpha1 <= 0:
        raise ValueError("requires a1, alpha1 > 0")
    if a1 % 2 == 0 or a2 % 2 == 0:
        raise ValueError("requires a1, a2 odd")
    if gcd(a1 * a2, alpha1 * alpha2) != 1:
        raise ValueError("requires coprime pairs")
    if (a1 * alpha1 + a2 * alpha2) % 4:
        raise ValueError("requires the mod-4 congruence on the product pair")
    if x.a1 != a1 * alpha1 or x.a2 != a2 * alpha2:
        raise ValueError("tuple does not match the declared factorization")
    mu = kronecker(-1, -a1 * a2)
    g = smallest_gamma(alpha1, a2)
    num = -a1 * g * x.c2 - 4 * x.b1 * x.b2
    if num % (mu * a2):
        raise ValueError("split numerator not divisible: inconsistent input")
    eps2 = kronecker(-1, a2)
    left = ScaledPlucker(a1, x.b1, num // (mu * a2), mu * a2, x.b2, g * x.c2)
    right = ScaledPlucker(
        alpha1,
        x.b1,
        eps2 * a2 * x.c1,
        -mu * alpha2,
        -eps2 * mu * x.b2,
        -mu * eps2 * a1 * x.c2,
    )
    return normalize(left), normalize(right)
