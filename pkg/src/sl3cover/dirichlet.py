"""Numerical assembly of the constant-term data: zeta ratios, Euler factors,
the dyadic correction, and truncated-series cross-checks.

Everything here lives at Re(s) > 1, where truncated Euler products converge;
there is no analytic continuation.  Complex powers use the principal branch,
and all bases are positive reals so no ambiguity arises.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass
from functools import lru_cache

from .arith import euler_phi, primes_up_to
from .charsums import kloosterman_sum
from .expsums import exp_sum_constant

DEFAULT_PRIME_BOUND = 100_000
_POLE_EPS = 1e-9


class PoleProximityError(ValueError):
    """A denominator 1 - p^{-z} came within 1e-9 of zero."""


@dataclass(frozen=True)
class Spectral:
    """Spectral parameter (l1, l2, l3) with l1 + l2 + l3 = 0."""

    l1: complex
    l2: complex
    l3: complex

    def __post_init__(self):
        if abs(self.l1 + self.l2 + self.l3) > 1e-12:
            raise ValueError("spectral components must sum to zero")

    @property
    def x(self) -> complex:  # l1 - l2
        return self.l1 - self.l2

    @property
    def y(self) -> complex:  # l2 - l3
        return self.l2 - self.l3

    @property
    def z(self) -> complex:  # l1 - l3
        return self.l1 - self.l3


def _guard(denom: complex) -> complex:
    if abs(denom) < _POLE_EPS:
        raise PoleProximityError("evaluation point too close to a pole")
    return denom


@lru_cache(maxsize=32)
def _primes(bound: int) -> tuple[int, ...]:
    return tuple(primes_up_to(bound))


def zeta_product(s: complex, prime_bound: int = DEFAULT_PRIME_BOUND) -> complex:
    """Truncated Euler product for zeta(s); adequate at Re(s) > 1."""
    if complex(s).real <= 1:
        raise ValueError("truncated Euler product needs Re(s) > 1")
    out = 1 + 0j
    for p in _primes(prime_bound):
        out /= _guard(1 - p ** (-s))
    return out


def zeta_product_odd(s: complex, prime_bound: int = DEFAULT_PRIME_BOUND) -> complex:
    """The 2-less zeta: zeta(s) (1 - 2^{-s})."""
    return zeta_product(s, prime_bound) * (1 - 2 ** (-s))


def zeta_ratio(s: complex, prime_bound: int = DEFAULT_PRIME_BOUND) -> complex:
    """zeta(2s) / zeta_odd(2s + 1), the ratio attached to each positive root."""
    return zeta_product(2 * s, prime_bound) / zeta_product_odd(2 * s + 1, prime_bound)


def euler_factor_odd(p: int, lam: Spectral) -> complex:
    """p-factor of the big-cell constant-term Dirichlet series, odd p."""
    if p == 2:
        raise ValueError("use euler_factor_two at p = 2")
    num = (
        (1 - p ** (-2 * lam.x - 1))
        * (1 - p ** (-2 * lam.y - 1))
        * (1 - p ** (-2 * lam.z - 1))
    )
    den = (
        _guard(1 - p ** (-2 * lam.x))
        * _guard(1 - p ** (-2 * lam.y))
        * _guard(1 - p ** (-2 * lam.z))
    )
    return num / den


def dyadic_numerator(lam: Spectral) -> complex:
    return 1 - 2 ** (-2 * lam.x) - 2 ** (-2 * lam.y) + 6 * 2 ** (-2 * (lam.z + 1))


def dyadic_correction(lam: Spectral) -> complex:
    """The factor scaling the big-cell vector in the succinct constant term."""
    return 2 ** (2 + 2 * lam.z) * dyadic_numerator(lam)


def euler_factor_two(lam: Spectral) -> complex:
    den = (
        _guard(1 - 2 ** (-2 * lam.x))
        * _guard(1 - 2 ** (-2 * lam.y))
        * _guard(1 - 2 ** (-2 * lam.z))
    )
    return dyadic_numerator(lam) / den


def euler_factor(p: int, lam: Spectral) -> complex:
    return euler_factor_two(lam) if p == 2 else euler_factor_odd(p, lam)


def euler_factor_series(p: int, lam: Spectral, max_kl: int = 14) -> complex:
    """The same p-factor as a truncated double series over even prime powers."""
    total = 0j
    for k in range(max_kl + 1):
        for l in range(max_kl + 1 - k):
            c = exp_sum_constant(p ** (2 * k), -(p ** (2 * l)))
            if c:
                total += (
                    c
                    * (p ** (2 * k)) ** (-1 - lam.x)
                    * (p ** (2 * l)) ** (-1 - lam.y)
                )
    return total


def phi_square_check(
    s: complex, cutoff: int, prime_bound: int = DEFAULT_PRIME_BOUND
) -> tuple[complex, complex, float]:
    """Truncated sum_k phi(4k^2)/2 (2k)^{-2s} against 2^{-2s} zeta(2s-2)/zeta_odd(2s-1)."""
    if complex(s).real <= 1.5:
        raise ValueError("requires Re(s) > 3/2")
    lhs = sum(euler_phi(4 * k * k) / 2 * (2 * k) ** (-2 * s) for k in range(1, cutoff + 1))
    rhs = 2 ** (-2 * s) * zeta_product(2 * s - 2, prime_bound) / zeta_product_odd(
        2 * s - 1, prime_bound
    )
    return lhs, rhs, abs(lhs - rhs)


# ---------------------------------------------------------------------------
# the six constant-term coefficients


_WL_PERM = (3, 2, 1)  # long element: row i pivots at column 4 - i

# The six sign-permutation matrices of the succinct form, keyed by cell name;
# stored as (permutation sigma as a tuple, nothing else matters for roots).
_CELL_PERMS = {
    "b": (1, 2, 3),
    "wa1": (2, 1, 3),
    "wa2": (1, 3, 2),
    "wa1wa2": (3, 1, 2),
    "wa2wa1": (2, 3, 1),
    "wl": (3, 2, 1),
}

_POSITIVE_ROOTS = ((1, 2), (2, 3), (1, 3))


def _roots_for(perm: tuple[int, int, int]) -> list[tuple[int, int]]:
    # alpha in Phi+ with w w_l alpha still positive, under the composition
    # convention pinned by the long form of the theorem.
    composed = tuple(perm[_WL_PERM[i] - 1] for i in range(3))
    return [(a, b) for (a, b) in _POSITIVE_ROOTS if composed[a - 1] < composed[b - 1]]


def constant_term_coefficients(
    lam: Spectral, prime_bound: int = DEFAULT_PRIME_BOUND
) -> list[dict]:
    """Succinct-form scalar coefficient and test-vector pair per Bruhat cell.

    The unipotent integrals multiplying these are out of scope; the returned
    data is the scalar prefactor, the 2-vector it multiplies, and the same
    product computed from the long form of the theorem, for cross-checking.
    """
    pairing = {(1, 2): lam.x, (2, 3): lam.y, (1, 3): lam.z}
    zr = {r: zeta_ratio(pairing[r], prime_bound) for r in _POSITIVE_ROOTS}
    fl2 = dyadic_correction(lam)
    vectors = {
        "b": (1, 0),
        "wa1": (0, 1 + 1j),
        "wa2": (1j, -1),
        "wa1wa2": (1 + 1j, 1 + 1j),
        "wa2wa1": (-1 + 1j, 1 - 1j),
        "wl": (fl2 * 1j, -fl2 * 1j),
    }
    q = {r: 4 ** (-1 - pairing[r]) * zr[r] for r in _POSITIVE_ROOTS}
    long_form = {
        "b": (1, 0),
        "wa1": (0, (1 + 1j) * q[(2, 3)]),
        "wa2": (1j * q[(1, 2)], -q[(1, 2)]),
        "wa1wa2": ((1 + 1j) * q[(1, 3)] * q[(2, 3)],) * 2,
        "wa2wa1": ((-1 + 1j) * q[(1, 3)] * q[(1, 2)], (1 - 1j) * q[(1, 3)] * q[(1, 2)]),
        "wl": (
            1j * q[(1, 2)] * q[(2, 3)] * q[(1, 3)] * fl2,
            -1j * q[(1, 2)] * q[(2, 3)] * q[(1, 3)] * fl2,
        ),
    }
    out = []
    for cell, perm in _CELL_PERMS.items():
        roots = _roots_for(perm)
        coeff = 1 + 0j
        for r in roots:
            coeff *= q[r]
        vec = vectors[cell]
        out.append(
            {
                "cell": cell,
                "coefficient": coeff,
                "vector": vec,
                "product": (coeff * vec[0], coeff * vec[1]),
                "long_form": long_form[cell],
                "roots": roots,
            }
        )
    return out


def constant_term_consistency(lam: Spectral, prime_bound: int = DEFAULT_PRIME_BOUND) -> float:
    """Max deviation between the succinct and long forms across the six cells."""
    err = 0.0
    for row in constant_term_coefficients(lam, prime_bound):
        for a, b in zip(row["product"], row["long_form"]):
            err = max(err, abs(a - b))
    return err


# ---------------------------------------------------------------------------
# series cross-checks


def bigcell_series_check(
    lam: Spectral, cutoff: int, prime_bound: int = 10_000
) -> tuple[complex, complex, float]:
    """Partial big-cell Dirichlet sum against the closed Euler product.

    Only square leading pairs contribute at phase (0,0) -- every prime
    exponent must be even for the multiplicative value to survive -- so the
    sum runs over squares up to the cutoff.
    """
    if lam.x.real <= 1 or lam.y.real <= 1:
        raise ValueError("requires Re gaps > 1")
    series = 0j
    a = 1
    while a * a <= cutoff:
        b = 1
        while b * b <= cutoff:
            c = exp_sum_constant(a * a, -b * b)
            if c:
                series += (
                    c * (4 * a * a) ** (-1 - lam.x) * (4 * b * b) ** (-1 - lam.y)
                )
            b += 1
        a += 1
    closed = 1 + 0j
    for p in _primes(prime_bound):
        closed *= euler_factor(p, lam)
    scale = 4 ** (-1 - lam.x) * 4 ** (-1 - lam.y)
    closed *= scale
    rel = abs(series - closed) / abs(closed)
    return series, closed, rel


def semidegenerate_series(lam: Spectral, m1: int, cutoff: int) -> complex:
    """Partial sum of (4 B2)^{-1-y} K_{-1}(m1; 4 B2) over B2 <= cutoff."""
    if lam.y.real <= 1:
        raise ValueError("requires Re(l2 - l3) > 1")
    total = 0j
    for b2 in range(1, cutoff + 1):
        k = kloosterman_sum(-1, m1, b2)
        if k.coeffs:
            total += (4 * b2) ** (-1 - lam.y) * k.to_complex()
    return total


def semidegenerate_zero_limit(lam: Spectral, prime_bound: int = DEFAULT_PRIME_BOUND) -> complex:
    """Closed value the m1 = 0 semi-degenerate series converges to."""
    return (1 + 1j) * 2 ** (-2 * (1 + lam.y)) * zeta_ratio(lam.y, prime_bound)
