"""Exact arithmetic in Z[zeta_N], the ring of integer combinations of roots of unity.

Elements are sparse maps exponent -> coefficient at a fixed order N.  Mixed
orders embed into lcm(N, M) on the fly, so character sums of different
conductors combine freely.  Equality is decided exactly: an element is zero
iff its image in the tensor basis of Q(zeta_N) = (x) Q(zeta_{q^a}) vanishes,
which is the same ideal membership as reduction mod the N-th cyclotomic
polynomial but runs in time proportional to the number of nonzero terms.
A reference remainder-mod-Phi_N routine is kept alongside and cross-checked
in the tests.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, lcm

from .arith import _factorize_abs, euler_phi, divisors


@dataclass(frozen=True)
class IntPoly:
    """Dense integer polynomial, ascending coefficients, no leading zeros."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("leading zero coefficient")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        if not self.coeffs or not other.coeffs:
            return IntPoly(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(tuple(out))

    def divmod_exact(self, other: "IntPoly") -> tuple["IntPoly", "IntPoly"]:
        """Quotient and remainder; requires other monic."""
        if not other.coeffs or other.coeffs[-1] != 1:
            raise ValueError("divisor must be monic")
        rem = list(self.coeffs)
        d = other.degree
        quot = [0] * max(len(rem) - d, 0)
        for i in range(len(rem) - 1, d - 1, -1):
            c = rem[i]
            if c:
                quot[i - d] = c
                for j, b in enumerate(other.coeffs):
                    rem[i - d + j] -= c * b
        while rem and rem[-1] == 0:
            rem.pop()
        return IntPoly(tuple(quot)), IntPoly(tuple(rem))


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> IntPoly:
    """The n-th cyclotomic polynomial, computed by exact division of x^n - 1."""
    if n < 1:
        raise ValueError("order must be >= 1")
    poly = IntPoly((-1,) + (0,) * (n - 1) + (1,))
    for d in divisors(n):
        if d < n:
            poly, rem = poly.divmod_exact(cyclotomic_poly(d))
            assert not rem.coeffs
    return poly


class CycElem:
    """Sum_j c_j * zeta_order^j with integer c_j, sparse."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: dict[int, int] | None = None):
        if order < 1:
            raise ValueError("order must be >= 1")
        merged: dict[int, int] = {}
        for j, c in (coeffs or {}).items():
            if c:
                j %= order
                merged[j] = merged.get(j, 0) + c
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", {j: c for j, c in merged.items() if c})

    def __setattr__(self, name, value):
        raise AttributeError("CycElem is immutable")

    @classmethod
    def root(cls, order: int, j: int) -> "CycElem":
        return cls(order, {j: 1})

    @classmethod
    def from_int(cls, n: int) -> "CycElem":
        return cls(1, {0: n})

    def lift(self, order: int) -> "CycElem":
        if order % self.order:
            raise ValueError("new order must be a multiple of the old one")
        k = order // self.order
        return CycElem(order, {j * k: c for j, c in self.coeffs.items()})

    def folded(self) -> "CycElem":
        """Equal element at the smallest order reachable by dividing exponents."""
        if not self.coeffs:
            return CycElem(1)
        g = self.order
        for j in self.coeffs:
            g = gcd(g, j)
            if g == 1:
                return self
        return CycElem(self.order // g, {j // g: c for j, c in self.coeffs.items()})

    def _binop(self, other, flip: int) -> "CycElem":
        if isinstance(other, int):
            other = CycElem.from_int(other)
        if not isinstance(other, CycElem):
            return NotImplemented
        n = lcm(self.order, other.order)
        a, b = self.lift(n), other.lift(n)
        out = dict(a.coeffs)
        for j, c in b.coeffs.items():
            out[j] = out.get(j, 0) + flip * c
        return CycElem(n, out)

    def __add__(self, other):
        return self._binop(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        return self._binop(other, -1)

    def __rsub__(self, other):
        return (-self)._binop(other, 1)

    def __neg__(self):
        return CycElem(self.order, {j: -c for j, c in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return CycElem(self.order, {j: c * other for j, c in self.coeffs.items()})
        if not isinstance(other, CycElem):
            return NotImplemented
        n = lcm(self.order, other.order)
        ka, kb = n // self.order, n // other.order
        out: dict[int, int] = {}
        for ja, ca in self.coeffs.items():
            for jb, cb in other.coeffs.items():
                j = (ja * ka + jb * kb) % n
                out[j] = out.get(j, 0) + ca * cb
        return CycElem(n, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers not supported")
        out = CycElem.from_int(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def canonical(self) -> dict[tuple[int, ...], int]:
        """Coordinates in the tensor basis prod_i zeta_{q_i^{a_i}}^{t_i}, t_i < phi(q_i^{a_i})."""
        elem = self.folded()
        if not elem.coeffs:
            return {}
        facs = _factorize_abs(elem.order) if elem.order > 1 else ()
        mods = [q**a for q, a in facs]
        blocks = [q ** (a - 1) for q, a in facs]
        out: dict[tuple[int, ...], int] = {}
        stack = [(tuple(j % m for m in mods), c) for j, c in elem.coeffs.items()]
        while stack:
            t, c = stack.pop()
            for idx, (q, _a) in enumerate(facs):
                s, r = divmod(t[idx], blocks[idx])
                if s == q - 1:
                    for u in range(q - 1):
                        stack.append((t[:idx] + (blocks[idx] * u + r,) + t[idx + 1 :], -c))
                    break
            else:
                out[t] = out.get(t, 0) + c
        return {t: c for t, c in out.items() if c}

    def is_zero(self) -> bool:
        return not self.canonical()

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = CycElem.from_int(other)
        if not isinstance(other, CycElem):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None  # mutable-dict payload; equality is semantic

    def as_int(self) -> int:
        """The value as a rational integer; raises if it is not one."""
        can = self.canonical()
        if not can:
            return 0
        if len(can) == 1:
            (t, c), = can.items()
            if all(x == 0 for x in t):
                return c
        raise ValueError("element is not a rational integer")

    def to_complex(self, precision: int = 40) -> complex:
        """Floating approximation, accurate to 2**-precision for precision <= 48."""
        if precision > 48:
            raise ValueError("precision beyond double support")
        n = self.order
        return sum(
            c * cmath.exp(2j * cmath.pi * j / n) for j, c in sorted(self.coeffs.items())
        ) + 0j

    def __repr__(self):
        return f"CycElem({self.order}, {dict(sorted(self.coeffs.items()))})"


def is_zero(v: CycElem) -> bool:
    return v.is_zero()


def unit_phase(num: int, den: int) -> CycElem:
    """e^{2 pi i num/den} as an exact root of unity; den may be negative."""
    if den == 0:
        raise ValueError("zero denominator")
    if den < 0:
        num, den = -num, -den
    g = gcd(num % den, den) or den
    return CycElem.root(den // g, (num % den) // g)


def reduce_mod_cyclotomic(v: CycElem) -> IntPoly:
    """Remainder of sum c_j x^j modulo Phi_order; the reference zero test."""
    dense = [0] * v.order
    for j, c in v.coeffs.items():
        dense[j] = c
    while dense and dense[-1] == 0:
        dense.pop()
    _, rem = IntPoly(tuple(dense)).divmod_exact(cyclotomic_poly(v.order))
    return rem


def is_zero_by_remainder(v: CycElem) -> bool:
    return not reduce_mod_cyclotomic(v).coeffs
