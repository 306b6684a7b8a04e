"""Exact 3x3 matrices, Plucker coordinates, Bruhat cells and coset machinery.

Matrices are tuples of tuples of Fraction, so every decomposition below is
exact.  Coordinates come in two flavours: the six signed minors of a matrix
("raw"), and the scaled convention for the level-4 congruence subgroup where
the A and B entries are divided by 4.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd

Row = tuple[Fraction, Fraction, Fraction]
Mat3 = tuple[Row, Row, Row]


def mat(rows) -> Mat3:
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


def mat_mul(a: Mat3, b: Mat3) -> Mat3:
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3))
        for i in range(3)
    )


def mat_det(a: Mat3) -> Fraction:
    return (
        a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
        - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
        + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
    )


def mat_inv(a: Mat3) -> Mat3:
    d = mat_det(a)
    if d == 0:
        raise ZeroDivisionError("singular matrix")
    cof = [
        [
            (a[(i + 1) % 3][(j + 1) % 3] * a[(i + 2) % 3][(j + 2) % 3]
             - a[(i + 1) % 3][(j + 2) % 3] * a[(i + 2) % 3][(j + 1) % 3])
            for j in range(3)
        ]
        for i in range(3)
    ]
    return tuple(tuple(cof[j][i] / d for j in range(3)) for i in range(3))


def mat_transpose(a: Mat3) -> Mat3:
    return tuple(tuple(a[j][i] for j in range(3)) for i in range(3))


def mat_is_integral(a: Mat3) -> bool:
    return all(x.denominator == 1 for row in a for x in row)


def diag(t1, t2, t3) -> Mat3:
    z = Fraction(0)
    return (
        (Fraction(t1), z, z),
        (z, Fraction(t2), z),
        (z, z, Fraction(t3)),
    )


def unipotent(x, y, z) -> Mat3:
    return mat([[1, x, z], [0, 1, y], [0, 0, 1]])


IDENTITY = diag(1, 1, 1)
W_A1 = mat([[0, -1, 0], [1, 0, 0], [0, 0, 1]])
W_A2 = mat([[1, 0, 0], [0, 0, -1], [0, 1, 0]])
W_A1A2 = mat([[0, 0, 1], [1, 0, 0], [0, 1, 0]])
W_A2A1 = mat([[0, -1, 0], [0, 0, -1], [1, 0, 0]])
W_LONG = mat([[0, 0, 1], [0, -1, 0], [1, 0, 0]])

SIMPLE_REPS = {1: W_A1, 2: W_A2}


class WeylCell(Enum):
    B = "b"
    WA1 = "wa1"
    WA2 = "wa2"
    WA1A2 = "wa1wa2"
    WA2A1 = "wa2wa1"
    WL = "wl"


CELL_WORDS = {
    WeylCell.B: (),
    WeylCell.WA1: (1,),
    WeylCell.WA2: (2,),
    WeylCell.WA1A2: (1, 2),
    WeylCell.WA2A1: (2, 1),
    WeylCell.WL: (1, 2, 1),
}

CELL_REPS = {
    WeylCell.B: IDENTITY,
    WeylCell.WA1: W_A1,
    WeylCell.WA2: W_A2,
    WeylCell.WA1A2: W_A1A2,
    WeylCell.WA2A1: W_A2A1,
    WeylCell.WL: W_LONG,
}

# pivot permutation (row -> pivot column, 1-based) for each cell representative
_PIVOTS_TO_CELL = {
    (1, 2, 3): WeylCell.B,
    (2, 1, 3): WeylCell.WA1,
    (1, 3, 2): WeylCell.WA2,
    (3, 1, 2): WeylCell.WA1A2,
    (2, 3, 1): WeylCell.WA2A1,
    (3, 2, 1): WeylCell.WL,
}


@dataclass(frozen=True)
class RawPlucker:
    """The six signed minors of a matrix; invariant under the left unipotent action."""

    a1: int
    b1: int
    c1: int
    a2: int
    b2: int
    c2: int

    def __post_init__(self):
        if self.a1 * self.c2 + self.b1 * self.b2 + self.c1 * self.a2 != 0:
            raise ValueError("coordinates violate the quadric relation")
        if self.a1 == self.b1 == self.c1 == 0 or self.a2 == self.b2 == self.c2 == 0:
            raise ValueError("each coordinate triple must be nonzero")

    def astuple(self):
        return (self.a1, self.b1, self.c1, self.a2, self.b2, self.c2)


@dataclass(frozen=True)
class ScaledPlucker:
    """Scaled coordinates: raw = (4a1, 4b1, c1, 4a2, 4b2, c2)."""

    a1: int
    b1: int
    c1: int
    a2: int
    b2: int
    c2: int

    def astuple(self):
        return (self.a1, self.b1, self.c1, self.a2, self.b2, self.c2)

    def raw(self) -> RawPlucker:
        return RawPlucker(4 * self.a1, 4 * self.b1, self.c1, 4 * self.a2, 4 * self.b2, self.c2)

    @classmethod
    def from_raw(cls, r: RawPlucker) -> "ScaledPlucker":
        if r.a1 % 4 or r.b1 % 4 or r.a2 % 4 or r.b2 % 4:
            raise ValueError("raw A and B entries must be divisible by 4")
        return cls(r.a1 // 4, r.b1 // 4, r.c1, r.a2 // 4, r.b2 // 4, r.c2)

    def validate(self) -> None:
        """Check the level-4 coset invariants (quadric, gcd, congruence)."""
        a1, b1, c1, a2, b2, c2 = self.astuple()
        if a1 * c2 + 4 * b1 * b2 + c1 * a2 != 0:
            raise ValueError("quadric relation fails")
        if gcd(gcd(a1, b1), c1) != 1 or gcd(gcd(a2, b2), c2) != 1:
            raise ValueError("coordinate triples must be coprime")
        if c1 % 4 != 3 or c2 % 4 != 3:
            raise ValueError("C entries must be -1 mod 4")


def plucker_from_matrix(m: Mat3) -> RawPlucker:
    """Raw coordinates of an integer determinant-one matrix."""
    if not mat_is_integral(m):
        raise ValueError("matrix must be integral")
    if mat_det(m) != 1:
        raise ValueError("matrix must have determinant 1")
    fr = plucker_fractions(m)
    return RawPlucker(*(int(x) for x in fr))


def plucker_fractions(m: Mat3) -> tuple[Fraction, ...]:
    (_a, _b, _c), (d, e, f), (g, h, i) = m
    return (
        -g,
        -h,
        -i,
        -(d * h - e * g),
        d * i - f * g,
        -(e * i - f * h),
    )


def classify_cell(p: RawPlucker) -> WeylCell:
    if p.a1:
        return WeylCell.WL if p.a2 else WeylCell.WA2A1
    if p.a2:
        return WeylCell.WA1A2
    if p.b1:
        return WeylCell.WA2
    if p.b2:
        return WeylCell.WA1
    return WeylCell.B


def coset_representative(p: ScaledPlucker) -> Mat3:
    """A rational matrix with the given coordinates, per-cell normal form."""
    a1, b1, c1, a2, b2, c2 = self_tuple = p.astuple()
    cell = classify_cell(p.raw())
    F = Fraction
    if cell == WeylCell.B:
        return mat([[F(-1, c2), 0, 0], [0, F(c2, c1), 0], [0, 0, -c1]])
    if cell == WeylCell.WA1:
        perm = mat([[0, -1, 0], [-1, 0, 0], [0, 0, -1]])
        tri = mat([[F(4 * b2, c1), F(-c2, c1), 0], [0, F(1, 4 * b2), 0], [0, 0, c1]])
        return mat_mul(perm, tri)
    if cell == WeylCell.WA2:
        perm = mat([[-1, 0, 0], [0, 0, -1], [0, -1, 0]])
        tri = mat([[F(1, c2), 0, 0], [0, 4 * b1, c1], [0, 0, F(c2, 4 * b1)]])
        return mat_mul(perm, tri)
    if cell == WeylCell.WA1A2:
        perm = mat([[0, 0, 1], [1, 0, 0], [0, 1, 0]])
        tri = mat(
            [
                [F(a2, b1), 0, F(c2, 4 * b1)],
                [0, -4 * b1, F(4 * b1 * b2, a2)],
                [0, 0, F(-1, 4 * a2)],
            ]
        )
        return mat_mul(perm, tri)
    if cell == WeylCell.WA2A1:
        perm = mat([[0, 1, 0], [0, 0, 1], [1, 0, 0]])
        tri = mat(
            [
                [-4 * a1, -4 * b1, -c1],
                [0, F(-1, 4 * b2), 0],
                [0, 0, F(b2, a1)],
            ]
        )
        return mat_mul(perm, tri)
    perm = mat([[0, 0, -1], [0, -1, 0], [-1, 0, 0]])
    tri = mat(
        [
            [4 * a1, 4 * b1, c1],
            [0, F(a2, a1), F(-b2, a1)],
            [0, 0, F(1, 4 * a2)],
        ]
    )
    return mat_mul(perm, tri)


# ---------------------------------------------------------------------------
# coordinate symmetries


def apply_n_conj(p: ScaledPlucker, x: int, y: int, z: int) -> ScaledPlucker:
    """Coordinates of n(x,y,z) g n(x,y,z)^{-1} in the scaled convention."""
    a1, b1, c1, a2, b2, c2 = p.astuple()
    return ScaledPlucker(
        a1,
        b1 - a1 * x,
        c1 - 4 * b1 * y + 4 * a1 * (x * y - z),
        a2,
        b2 + a2 * y,
        c2 + 4 * b2 * x + 4 * a2 * z,
    )


def apply_s2(p: ScaledPlucker) -> ScaledPlucker:
    a1, b1, c1, a2, b2, c2 = p.astuple()
    return ScaledPlucker(a1, -b1, c1, a2, -b2, c2)


def apply_s3(p: ScaledPlucker) -> ScaledPlucker:
    a1, b1, c1, a2, b2, c2 = p.astuple()
    return ScaledPlucker(-a1, -b1, c1, -a2, b2, c2)


def apply_psi(p: ScaledPlucker) -> ScaledPlucker:
    """Transpose-inverse conjugated by the long Weyl element: swaps the rows."""
    a1, b1, c1, a2, b2, c2 = p.astuple()
    return ScaledPlucker(a2, -b2, c2, a1, -b1, c1)


def apply_t_descent(p: ScaledPlucker, d: int) -> ScaledPlucker:
    """Divide out a common factor d of (a1, a2); errors on divisibility failures."""
    a1, b1, c1, a2, b2, c2 = p.astuple()
    if d < 1 or a1 % d or a2 % d:
        raise ValueError("d must divide both leading coordinates")
    d1 = gcd(d, b1) if b1 else d
    d2 = d // d1
    if b2 % d2:
        raise ValueError("descent leaves the level-4 group: second B not divisible")
    return ScaledPlucker(a1 // d, b1 // d1, c1, a2 // d, b2 // d2, c2)


# ---------------------------------------------------------------------------
# Bruhat decomposition


@dataclass(frozen=True)
class BruhatParts:
    n: Mat3
    t: Mat3
    word: tuple[int, ...]
    n2: Mat3

    @property
    def weyl(self) -> Mat3:
        w = IDENTITY
        for letter in self.word:
            w = mat_mul(w, SIMPLE_REPS[letter])
        return w

    def assemble(self) -> Mat3:
        return mat_mul(mat_mul(self.n, self.t), mat_mul(self.weyl, self.n2))


def bruhat_decompose(g: Mat3) -> BruhatParts:
    """g = n t w n2 with w the fixed representative of its Weyl word.

    Pivots are located from the bottom row up, which makes the Weyl word of an
    integral element agree with the coordinate-based cell classification.
    """
    if mat_det(g) != 1:
        raise ValueError("matrix must have determinant 1")
    work = [list(row) for row in g]
    n = IDENTITY
    pivots = [0, 0, 0]
    used: set[int] = set()
    for i in (2, 1, 0):
        col = next(j for j in range(3) if j not in used and work[i][j] != 0)
        pivots[i] = col + 1
        used.add(col)
        for r in range(i):
            if work[r][col]:
                f = work[r][col] / work[i][col]
                for j in range(3):
                    work[r][j] -= f * work[i][j]
                n = mat_mul(n, _elementary(r, i, f))
    cell = _PIVOTS_TO_CELL[tuple(pivots)]
    word = CELL_WORDS[cell]
    wrep = CELL_REPS[cell]
    tdiag = diag(*(work[i][pivots[i] - 1] / wrep[i][pivots[i] - 1] for i in range(3)))
    n2 = mat_mul(mat_inv(mat_mul(tdiag, wrep)), mat(work))
    parts = BruhatParts(n, tdiag, word, mat(n2))
    assert parts.assemble() == tuple(map(tuple, g))
    return parts


# ---------------------------------------------------------------------------
# random generators for the level-4 congruence subgroup


def _elementary(i: int, j: int, c) -> Mat3:
    rows = [list(row) for row in IDENTITY]
    rows[i][j] = Fraction(c)
    return mat(rows)


def random_gamma14(seed: int, size_bound: int = 10**6, steps: int = 14) -> Mat3:
    """Deterministic pseudo-random element of the level-4 congruence subgroup.

    Built as a product of elementary matrices e_{ij}(c), with c a multiple of
    4 below the diagonal; entries stay below size_bound.
    """
    rng = random.Random(seed)
    g = IDENTITY
    for _ in range(steps):
        i, j = rng.choice([(0, 1), (0, 2), (1, 2), (1, 0), (2, 0), (2, 1)])
        c = rng.choice([-3, -2, -1, 1, 2, 3])
        if i > j:
            c *= 4
        cand = mat_mul(g, _elementary(i, j, c)) if rng.random() < 0.5 else mat_mul(
            _elementary(i, j, c), g
        )
        if max(abs(x) for row in cand for x in row) <= size_bound:
            g = cand
    return g


def is_gamma14(g: Mat3) -> bool:
    if not mat_is_integral(g) or mat_det(g) != 1:
        return False
    pattern = ((1, None, None), (0, 1, None), (0, 0, 1))
    return all(
        want is None or int(g[i][j]) % 4 == want % 4
        for i, row in enumerate(pattern)
        for j, want in enumerate(row)
    )


def _rand_nonzero(rng: random.Random, lo: int, hi: int) -> int:
    while True:
        v = rng.randint(lo, hi)
        if v:
            return v


def random_gamma_in_cell(cell: WeylCell, seed: int) -> Mat3:
    """Random element of the level-4 group lying in the requested Bruhat cell."""
    rng = random.Random(seed)

    def rand_n():
        return unipotent(rng.randint(-4, 4), rng.randint(-4, 4), rng.randint(-4, 4))

    if cell == WeylCell.B:
        return rand_n()
    if cell == WeylCell.WL:
        for attempt in range(1000):
            g = random_gamma14(seed * 1009 + attempt, steps=10)
            r = plucker_from_matrix(g)
            if r.a1 and r.a2:
                return g
        raise RuntimeError("failed to hit the big cell")
    if cell == WeylCell.WA1:
        # [[a, b, *], [d, e, *], [0, 0, 1]] with d = 0 mod 4 nonzero; a = e^{-1} mod |d|
        # is automatically 1 mod 4 because e = 1 mod 4 and 4 | d.
        while True:
            d = 4 * _rand_nonzero(rng, -6, 6)
            e = 1 + 4 * rng.randint(-6, 6)
            if gcd(d, e) == 1:
                break
        a = pow(e, -1, abs(d))
        b = (a * e - 1) // d
        core = mat([[a, b, rng.randint(-5, 5)], [d, e, rng.randint(-5, 5)], [0, 0, 1]])
        return mat_mul(rand_n(), mat_mul(core, rand_n()))
    if cell == WeylCell.WA2:
        # [[1, *, *], [0, e, f], [0, h, i]] with h = 0 mod 4 nonzero
        while True:
            h = 4 * _rand_nonzero(rng, -6, 6)
            e = 1 + 4 * rng.randint(-6, 6)
            if gcd(e, h) == 1:
                break
        i = pow(e, -1, abs(h))
        f = (e * i - 1) // h
        core = mat([[1, rng.randint(-5, 5), rng.randint(-5, 5)], [0, e, f], [0, h, i]])
        return mat_mul(rand_n(), mat_mul(core, rand_n()))
    if cell == WeylCell.WA1A2:
        while True:
            h = 4 * _rand_nonzero(rng, -6, 6)
            i = 1 + 4 * rng.randint(-6, 6)
            if gcd(h, i) == 1:
                break
        beta = pow(i, -1, abs(h))
        gamma_hat = (beta * i - 1) // h
        t = 4 * _rand_nonzero(rng, -5, 5)
        core = mat([[1, 0, 0], [t, beta, gamma_hat], [0, h, i]])
        return mat_mul(rand_n(), mat_mul(core, rand_n()))
    # WA2A1 via the row-swapping involution applied to a WA1A2 element
    g = random_gamma_in_cell(WeylCell.WA1A2, seed + 77_777)
    return mat_mul(mat_mul(W_LONG, mat_transpose(mat_inv(g))), mat_inv(W_LONG))
