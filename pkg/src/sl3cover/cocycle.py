"""The +-1-valued 2-cocycle on SL(3, Q) and the double-cover group law.

The cocycle is evaluated through the Bruhat decomposition of the first
argument and three reduction rules: a torus-torus formula in real Hilbert
symbols, absorption of a general second argument into its leading-minor
torus part, and a rule for a single simple reflection.  Only signs matter,
so exact rational arithmetic decides every value.
"""
from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from .arith import hilbert_real, sign
from .sl3 import (
    IDENTITY,
    Mat3,
    SIMPLE_REPS,
    ScaledPlucker,
    W_LONG,
    bruhat_decompose,
    mat,
    mat_inv,
    mat_mul,
    plucker_fractions,
)


class MetaElem(NamedTuple):
    g: Mat3
    eps: int


def torus_part(g: Mat3) -> Mat3:
    """Diagonal matrix built from the leading minors of the bottom rows.

    The middle datum is the first nonzero 2x2 minor of the bottom two rows
    (column pairs 12, 13, 23) and the last is the first nonzero entry of the
    bottom row; both coincide with the sign-relevant Plucker data.
    """
    a1, b1, c1, a2, b2, c2 = plucker_fractions(g)
    x1 = Fraction(1)  # determinant
    x2 = next(v for v in (-a2, b2, -c2) if v)
    x3 = next(v for v in (-a1, -b1, -c1) if v)
    return mat([[x1 / x2, 0, 0], [0, x2 / x3, 0], [0, 0, x3]])


def _h(a, b) -> int:
    return -1 if (a < 0 and b < 0) else 1


def cocycle_torus(s: Mat3, t: Mat3) -> int:
    """(a1,b2)(a1,b3)(a2,b3) in real Hilbert symbols, for diagonal s, t."""
    a1, a2 = s[0][0], s[1][1]
    b2, b3 = t[1][1], t[2][2]
    return _h(a1, b2) * _h(a1, b3) * _h(a2, b3)


def _cocycle_reflection(w: Mat3, h: Mat3) -> int:
    dh = torus_part(h)
    dwh = torus_part(mat_mul(w, h))
    prod = mat([[dwh[i][i] * dh[i][i] if i == j else 0 for j in range(3)] for i in range(3)])
    neg = mat([[-dh[i][i] if i == j else 0 for j in range(3)] for i in range(3)])
    return cocycle_torus(prod, neg)


def cocycle_sign(g1: Mat3, g2: Mat3) -> int:
    """The 2-cocycle sigma(g1, g2) in {+-1}."""
    parts = bruhat_decompose(g1)
    h = mat_mul(parts.n2, g2)
    reps = [SIMPLE_REPS[letter] for letter in parts.word]
    # torus factor against the full remaining product
    tail = h
    for rep in reversed(reps):
        tail = mat_mul(rep, tail)
    total = cocycle_torus(parts.t, torus_part(tail))
    for idx in range(len(reps)):
        tail = h
        for rep in reversed(reps[idx + 1 :]):
            tail = mat_mul(rep, tail)
        total *= _cocycle_reflection(reps[idx], tail)
    return total


def meta_mul(x: MetaElem, y: MetaElem) -> MetaElem:
    return MetaElem(mat_mul(x.g, y.g), x.eps * y.eps * cocycle_sign(x.g, y.g))


def meta_inv(x: MetaElem) -> MetaElem:
    ginv = mat_inv(x.g)
    return MetaElem(ginv, x.eps * cocycle_sign(x.g, ginv))


# ---------------------------------------------------------------------------
# Closed forms for the sign epsilon in the Weyl normal form of a coset
# representative, one per Bruhat cell.


def epsilon_bigcell(p: ScaledPlucker, s_gamma: int) -> int:
    return hilbert_real(p.a1, -p.a2) * s_gamma


def epsilon_wa1a2(p: ScaledPlucker, s_gamma: int) -> int:
    return hilbert_real(-p.b1, -p.a2) * s_gamma


def epsilon_wa2a1(p: ScaledPlucker, s_gamma: int) -> int:
    return -hilbert_real(p.a1, -p.b2) * s_gamma


def epsilon_wa1(p: ScaledPlucker, s_gamma: int) -> int:
    return -hilbert_real(-p.c1, -p.b2) * s_gamma


def epsilon_wa2(p: ScaledPlucker, s_gamma: int) -> int:
    return hilbert_real(p.b1, -p.c2) * s_gamma


# ---------------------------------------------------------------------------
# Exact verification of the normal-form identities
# (gamma', s)^{-1} (w_long, 1) = (perm w_long, 1) n D^{-1} (S, eps)^{-1},
# with gamma' the tabulated coset representative, D the absolute-value
# diagonal, S the sign diagonal and eps the closed form above.


def _sgn(x) -> int:
    return -1 if x < 0 else 1


def normal_form_identity_holds(p: ScaledPlucker, s_gamma: int) -> bool:
    """Check the double-cover normal form of the tabulated representative."""
    from fractions import Fraction as F

    from .sl3 import WeylCell, classify_cell, coset_representative, unipotent, diag

    cell = classify_cell(p.raw())
    a1, b1, c1, a2, b2, c2 = p.astuple()
    if cell == WeylCell.WL:
        perm = mat([[0, 0, -1], [0, -1, 0], [-1, 0, 0]])
        n = unipotent(F(b1, a1), F(-b2, a2), F(c2, 4 * a2))
        dmat = diag(abs(4 * a1), abs(F(a2, a1)), F(1, abs(4 * a2)))
        smat = diag(_sgn(a1), _sgn(a2 * a1), _sgn(a2))
        eps = epsilon_bigcell(p, s_gamma)
    elif cell == WeylCell.WA1A2:
        perm = mat([[0, 1, 0], [0, 0, 1], [1, 0, 0]])
        n = unipotent(0, F(c2, 4 * a2), F(b2, a2))
        dmat = diag(abs(4 * b1), abs(F(a2, b1)), F(1, abs(4 * a2)))
        smat = diag(_sgn(-b1), _sgn(a2 * b1), _sgn(-a2))
        eps = epsilon_wa1a2(p, s_gamma)
    elif cell == WeylCell.WA2A1:
        perm = mat([[0, 0, 1], [1, 0, 0], [0, 1, 0]])
        n = unipotent(F(c1, 4 * a1), 0, F(-b1, a1))
        dmat = diag(abs(4 * a1), abs(F(b2, a1)), F(1, abs(4 * b2)))
        smat = diag(_sgn(-a1), _sgn(b2 * a1), _sgn(-b2))
        eps = epsilon_wa2a1(p, s_gamma)
    elif cell == WeylCell.WA1:
        perm = mat([[0, -1, 0], [-1, 0, 0], [0, 0, -1]])
        n = unipotent(0, F(-c2, 4 * b2), 0)
        dmat = diag(abs(c1), abs(F(4 * b2, c1)), F(1, abs(4 * b2)))
        smat = diag(_sgn(c1), _sgn(b2 * c1), _sgn(b2))
        eps = epsilon_wa1(p, s_gamma)
    elif cell == WeylCell.WA2:
        perm = mat([[-1, 0, 0], [0, 0, -1], [0, -1, 0]])
        n = unipotent(F(c1, 4 * b1), 0, 0)
        dmat = diag(abs(4 * b1), abs(F(c2, 4 * b1)), F(1, abs(c2)))
        smat = diag(_sgn(b1), _sgn(c2 * b1), _sgn(c2))
        eps = epsilon_wa2(p, s_gamma)
    else:
        raise ValueError("the identity is stated for non-trivial cells only")
    gamma_rep = coset_representative(p)
    lhs = meta_mul(meta_inv(MetaElem(gamma_rep, s_gamma)), MetaElem(W_LONG, 1))
    rhs = meta_mul(MetaElem(mat_mul(perm, W_LONG), 1), MetaElem(n, 1))
    rhs = meta_mul(rhs, meta_inv(MetaElem(dmat, 1)))
    rhs = meta_mul(rhs, meta_inv(MetaElem(smat, eps)))
    return lhs.g == rhs.g and lhs.eps == rhs.eps
