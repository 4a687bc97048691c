"""The sign 2-cocycle on SL(3) and double-cover multiplication.

The cocycle of two determinant-1 matrices is evaluated by Bruhat-decomposing
the first argument and expanding along the reduced word of its Weyl part;
each factor reduces to a product of real Hilbert symbols of diagonal data
read off from coset coordinates.  All arithmetic is exact.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from .errors import DomainError
from .sl3 import (
    CELL_MATRICES,
    CELL_WORDS,
    Matrix,
    _PIVOTS_TO_CELL,
    _eliminate,
    mat_det,
    mat_mul,
    plucker,
    t_mat,
)


class DeltaData(NamedTuple):
    """Leading nonzero coordinates of a matrix and the diagonal they span."""

    x1: object
    x2: object
    x3: object
    delta: Matrix


def delta(g: Matrix) -> DeltaData:
    """x2, x3 = first nonzero of (-a2, b2, -c2) resp. (-a1, -b1, -c1), and
    the diagonal (x1/x2, x2/x3, x3) with x1 the determinant."""
    x1 = mat_det(g)
    if x1 != 1:
        raise DomainError("matrix must have determinant 1")
    p = plucker(g)
    x2 = next(v for v in (-p.a2, p.b2, -p.c2) if v != 0)
    x3 = next(v for v in (-p.a1, -p.b1, -p.c1) if v != 0)
    return DeltaData(x1, x2, x3, t_mat(Fraction(1, 1) / x2, Fraction(x2) / x3, x3))


def _delta_signs(rows) -> tuple[int, int, int]:
    """Signs of the delta diagonal of a matrix given as a row list.

    Only signs survive into the torus symbols, and x1 = det = 1, so the
    diagonal (1/x2, x2/x3, x3) contributes (sgn x2, sgn x2 * sgn x3, sgn x3).
    """
    d, e, f = rows[1]
    p, q, r = rows[2]
    x3 = p or q or r
    x2 = d * q - e * p
    if not x2:
        x2 = d * r - f * p
        if not x2:
            x2 = e * r - f * q
    s2 = 1 if x2 > 0 else -1
    s3 = 1 if x3 > 0 else -1
    return (s2, s2 * s3, s3)


def _reflect(letter: int, rows):
    """Rows of (simple reflection) * matrix: a signed row permutation."""
    r0, r1, r2 = rows
    if letter == 1:
        return ((-r1[0], -r1[1], -r1[2]), r0, r2)
    return (r0, (-r2[0], -r2[1], -r2[2]), r1)


def _torus(a, b) -> int:
    """Cocycle of two diagonals: (a1,b2)(a1,b3)(a2,b3) in real Hilbert symbols."""
    s = 1
    if a[0] < 0:
        if b[1] < 0:
            s = -s
        if b[2] < 0:
            s = -s
    if a[1] < 0 and b[2] < 0:
        s = -s
    return s


def _diag_of(t: Matrix):
    return (t[0][0], t[1][1], t[2][2])


def sigma_torus(t1: Matrix, t2: Matrix) -> int:
    """Cocycle of two diagonal matrices with nonzero diagonal entries."""
    for t in (t1, t2):
        for i in range(3):
            if t[i][i] == 0:
                raise DomainError("diagonal entries must be nonzero")
            for j in range(3):
                if i != j and t[i][j] != 0:
                    raise DomainError("matrix is not diagonal")
    return _torus(_diag_of(t1), _diag_of(t2))


def sigma(g1: Matrix, g2: Matrix) -> int:
    """Sign cocycle of two determinant-1 matrices.

    Expands along the Bruhat decomposition g1 = n * t * w1...wk * n2: each
    simple reflection w contributes the factor of the two delta diagonals
    before and after w acts on the running right product, and the torus part
    contributes one diagonal factor against the full remaining product.
    """
    if mat_det(g1) != 1 or mat_det(g2) != 1:
        raise DomainError("matrices must have determinant 1")
    m, pivots, _, col_ops = _eliminate(g1)
    cell = _PIVOTS_TO_CELL[pivots]
    rep = CELL_MATRICES[cell]
    t_signs = tuple(
        (1 if m[i][pivots[i]] > 0 else -1) * rep[i][pivots[i]] for i in range(3)
    )
    # rows of n2 * g2, applying the inverted column operations as row ops
    cur = tuple(tuple(v for v in row) for row in g2)
    for c, j, lam in col_ops:
        rows = list(cur)
        rows[c] = tuple(rows[c][k] - lam * rows[j][k] for k in range(3))
        cur = tuple(rows)
    s = 1
    d_cur = _delta_signs(cur)
    for letter in reversed(CELL_WORDS[cell]):
        nxt = _reflect(letter, cur)
        d_nxt = _delta_signs(nxt)
        prod = (d_nxt[0] * d_cur[0], d_nxt[1] * d_cur[1], d_nxt[2] * d_cur[2])
        s *= _torus(prod, (-d_cur[0], -d_cur[1], -d_cur[2]))
        cur, d_cur = nxt, d_nxt
    s *= _torus(t_signs, d_cur)
    return s


class MetaElt(NamedTuple):
    """Element of the double cover: a determinant-1 matrix with a sign."""

    g: Matrix
    eps: int


def meta_mul(x: MetaElt, y: MetaElt) -> MetaElt:
    """Twisted product: (g, e) * (h, f) = (g*h, e*f*sigma(g, h))."""
    return MetaElt(mat_mul(x.g, y.g), x.eps * y.eps * sigma(x.g, y.g))
