"""Exact SL(3) matrix algebra and unipotent-coset coordinates.

Matrices are 3x3 tuples of tuples with int or Fraction entries and
determinant 1.  A matrix determines six coordinates (a1, b1, c1, a2, b2, c2)
built from its bottom row and the 2x2 minors of its bottom two rows; they are
invariant under left multiplication by upper unitriangular matrices and
satisfy one quadratic relation.  For the congruence subgroup of matrices that
are upper unitriangular mod 4, the a/b coordinates are divisible by 4 and the
scaled-down sextuple is the natural coordinate system; both views live here,
together with the Bruhat cell classification, an exact Bruhat decomposition,
and the coordinate-level symmetry actions used by the splitting.
"""

from __future__ import annotations

import enum
import math
from fractions import Fraction
from typing import NamedTuple

from .errors import ConsistencyError, DomainError, HypothesisError, MembershipError

Matrix = tuple[tuple, ...]

IDENTITY: Matrix = ((1, 0, 0), (0, 1, 0), (0, 0, 1))

# Weyl group representatives; the reflection reps are fixed once and for all
# and all sign data of a decomposition lives in the diagonal part.
W1: Matrix = ((0, -1, 0), (1, 0, 0), (0, 0, 1))
W2: Matrix = ((1, 0, 0), (0, 0, -1), (0, 1, 0))
W12: Matrix = ((0, 0, 1), (1, 0, 0), (0, 1, 0))
W21: Matrix = ((0, -1, 0), (0, 0, -1), (1, 0, 0))
WL: Matrix = ((0, 0, 1), (0, -1, 0), (1, 0, 0))

SIMPLE_REFLECTION = {1: W1, 2: W2}


def n_mat(x, y, z) -> Matrix:
    """Upper unitriangular matrix with entries x (1,2), y (2,3), z (1,3)."""
    return ((1, x, z), (0, 1, y), (0, 0, 1))


def t_mat(a, b, c) -> Matrix:
    return ((a, 0, 0), (0, b, 0), (0, 0, c))


def elem(i: int, j: int, v) -> Matrix:
    """Elementary matrix I + v*E_ij (0-indexed, i != j)."""
    rows = [list(r) for r in IDENTITY]
    rows[i][j] = v
    return tuple(tuple(r) for r in rows)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    (a00, a01, a02), (a10, a11, a12), (a20, a21, a22) = a
    (b00, b01, b02), (b10, b11, b12), (b20, b21, b22) = b
    return (
        (a00 * b00 + a01 * b10 + a02 * b20,
         a00 * b01 + a01 * b11 + a02 * b21,
         a00 * b02 + a01 * b12 + a02 * b22),
        (a10 * b00 + a11 * b10 + a12 * b20,
         a10 * b01 + a11 * b11 + a12 * b21,
         a10 * b02 + a11 * b12 + a12 * b22),
        (a20 * b00 + a21 * b10 + a22 * b20,
         a20 * b01 + a21 * b11 + a22 * b21,
         a20 * b02 + a21 * b12 + a22 * b22),
    )


def mat_det(g: Matrix):
    (a, b, c), (d, e, f), (p, q, r) = g
    return a * (e * r - f * q) - b * (d * r - f * p) + c * (d * q - e * p)


def transpose(g: Matrix) -> Matrix:
    return tuple(tuple(g[i][j] for i in range(3)) for j in range(3))


def mat_inv(g: Matrix) -> Matrix:
    """Exact inverse of a determinant-1 matrix (its adjugate)."""
    (a, b, c), (d, e, f), (p, q, r) = g
    det = mat_det(g)
    if det != 1:
        raise DomainError("matrix must have determinant 1")
    return (
        (e * r - f * q, c * q - b * r, b * f - c * e),
        (f * p - d * r, a * r - c * p, c * d - a * f),
        (d * q - e * p, b * p - a * q, a * e - b * d),
    )


def minus_transpose_inv(g: Matrix) -> Matrix:
    """g raised to the minus-transpose: transpose of the inverse."""
    return transpose(mat_inv(g))


def cartan_long(g: Matrix) -> Matrix:
    """The involution g -> wl * g^(-t) * wl^(-1) (wl is its own inverse)."""
    return mat_mul(WL, mat_mul(minus_transpose_inv(g), WL))


def mat_fractions(g: Matrix) -> Matrix:
    return tuple(tuple(Fraction(v) for v in row) for row in g)


def mat_ints(g: Matrix) -> Matrix:
    """Cast an exactly-integral matrix back to int entries."""
    out = []
    for row in g:
        r = []
        for v in row:
            if isinstance(v, Fraction):
                if v.denominator != 1:
                    raise ConsistencyError(f"entry {v} is not an integer")
                v = v.numerator
            r.append(v)
        out.append(tuple(r))
    return tuple(out)


def is_integral(g: Matrix) -> bool:
    return all(
        isinstance(v, int) or (isinstance(v, Fraction) and v.denominator == 1)
        for row in g for v in row
    )


def gamma14_violation(g: Matrix) -> str | None:
    """None if g is in the level-4 congruence subgroup, else a reason string."""
    if not is_integral(g):
        return "matrix has non-integer entries"
    if mat_det(g) != 1:
        return f"determinant is {mat_det(g)}, not 1"
    for i, j in ((1, 0), (2, 0), (2, 1)):
        if g[i][j] % 4 != 0:
            return f"entry ({i + 1},{j + 1}) = {g[i][j]} is not 0 mod 4"
    for i in range(3):
        if g[i][i] % 4 != 1:
            return f"entry ({i + 1},{i + 1}) = {g[i][i]} is not 1 mod 4"
    return None


def in_gamma14(g: Matrix) -> bool:
    """Integer determinant-1 matrix congruent to upper unitriangular mod 4."""
    return gamma14_violation(g) is None


def in_gamma_inf(g: Matrix) -> bool:
    """Integer upper unitriangular matrix."""
    if not is_integral(g):
        return False
    return (
        g[0][0] == g[1][1] == g[2][2] == 1
        and g[1][0] == g[2][0] == g[2][1] == 0
    )


class Plucker(NamedTuple):
    """Unipotent-coset coordinates of a determinant-1 matrix (unscaled view)."""

    a1: object
    b1: object
    c1: object
    a2: object
    b2: object
    c2: object

    def relation(self):
        return self.a1 * self.c2 + self.b1 * self.b2 + self.c1 * self.a2

    def is_valid(self) -> bool:
        return (
            self.relation() == 0
            and (self.a1, self.b1, self.c1) != (0, 0, 0)
            and (self.a2, self.b2, self.c2) != (0, 0, 0)
        )


class ScaledPlucker(NamedTuple):
    """Coordinates of a level-4 coset: unscaled = (4a1, 4b1, c1, 4a2, 4b2, c2)."""

    a1: int
    b1: int
    c1: int
    a2: int
    b2: int
    c2: int

    def primed(self) -> Plucker:
        return Plucker(4 * self.a1, 4 * self.b1, self.c1,
                       4 * self.a2, 4 * self.b2, self.c2)

    def relation(self) -> int:
        return self.a1 * self.c2 + 4 * self.b1 * self.b2 + self.c1 * self.a2

    def is_valid(self) -> bool:
        return (
            self.relation() == 0
            and math.gcd(self.a1, self.b1, self.c1) == 1
            and math.gcd(self.a2, self.b2, self.c2) == 1
            and self.c1 % 4 == 3
            and self.c2 % 4 == 3
        )


def plucker(g: Matrix) -> Plucker:
    """Coordinates from the bottom row and the minors of the bottom two rows."""
    (_, _, _), (d, e, f), (p, q, r) = g
    return Plucker(-p, -q, -r, -(d * q - e * p), d * r - f * p, -(e * r - f * q))


def scale_down(p: Plucker) -> ScaledPlucker:
    """Divide the a/b coordinates by 4; error if any division is inexact."""
    for name, v in (("a1", p.a1), ("b1", p.b1), ("a2", p.a2), ("b2", p.b2)):
        if v % 4 != 0:
            raise ConsistencyError(f"coordinate {name} = {v} is not divisible by 4")
    return ScaledPlucker(p.a1 // 4, p.b1 // 4, p.c1, p.a2 // 4, p.b2 // 4, p.c2)


def scaled_plucker(g: Matrix) -> ScaledPlucker:
    """Scaled coordinates of a matrix in the level-4 congruence subgroup."""
    why = gamma14_violation(g)
    if why is not None:
        raise MembershipError(why)
    return scale_down(plucker(g))


class Cell(enum.Enum):
    """Bruhat cell, named by the reduced word of its Weyl element."""

    B = "B"
    W1 = "Bw1B"
    W2 = "Bw2B"
    W1W2 = "Bw1w2B"
    W2W1 = "Bw2w1B"
    LONG = "BwlB"


CELL_WORDS = {
    Cell.B: (),
    Cell.W1: (1,),
    Cell.W2: (2,),
    Cell.W1W2: (1, 2),
    Cell.W2W1: (2, 1),
    Cell.LONG: (1, 2, 1),
}

CELL_MATRICES = {
    Cell.B: IDENTITY,
    Cell.W1: W1,
    Cell.W2: W2,
    Cell.W1W2: W12,
    Cell.W2W1: W21,
    Cell.LONG: WL,
}

# Pivot column of each row (top to bottom, 0-indexed) of the representative.
_PIVOTS_TO_CELL = {
    (0, 1, 2): Cell.B,
    (1, 0, 2): Cell.W1,
    (0, 2, 1): Cell.W2,
    (2, 0, 1): Cell.W1W2,
    (1, 2, 0): Cell.W2W1,
    (2, 1, 0): Cell.LONG,
}


def cell_of(p: Plucker) -> Cell:
    """Cell from the vanishing pattern of (a1, b1) and (a2, b2)."""
    if p.a1 != 0:
        return Cell.LONG if p.a2 != 0 else Cell.W2W1
    if p.a2 != 0:
        return Cell.W1W2
    if p.b1 != 0:
        return Cell.W2
    return Cell.W1 if p.b2 != 0 else Cell.B


class WeylElt(NamedTuple):
    word: tuple[int, ...]
    matrix: Matrix


class BruhatDecomposition(NamedTuple):
    """g = n * t * w.matrix * n2 with n, n2 upper unitriangular, t diagonal."""

    n: Matrix
    t: Matrix
    w: WeylElt
    n2: Matrix


def _eliminate(g: Matrix):
    """Reduce g to diagonal * permutation by exact row and column operations.

    Rows are cleared bottom-up by adding lower rows to upper ones; columns
    are cleared left-to-right, and only at inversion positions of the pivot
    permutation, which makes the right unipotent part canonical.  Returns
    (m, pivots, row_ops, col_ops) with pivots[i] the pivot column of row i.
    """
    m = [[Fraction(v) for v in row] for row in g]
    row_ops: list[tuple[int, int, Fraction]] = []  # (i, k, mu): row_i += mu*row_k
    col_ops: list[tuple[int, int, Fraction]] = []  # (c, j, lam): col_j += lam*col_c

    def colop(c, j, lam):
        col_ops.append((c, j, lam))
        for i in range(3):
            m[i][j] += lam * m[i][c]

    def rowop(i, k, mu):
        row_ops.append((i, k, mu))
        for j in range(3):
            m[i][j] += mu * m[k][j]

    c3 = next(j for j in range(3) if m[2][j] != 0)
    for j in range(c3 + 1, 3):
        if m[2][j] != 0:
            colop(c3, j, -m[2][j] / m[2][c3])
    for i in (0, 1):
        if m[i][c3] != 0:
            rowop(i, 2, -m[i][c3] / m[2][c3])
    rem = [j for j in range(3) if j != c3]
    c2 = next(j for j in rem if m[1][j] != 0)
    c1 = next(j for j in rem if j != c2)
    if c1 > c2 and m[1][c1] != 0:
        colop(c2, c1, -m[1][c1] / m[1][c2])
    if m[0][c2] != 0:
        rowop(0, 1, -m[0][c2] / m[1][c2])
    return m, (c1, c2, c3), row_ops, col_ops


def bruhat(g: Matrix) -> BruhatDecomposition:
    """Exact Bruhat decomposition of a determinant-1 matrix."""
    if mat_det(g) != 1:
        raise DomainError("matrix must have determinant 1")
    m, pivots, row_ops, col_ops = _eliminate(g)
    cell = _PIVOTS_TO_CELL[pivots]
    rep = CELL_MATRICES[cell]
    diag = tuple(m[i][pivots[i]] / rep[i][pivots[i]] for i in range(3))
    t = t_mat(*diag)

    # n = inverse of the accumulated row operations, n2 = inverse of the
    # column operations; both stay upper unitriangular.
    n = IDENTITY
    for i, k, mu in reversed(row_ops):
        n = mat_mul(elem(i, k, -mu), n)
    n2 = IDENTITY
    for c, j, lam in reversed(col_ops):
        n2 = mat_mul(n2, elem(c, j, -lam))
    return BruhatDecomposition(n, t, WeylElt(CELL_WORDS[cell], rep), n2)


# --- coordinate-level symmetry actions (scaled view) ---------------------


def sym_conj_n(p: ScaledPlucker, x: int, y: int, z: int) -> ScaledPlucker:
    """Coordinates of n(x,y,z) * M * n(x,y,z)^(-1)."""
    return ScaledPlucker(
        p.a1,
        p.b1 - p.a1 * x,
        p.c1 - 4 * p.b1 * y + 4 * p.a1 * (x * y - z),
        p.a2,
        p.b2 + p.a2 * y,
        p.c2 + 4 * p.b2 * x + 4 * p.a2 * z,
    )


def sym_s3(p: ScaledPlucker) -> ScaledPlucker:
    """Coordinates of t(1,1,-1) * M * t(1,1,-1)."""
    return ScaledPlucker(-p.a1, -p.b1, p.c1, -p.a2, p.b2, p.c2)


def sym_s2(p: ScaledPlucker) -> ScaledPlucker:
    """Coordinates of t(1,-1,1) * M * t(1,-1,1)."""
    return ScaledPlucker(p.a1, -p.b1, p.c1, p.a2, -p.b2, p.c2)


def sym_cartan(p: ScaledPlucker) -> ScaledPlucker:
    """Coordinates of wl * M^(-t) * wl^(-1): swaps the two coordinate triples."""
    return ScaledPlucker(p.a2, -p.b2, p.c2, p.a1, -p.b1, p.c1)


def sym_scale(p: ScaledPlucker, d1: int, d2: int) -> ScaledPlucker:
    """Coordinates of t(1, 1/d2, 1/(d1*d2)) * M * t(1, d2, d1*d2).

    Requires d = d1*d2 to divide gcd(a1, a2), d1 = gcd(d, b1), and d2 | b2;
    the transformed sextuple is (a1/d, b1/d1, c1, a2/d, b2/d2, c2).
    """
    if d1 <= 0 or d2 <= 0:
        raise HypothesisError("divisors must be positive")
    d = d1 * d2
    if math.gcd(p.a1, p.a2) % d != 0:
        raise HypothesisError(f"{d} does not divide gcd(a1, a2)")
    if math.gcd(d, p.b1) != d1:
        raise HypothesisError(f"d1 = {d1} is not gcd({d}, b1)")
    if p.b2 % d2 != 0:
        raise HypothesisError(f"d2 = {d2} does not divide b2 = {p.b2}")
    out = ScaledPlucker(p.a1 // d, p.b1 // d1, p.c1,
                        p.a2 // d, p.b2 // d2, p.c2)
    if not out.is_valid():
        raise ConsistencyError("scaled coordinates violate the invariants")
    return out


def right_mul_coords(p: ScaledPlucker, x: int, y: int, z: int) -> ScaledPlucker:
    """Coordinates of M * n(x,y,z)."""
    return ScaledPlucker(
        p.a1,
        p.b1 + p.a1 * x,
        p.c1 + 4 * p.a1 * z + 4 * p.b1 * y,
        p.a2,
        p.b2 - p.a2 * y,
        p.c2 - 4 * p.b2 * x + 4 * p.a2 * (x * y - z),
    )
