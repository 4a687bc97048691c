"""The splitting sign of the level-4 congruence subgroup.

Three independent routes compute the same sign: a closed formula in block
parameters (the oracle), a six-symbol Kronecker formula in coset coordinates
valid on the big Bruhat cell after symmetry reduction, and a small table on
the remaining cells.  The dispatcher `split` routes any group element through
the coordinate formulas; `lift` pairs the element with its sign, which is a
homomorphism into the double cover.
"""

from __future__ import annotations

import math
from typing import NamedTuple

from .arith import hilbert_real, kronecker, odd_part
from .blocks import BlockParams
from .cocycle import MetaElt
from .errors import ConsistencyError, HypothesisError, MembershipError
from .sl3 import (
    Cell,
    Matrix,
    Plucker,
    ScaledPlucker,
    cell_of,
    gamma14_violation,
    scaled_plucker,
    sym_cartan,
    sym_s3,
    sym_scale,
)


def split_block(bp: BlockParams) -> int:
    """Splitting sign from block parameters: three Kronecker symbols times a
    non-arithmetic factor made of real Hilbert symbols."""
    s = (kronecker(bp.c1, bp.d1) * kronecker(bp.c2, bp.d2)
         * kronecker(bp.c3, bp.d3))
    c1, c2, c3, d1, a3 = bp.c1, bp.c2, bp.c3, bp.d1, bp.a3
    q = c1 * c3 - d1 * c2 * a3
    if c1 != 0 and c2 != 0 and c3 == 0:
        s_na = hilbert_real(c1, d1)
    elif c1 != 0 and c2 != 0 and c3 != 0 and q != 0:
        s_na = hilbert_real(c1 * c2 * q, c1 * a3) * hilbert_real(a3, c2 * c3)
    elif c1 != 0 and c2 != 0 and c3 != 0:
        s_na = hilbert_real(c2 * a3, c1 * a3) * hilbert_real(a3, c2 * c3)
    elif c1 == 0 and c2 != 0 and c3 != 0:
        s_na = hilbert_real(a3, c2 * c3)
    else:
        s_na = 1
    return s * s_na


class SplitContext(NamedTuple):
    """Gcd data entering the big-cell coordinate formula."""

    d: int
    d1: int
    d2: int
    eps: int


def split_context(p: ScaledPlucker) -> SplitContext:
    d = math.gcd(p.a1, p.a2)
    d1 = math.gcd(d, p.b1)
    d2 = d // d1
    return SplitContext(d, d1, d2, kronecker(-1, -(p.b1 // d1)))


def split_theorem(p: ScaledPlucker) -> int:
    """Big-cell splitting formula.

    Requires a1 > 0, a2 != 0 and a2/gcd(a1, a2) odd; callers reduce a general
    element into this chart first.
    """
    if p.a1 <= 0 or p.a2 == 0:
        raise HypothesisError("formula needs a1 > 0 and a2 != 0")
    d, d1, d2, eps = split_context(p)
    if (p.a2 // d) % 2 == 0:
        raise HypothesisError("formula needs a2/gcd(a1, a2) odd")
    if (4 * p.b2) % d2:
        raise ConsistencyError("d2 must divide 4*b2 for valid coordinates")
    return (
        kronecker(-eps, -p.a1 * p.a2)
        * kronecker(p.a1 // d, p.a2 // d)
        * kronecker(p.b1 // d1, p.a1 // d)
        * kronecker(4 * p.b2 // d2, abs(p.a2) // d)
        * kronecker(d1, p.c1)
        * kronecker(d2, p.c2)
    )


def split_cell(p: Plucker) -> int:
    """Splitting sign on the five non-big Bruhat cells (unscaled coordinates)."""
    cell = cell_of(p)
    if cell is Cell.B:
        return 1
    if cell is Cell.W1:
        return kronecker(p.b2, -p.c2)
    if cell is Cell.W2:
        return kronecker(-p.b1, -p.c1)
    if cell is Cell.W1W2:
        if p.a2 % p.b1:
            raise ConsistencyError("b1 must divide a2 on this cell")
        return kronecker(p.a2 // p.b1, -p.c2) * kronecker(-p.b1, -p.c1)
    if cell is Cell.W2W1:
        if p.a1 % p.b2:
            raise ConsistencyError("b2 must divide a1 on this cell")
        return (hilbert_real(-p.a1, p.b2)
                * kronecker(-(p.a1 // p.b2), -p.c1)
                * kronecker(p.b2, -p.c2))
    raise HypothesisError("big cell: use split_theorem")


def split_reduction(p: ScaledPlucker, d1: int, d2: int) -> tuple[ScaledPlucker, int]:
    """Remove an odd divisor d1*d2 of gcd(a1, a2) from the coordinates.

    Returns the scaled-down sextuple and the correction sign, so that the
    splitting of p equals the splitting of the reduced sextuple times the
    correction.  Only odd divisors are admissible.
    """
    d = d1 * d2
    if d % 2 == 0:
        raise HypothesisError("only the odd part of the gcd is removable")
    reduced = sym_scale(p, d1, d2)  # validates the divisibility hypotheses
    return reduced, kronecker(d1, p.c1) * kronecker(d2, p.c2)


def split_coords(p: ScaledPlucker) -> int:
    """Splitting sign of a coordinate sextuple (any cell)."""
    primed = p.primed()
    cell = cell_of(primed)
    if cell is not Cell.LONG:
        return split_cell(primed)
    correction = 1
    # Swap the coordinate triples if a2 carries more powers of 2 than a1.
    if (p.a2 // math.gcd(p.a1, p.a2)) % 2 == 0:
        correction *= hilbert_real(-p.a1, -p.a2)
        p = sym_cartan(p)
    if p.a1 < 0:
        p = sym_s3(p)  # flips both a-signs; no sign correction on the big cell
    d_odd = odd_part(math.gcd(p.a1, p.a2))
    if d_odd > 1:
        d1 = math.gcd(d_odd, p.b1)
        d2 = d_odd // d1
        if p.b2 % d2 == 0:
            p, c = split_reduction(p, d1, d2)
            correction *= c
    return correction * split_theorem(p)


def split(g: Matrix) -> int:
    """Splitting sign of a matrix in the level-4 congruence subgroup."""
    return split_coords(scaled_plucker(g))


def lift(g: Matrix) -> MetaElt:
    """Lift into the double cover: g paired with its splitting sign."""
    why = gamma14_violation(g)
    if why is not None:
        raise MembershipError(why)
    return MetaElt(g, split(g))
