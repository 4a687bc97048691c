"""Factorization of level-4 cosets into three embedded SL(2) blocks.

Every coset has a representative of the form B1 * B2 * B3 where B1 acts on
rows/columns {1,2}, B2 on {1,3} and B3 on {2,3}, each block a 2x2 integer
matrix of determinant 1 with lower-left entry divisible by 4 and diagonal
congruent to 1 mod 4.  The twelve block entries map to coset coordinates by
closed formulas, and a canonical inverse construction recovers them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import invmod, kronecker, smallest_positive_cong
from .errors import ConsistencyError, HypothesisError
from .sl3 import Cell, Matrix, Plucker, ScaledPlucker, cell_of, mat_mul


@dataclass(frozen=True)
class BlockParams:
    a1: int
    b1: int
    c1: int
    d1: int
    a2: int
    b2: int
    c2: int
    d2: int
    a3: int
    b3: int
    c3: int
    d3: int

    def blocks(self) -> tuple[tuple[int, int, int, int], ...]:
        return ((self.a1, self.b1, self.c1, self.d1),
                (self.a2, self.b2, self.c2, self.d2),
                (self.a3, self.b3, self.c3, self.d3))

    def is_valid(self) -> bool:
        return all(
            a * d - b * c == 1 and c % 4 == 0 and d % 4 == 1 and a % 4 == 1
            for a, b, c, d in self.blocks()
        )


def block_to_matrix(bp: BlockParams) -> Matrix:
    """Product of the three embedded blocks, in row/column sets {1,2}, {1,3}, {2,3}."""
    m1 = ((bp.a1, bp.b1, 0), (bp.c1, bp.d1, 0), (0, 0, 1))
    m2 = ((bp.a2, 0, bp.b2), (0, 1, 0), (bp.c2, 0, bp.d2))
    m3 = ((1, 0, 0), (0, bp.a3, bp.b3), (0, bp.c3, bp.d3))
    return mat_mul(m1, mat_mul(m2, m3))


def block_to_plucker(bp: BlockParams) -> Plucker:
    """Coset coordinates of the block product, by direct expansion."""
    return Plucker(
        -bp.c2,
        -bp.d2 * bp.c3,
        -bp.d2 * bp.d3,
        -(bp.c1 * bp.c3 - bp.d1 * bp.c2 * bp.a3),
        bp.c1 * bp.d3 - bp.d1 * bp.c2 * bp.b3,
        -bp.d1 * bp.d2,
    )


def _complete_block(c: int, d: int) -> tuple[int, int]:
    """Smallest positive a with a*d = 1 (mod c), and the matching b."""
    if c == 0:
        if d != 1:
            raise ConsistencyError(f"upper-triangular block needs d = 1, got {d}")
        return 1, 0
    a = smallest_positive_cong(invmod(d % abs(c), abs(c)), c)
    return a, (a * d - 1) // c


def block_factor(p: ScaledPlucker) -> BlockParams:
    """Canonical block parameters of a coset with a1 != 0.

    The third block is pinned by the gcd of (b1, c1) with a sign making its
    diagonal 1 mod 4; a3 is the smallest positive solution of its congruence
    that leaves the first block's lower-left entry divisible by 4.
    """
    if p.a1 == 0:
        raise HypothesisError("block_factor requires a1 != 0; "
                              "use block_factor_any for the degenerate cells")
    a1p, b1p, c1p, a2p, b2p, c2p = p.primed()
    c2 = -a1p
    g = math.gcd(b1p, c1p)
    eps = kronecker(-1, g)
    d2 = eps * g
    c3 = -b1p // d2
    d3 = -c1p // d2
    if c2p % d2 != 0:
        raise ConsistencyError("gcd(b1, c1) does not divide c2")
    d1 = -c2p // d2
    if c3 == 0:
        a3, b3 = 1, 0
        c1 = b2p
    else:
        base = smallest_positive_cong(invmod(d3 % abs(c3), abs(c3)), c3)
        # c1 mod 4 is constant along the congruence class of a3, so the
        # smallest admissible a3 is the base solution; scan a little anyway.
        for k in range(4):
            a3 = base + k * abs(c3)
            num = d1 * c2 * a3 - a2p
            if num % c3 == 0 and (num // c3) % 4 == 0:
                c1 = num // c3
                break
        else:
            raise ConsistencyError("no block solution with lower-left entry in 4Z")
        b3 = (a3 * d3 - 1) // c3
    a1, b1 = _complete_block(c1, d1)
    a2, b2 = _complete_block(c2, d2)
    bp = BlockParams(a1, b1, c1, d1, a2, b2, c2, d2, a3, b3, c3, d3)
    if block_to_plucker(bp) != p.primed():
        raise ConsistencyError("block factorization does not reproduce the coordinates")
    return bp


def block_factor_any(p: ScaledPlucker) -> BlockParams:
    """Block parameters for any cell; vanishing blocks are set to the identity."""
    if p.a1 != 0:
        return block_factor(p)
    a1p, b1p, c1p, a2p, b2p, c2p = p.primed()
    cell = cell_of(p.primed())
    a1, b1, c1, d1 = 1, 0, 0, 1
    a3, b3, c3, d3 = 1, 0, 0, 1
    if cell in (Cell.B, Cell.W1):
        # bottom row is (0, 0, -c1p): third block is trivial.
        if c1p != -1:
            raise ConsistencyError(f"expected c1 = -1 on this cell, got {c1p}")
        d1, c1 = -c2p, b2p
        a1, b1 = _complete_block(c1, d1)
    elif cell in (Cell.W2, Cell.W1W2):
        c3, d3 = -b1p, -c1p
        a3, b3 = _complete_block(c3, d3)
        d1 = -c2p
        if a2p % b1p != 0:
            raise ConsistencyError("b1 does not divide a2")
        c1 = a2p // b1p
        if b2p != c1 * d3:
            raise ConsistencyError("coordinates do not satisfy the quadratic relation")
        a1, b1 = _complete_block(c1, d1)
    else:  # a1 == 0 rules out the remaining cells
        raise ConsistencyError(f"cell {cell.value} cannot have a1 = 0")
    bp = BlockParams(a1, b1, c1, d1, 1, 0, 0, 1, a3, b3, c3, d3)
    if block_to_plucker(bp) != p.primed():
        raise ConsistencyError("block factorization does not reproduce the coordinates")
    return bp
