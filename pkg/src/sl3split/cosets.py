"""Double-coset representatives and their multiplicative structure.

Cosets with fixed nonzero corner coordinates (a1, a2) have unique
representatives whose b1/a1, b2/a2 and c2/(4*a2) ratios lie in [0, 1); these
finite sets multiply: for coprime admissible parameter pairs there is an
explicit bijection (phi, psi) between the set for the products and the
product of two smaller sets, under which the splitting sign is multiplicative
up to a two-symbol Kronecker twist.
"""

from __future__ import annotations

import math
from typing import NamedTuple

from .arith import crt, invmod, kronecker, smallest_positive_cong
from .errors import ConsistencyError, HypothesisError
from .sl3 import (
    Matrix,
    ScaledPlucker,
    mat_mul,
    n_mat,
    right_mul_coords,
    scaled_plucker,
)


def in_rep_box(p: ScaledPlucker) -> bool:
    """True if b1/a1, b2/a2, c2/(4*a2) all lie in [0, 1)."""
    if p.a1 == 0 or p.a2 == 0:
        return False
    return (
        0 <= p.b1 * p.a1 < p.a1 * p.a1
        and 0 <= p.b2 * p.a2 < p.a2 * p.a2
        and 0 <= p.c2 * 4 * p.a2 < 16 * p.a2 * p.a2
    )


def normalize_coords(p: ScaledPlucker) -> tuple[ScaledPlucker, tuple[int, int, int]]:
    """Move a sextuple with a1*a2 != 0 into the representative box.

    Returns the boxed sextuple and the right-multiplier parameters (x, y, z).
    """
    if p.a1 == 0 or p.a2 == 0:
        raise HypothesisError("representatives need a1 != 0 and a2 != 0")
    x = -(p.b1 // p.a1)
    y = p.b2 // p.a2
    u = p.c2 - 4 * x * p.b2 + 4 * x * y * p.a2
    z = u // (4 * p.a2)
    out = right_mul_coords(p, x, y, z)
    if not (out.is_valid() and in_rep_box(out)):
        raise ConsistencyError("normalization left the representative box")
    return out, (x, y, z)


def canonical_rep(g: Matrix) -> tuple[ScaledPlucker, Matrix]:
    """Unique right-unipotent translate of g with boxed coordinates.

    Returns (boxed coordinates, n) with n integer upper unitriangular and the
    coordinates of g*n in the representative box.
    """
    p = scaled_plucker(g)
    out, (x, y, z) = normalize_coords(p)
    n = n_mat(x, y, z)
    if scaled_plucker(mat_mul(g, n)) != out:
        raise ConsistencyError("coordinate action disagrees with the matrix action")
    return out, n


def _box_range(a: int) -> range:
    """Integers v with v/a in [0, 1)."""
    return range(0, a) if a > 0 else range(a + 1, 1)


def enumerate_reps(a1: int, a2: int) -> list[ScaledPlucker]:
    """All representative sextuples with corner coordinates (a1, a2), sorted."""
    if a1 == 0 or a2 == 0:
        raise HypothesisError("corner coordinates must be nonzero")
    out = []
    for b1 in _box_range(a1):
        for c2 in _box_range(4 * a2):
            if c2 % 4 != 3:
                continue
            for b2 in _box_range(a2):
                num = -(a1 * c2 + 4 * b1 * b2)
                if num % a2:
                    continue
                c1 = num // a2
                if c1 % 4 != 3:
                    continue
                if math.gcd(a1, b1, c1) != 1 or math.gcd(a2, b2, c2) != 1:
                    continue
                out.append(ScaledPlucker(a1, b1, c1, a2, b2, c2))
    out.sort()
    return out


class MultData(NamedTuple):
    """Unit data of the coset bijection for parameters (a1, a2, alpha1)."""

    mu: int
    gamma_unit: int
    ell: int


def mult_data(a1: int, a2: int, alpha1: int) -> MultData:
    """mu and the smallest positive unit = 1 mod 4, = alpha1 mod a2."""
    mu = kronecker(-1, -a1 * a2)
    if abs(a2) == 1:
        gamma_unit = smallest_positive_cong(1, 4)
    else:
        r, m = crt(1, 4, alpha1 % abs(a2), abs(a2))
        gamma_unit = smallest_positive_cong(r, m)
    return MultData(mu, gamma_unit, (gamma_unit - alpha1) // a2)


def _check_mult_hypotheses(a1, alpha1, a2, alpha2):
    if a1 <= 0 or alpha1 <= 0:
        raise HypothesisError("a1 and alpha1 must be positive")
    if a2 == 0 or alpha2 == 0:
        raise HypothesisError("a2 and alpha2 must be nonzero")
    if a1 % 2 == 0 or a2 % 2 == 0:
        raise HypothesisError("a1 and a2 must be odd")
    if math.gcd(a1 * a2, alpha1 * alpha2) != 1:
        raise HypothesisError("a-parameters must be coprime to alpha-parameters")
    if (a1 * alpha1 + a2 * alpha2) % 4 != 0:
        raise HypothesisError("a1*alpha1 + a2*alpha2 must be 0 mod 4")


def phi_split(
    p: ScaledPlucker, a1: int, alpha1: int, a2: int, alpha2: int
) -> tuple[ScaledPlucker, ScaledPlucker]:
    """Split a representative with corners (a1*alpha1, a2*alpha2) into the
    pair of representatives with corners (a1, mu*a2) and (alpha1, -mu*alpha2)."""
    _check_mult_hypotheses(a1, alpha1, a2, alpha2)
    if p.a1 != a1 * alpha1 or p.a2 != a2 * alpha2:
        raise HypothesisError("sextuple corners do not match the parameters")
    mu, gamma_unit, ell = mult_data(a1, a2, alpha1)
    num = -a1 * gamma_unit * p.c2 - 4 * p.b1 * p.b2
    if num % (mu * a2):
        raise ConsistencyError("first component c1 is not integral")
    cc1 = num // (mu * a2)
    if cc1 != mu * alpha2 * p.c1 - mu * ell * a1 * p.c2:
        raise ConsistencyError("c1 identities disagree")
    e2 = kronecker(-1, a2)
    first = ScaledPlucker(a1, p.b1, cc1, mu * a2, p.b2, gamma_unit * p.c2)
    second = ScaledPlucker(
        alpha1,
        p.b1,
        e2 * a2 * p.c1,
        -mu * alpha2,
        -e2 * mu * p.b2,
        -mu * e2 * a1 * p.c2,
    )
    first, _ = normalize_coords(first)
    second, _ = normalize_coords(second)
    return first, second


def psi_merge(
    pair: tuple[ScaledPlucker, ScaledPlucker],
    a1: int, alpha1: int, a2: int, alpha2: int,
) -> ScaledPlucker:
    """Inverse of phi_split: merge boxed representatives with corners
    (a1, mu*a2) and (alpha1, -mu*alpha2) by the Chinese remainder theorem."""
    _check_mult_hypotheses(a1, alpha1, a2, alpha2)
    mu, gamma_unit, _ = mult_data(a1, a2, alpha1)
    e2 = kronecker(-1, a2)
    fst, snd = pair
    if fst.a1 != a1 or fst.a2 != mu * a2:
        raise HypothesisError("first component corners do not match")
    if snd.a1 != alpha1 or snd.a2 != -mu * alpha2:
        raise HypothesisError("second component corners do not match")
    b1_, c1_, b2_, c2_ = fst.b1, fst.c1, fst.b2, fst.c2
    beta1, gamma1, beta2, gamma2 = snd.b1, snd.c1, snd.b2, snd.c2

    r, m = crt(b1_ % a1, a1, beta1 % alpha1, alpha1)
    bb1 = r % (a1 * alpha1)
    r, m = crt(b2_ % abs(a2), abs(a2), (-mu * e2 * beta2) % abs(alpha2), abs(alpha2))
    bb2 = r % (a2 * alpha2)

    x = (bb1 - b1_) // a1
    xp = (bb1 - beta1) // alpha1
    if (bb1 - b1_) % a1 or (bb1 - beta1) % alpha1:
        raise ConsistencyError("b1 merge is inconsistent")
    if (b2_ - bb2) % (mu * a2) or (beta2 + mu * e2 * bb2) % (-mu * alpha2):
        raise ConsistencyError("b2 merge is inconsistent")

    m1 = 4 * abs(a2)
    r1 = invmod(gamma_unit % m1, m1) * (c2_ - 4 * bb2 * x) % m1
    m2 = 4 * abs(alpha2)
    r2 = (-mu * e2 * invmod(a1 % m2, m2)
          * (gamma2 - 4 * (-mu * e2) * bb2 * xp)) % m2
    r, m = crt(r1, m1, r2, m2)
    cc2 = r % (4 * a2 * alpha2)

    num = -a1 * alpha1 * cc2 - 4 * bb1 * bb2
    if num % (a2 * alpha2):
        raise ConsistencyError("merged c1 is not integral")
    cc1 = num // (a2 * alpha2)
    out = ScaledPlucker(a1 * alpha1, bb1, cc1, a2 * alpha2, bb2, cc2)
    if not (out.is_valid() and in_rep_box(out)):
        raise ConsistencyError("merged sextuple is not a boxed representative")
    return out


def twist_factor(a1: int, alpha1: int, a2: int, alpha2: int) -> int:
    """Kronecker-symbol twist relating the splitting of a merged
    representative to the product of the splittings of its two parts."""
    _check_mult_hypotheses(a1, alpha1, a2, alpha2)
    if (alpha2 // math.gcd(alpha1, alpha2)) % 2 == 0:
        raise HypothesisError("alpha2/gcd(alpha1, alpha2) must be odd")
    return kronecker(alpha2, kronecker(-1, a1) * a1) * kronecker(alpha1, a2)
