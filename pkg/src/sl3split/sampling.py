"""Seeded random group elements for the verification suites.

Per-trial seeds are derived from (master seed, index) with a stable hash, so
a run is reproducible regardless of how trials are sharded over workers.
"""

from __future__ import annotations

import hashlib
import random
from fractions import Fraction

from .errors import DomainError
from .sl3 import (
    IDENTITY,
    Matrix,
    W1,
    W2,
    W12,
    W21,
    WL,
    elem,
    mat_mul,
    n_mat,
    t_mat,
    transpose,
)

_LOWER_POSITIONS = ((1, 0), (2, 0), (2, 1))
_WEYL = (W1, W2, W12, W21, WL)


def derive_seed(master: int, index: int, salt: str = "") -> int:
    """Stable per-trial seed; independent of platform and hash randomization."""
    h = hashlib.blake2b(f"{master}:{index}:{salt}".encode(), digest_size=8)
    return int.from_bytes(h.digest(), "big")


def sample_gamma14(seed: int, word_len: int) -> Matrix:
    """Product of word_len generators of the level-4 congruence subgroup.

    Generators are unipotent upper matrices n(x, y, z) with x, y, z in
    [-3, 3] and lower elementary matrices with a single entry in 4*[-2, 2].
    Deterministic in the seed.
    """
    if word_len < 1:
        raise DomainError("word_len must be at least 1")
    rng = random.Random(seed)
    m = IDENTITY
    for _ in range(word_len):
        if rng.random() < 0.5:
            f = n_mat(rng.randint(-3, 3), rng.randint(-3, 3), rng.randint(-3, 3))
        else:
            i, j = rng.choice(_LOWER_POSITIONS)
            f = elem(i, j, 4 * rng.randint(-2, 2))
        m = mat_mul(m, f)
    return m


def sample_unipotent(seed: int, bound: int = 3) -> Matrix:
    rng = random.Random(seed)
    return n_mat(rng.randint(-bound, bound), rng.randint(-bound, bound),
                 rng.randint(-bound, bound))


def _small_fraction(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-2, 2), rng.randint(1, 3))


def sample_rational_sl3(seed: int, word_len: int = 4) -> Matrix:
    """Short product of rational determinant-1 factors: unipotents (upper and
    lower), diagonals with small rational entries, and Weyl representatives."""
    rng = random.Random(seed)
    m = IDENTITY
    for _ in range(word_len):
        kind = rng.randrange(4)
        if kind == 0:
            f = n_mat(_small_fraction(rng), _small_fraction(rng), _small_fraction(rng))
        elif kind == 1:
            u = Fraction(rng.choice([1, -1, 2, -2, 3]), rng.choice([1, 2, 3]))
            v = Fraction(rng.choice([1, -1, 2, -2]), rng.choice([1, 2]))
            f = t_mat(u, v, 1 / (u * v))
        elif kind == 2:
            f = rng.choice(_WEYL)
        else:
            f = transpose(n_mat(_small_fraction(rng), _small_fraction(rng),
                                _small_fraction(rng)))
        m = mat_mul(m, f)
    return m


def sample_positive_diag(seed: int) -> Matrix:
    rng = random.Random(seed)
    u = Fraction(rng.randint(1, 4), rng.randint(1, 4))
    v = Fraction(rng.randint(1, 4), rng.randint(1, 4))
    return t_mat(u, v, 1 / (u * v))
