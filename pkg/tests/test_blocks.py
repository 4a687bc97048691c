import pytest

from sl3split.blocks import (
    BlockParams,
    block_factor,
    block_factor_any,
    block_to_matrix,
    block_to_plucker,
)
from sl3split.errors import HypothesisError
from sl3split.sampling import derive_seed, sample_gamma14
from sl3split.sl3 import (
    ScaledPlucker,
    in_gamma_inf,
    mat_inv,
    mat_mul,
    scaled_plucker,
)

IDENTITY_BLOCKS = BlockParams(1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1)
TRIPLE_FOUR = BlockParams(1, 0, 4, 1, 1, 0, 4, 1, 1, 0, 4, 1)


def test_block_to_matrix_examples():
    assert block_to_matrix(IDENTITY_BLOCKS) == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert block_to_matrix(TRIPLE_FOUR) == ((1, 0, 0), (4, 1, 0), (4, 4, 1))
    only2 = BlockParams(1, 0, 0, 1, 1, 0, -4, 1, 1, 0, 0, 1)
    assert block_to_matrix(only2) == ((1, 0, 0), (0, 1, 0), (-4, 0, 1))


def test_block_to_plucker_examples():
    assert block_to_plucker(IDENTITY_BLOCKS) == (0, 0, -1, 0, 0, -1)
    assert block_to_plucker(TRIPLE_FOUR) == (-4, -4, -1, -12, 4, -1)
    only2 = BlockParams(1, 0, 0, 1, 1, 0, -4, 1, 1, 0, 0, 1)
    assert block_to_plucker(only2) == (4, 0, -1, -4, 0, -1)


def test_block_to_plucker_matches_matrix():
    for i in range(300):
        g = sample_gamma14(derive_seed(200, i), 1 + i % 10)
        bp = block_factor_any(scaled_plucker(g))
        assert block_to_plucker(bp) == scaled_plucker(block_to_matrix(bp)).primed()


def test_block_factor_worked_example():
    bp = block_factor(ScaledPlucker(1, 0, -1, -1, 0, -1))
    assert (bp.c2, bp.d2, bp.c3, bp.d3, bp.d1, bp.c1) == (-4, 1, 0, 1, 1, 0)
    assert (bp.a1, bp.a2, bp.a3, bp.b1, bp.b2, bp.b3) == (1, 1, 1, 0, 0, 0)


def test_block_factor_requires_nonzero_corner():
    with pytest.raises(HypothesisError):
        block_factor(ScaledPlucker(0, 0, -1, 0, 0, -1))


def test_block_factor_reconstructs_worked_matrix():
    bp = block_factor(ScaledPlucker(-1, -1, -1, -3, 1, -1))
    rec = block_to_matrix(bp)
    n = mat_mul(((1, 0, 0), (4, 1, 0), (4, 4, 1)), mat_inv(rec))
    assert in_gamma_inf(n)


def test_round_trip_left_coset():
    for i in range(400):
        g = sample_gamma14(derive_seed(201, i), 1 + i % 12)
        sp = scaled_plucker(g)
        bp = block_factor_any(sp)
        assert bp.is_valid()
        rec = block_to_matrix(bp)
        assert in_gamma_inf(mat_mul(g, mat_inv(rec)))
        assert block_to_plucker(bp) == sp.primed()


def test_big_cell_exact_coordinate_reproduction():
    for i in range(300):
        g = sample_gamma14(derive_seed(202, i), 1 + i % 12)
        sp = scaled_plucker(g)
        if sp.a1 == 0:
            continue
        assert block_to_plucker(block_factor(sp)) == sp.primed()


def test_blocks_satisfy_congruences():
    for i in range(200):
        g = sample_gamma14(derive_seed(203, i), 1 + i % 10)
        bp = block_factor_any(scaled_plucker(g))
        for a, b, c, d in bp.blocks():
            assert a * d - b * c == 1
            assert c % 4 == 0 and d % 4 == 1 and a % 4 == 1
