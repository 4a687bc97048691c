import math

import pytest

from sl3split.arith import hilbert_real, kronecker, odd_part
from sl3split.blocks import BlockParams, block_factor_any
from sl3split.cocycle import meta_mul, sigma
from sl3split.errors import HypothesisError, MembershipError
from sl3split.sampling import derive_seed, sample_gamma14, sample_unipotent
from sl3split.sl3 import (
    IDENTITY,
    Plucker,
    ScaledPlucker,
    cartan_long,
    mat_inv,
    mat_mul,
    scaled_plucker,
    t_mat,
)
from sl3split.splitting import (
    SplitContext,
    lift,
    split,
    split_block,
    split_cell,
    split_context,
    split_coords,
    split_reduction,
    split_theorem,
)

G0 = ((1, 0, 0), (4, 1, 0), (4, 4, 1))


def test_split_block_examples():
    assert split_block(BlockParams(1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1)) == 1
    assert split_block(BlockParams(1, 0, 4, 1, 1, 0, 4, 1, 1, 0, 4, 1)) == 1
    assert split_block(BlockParams(1, 0, 0, 1, 1, 0, -4, 1, 1, 0, 0, 1)) == 1


def test_split_theorem_worked_example():
    p = ScaledPlucker(1, 0, -1, -1, 0, -1)
    assert split_context(p) == SplitContext(1, 1, 1, 1)
    assert split_theorem(p) == 1
    assert split_theorem(p) == split_block(block_factor_any(p))


def test_split_theorem_hypotheses():
    with pytest.raises(HypothesisError):
        split_theorem(ScaledPlucker(-1, 0, 3, -3, -2, -9))  # a1 < 0
    # a2 more 2-divisible than a1 (possible only when both are at least
    # doubly even, by the quadratic relation)
    sp = ScaledPlucker(4, 1, -1, 8, 3, -1)
    assert sp.is_valid()
    assert (sp.a2 // math.gcd(sp.a1, sp.a2)) % 2 == 0
    with pytest.raises(HypothesisError):
        split_theorem(sp)
    # the dispatcher reaches the same coordinates through the swap
    assert split_coords(sp) in (-1, 1)


def test_split_cell_table():
    assert split_cell(Plucker(0, 0, -1, 0, 0, -1)) == 1
    assert split_cell(Plucker(0, 0, -1, 0, 4, -1)) == kronecker(4, 1)
    assert split_cell(Plucker(0, -4, -1, 0, 0, -1)) == kronecker(4, 1)
    assert split_cell(Plucker(0, 0, -1, 0, -4, 3)) == kronecker(-4, -3)
    with pytest.raises(HypothesisError):
        split_cell(Plucker(-4, -4, -1, -12, 4, -1))


def test_split_examples():
    assert split(IDENTITY) == 1
    assert split(G0) == 1
    assert split(((1, 0, 0), (-4, 1, 0), (4, -4, 1))) == -1
    with pytest.raises(MembershipError):
        split(((1, 0, 0), (1, 1, 0), (0, 0, 1)))


def test_lift():
    assert lift(IDENTITY) == (IDENTITY, 1)
    for i in range(100):
        g = sample_gamma14(derive_seed(400, i), 1 + i % 10)
        m = lift(g)
        assert m.g == g and m.eps in (-1, 1)


def test_lift_is_homomorphism():
    for i in range(300):
        g1 = sample_gamma14(derive_seed(401, i, "a"), 1 + i % 10)
        g2 = sample_gamma14(derive_seed(401, i, "b"), 1 + (i + 5) % 10)
        assert meta_mul(lift(g1), lift(g2)) == lift(mat_mul(g1, g2))


def test_split_matches_block_oracle():
    for i in range(400):
        g = sample_gamma14(derive_seed(402, i), 1 + i % 12)
        sp = scaled_plucker(g)
        assert split_coords(sp) == split_block(block_factor_any(sp))


def test_split_unipotent_bi_invariance():
    for i in range(200):
        g = sample_gamma14(derive_seed(403, i), 1 + i % 10)
        n = sample_unipotent(derive_seed(403, i, "n"))
        s = split(g)
        assert split(mat_mul(n, g)) == s
        assert split(mat_mul(g, n)) == s
        assert split(mat_mul(n, mat_mul(g, mat_inv(n)))) == s


def test_split_sign_symmetries():
    s2m, s3m = t_mat(1, -1, 1), t_mat(1, 1, -1)
    seen_big = 0
    for i in range(300):
        g = sample_gamma14(derive_seed(404, i), 1 + i % 10)
        sp = scaled_plucker(g)
        s = split(g)
        if sp.a1 == 0 or sp.a2 == 0:
            continue
        seen_big += 1
        expect = -s if sp.a1 * sp.a2 > 0 else s
        assert split(mat_mul(s2m, mat_mul(g, s2m))) == expect
        assert split(mat_mul(s3m, mat_mul(g, s3m))) == s
        assert split(cartan_long(g)) == hilbert_real(-sp.a1, -sp.a2) * s
    assert seen_big > 100


def test_split_reduction():
    p = ScaledPlucker(1, 0, -1, -1, 0, -1)
    assert split_reduction(p, 1, 1) == (p, 1)
    found = 0
    for i in range(400):
        g = sample_gamma14(derive_seed(405, i), 1 + i % 12)
        sp = scaled_plucker(g)
        if sp.a1 == 0 or sp.a2 == 0:
            continue
        d = odd_part(math.gcd(sp.a1, sp.a2))
        if d == 1:
            continue
        d1 = math.gcd(d, sp.b1)
        d2 = d // d1
        if sp.b2 % d2:
            continue
        found += 1
        reduced, corr = split_reduction(sp, d1, d2)
        assert corr == kronecker(d1, sp.c1) * kronecker(d2, sp.c2)
        assert split_coords(sp) == corr * split_coords(reduced)
    assert found > 5


def test_split_reduction_rejects_even_divisor():
    g = mat_mul(((1, 0, 0), (0, 1, 0), (8, 0, 1)),
                ((1, 0, 0), (8, 1, 0), (0, 0, 1)))
    sp = scaled_plucker(g)
    assert math.gcd(sp.a1, sp.a2) % 2 == 0
    with pytest.raises(HypothesisError):
        split_reduction(sp, 2, 1)


def test_homomorphism_identity():
    for i in range(400):
        g1 = sample_gamma14(derive_seed(406, i, "a"), 1 + i % 12)
        g2 = sample_gamma14(derive_seed(406, i, "b"), 1 + (i + 7) % 12)
        assert split(mat_mul(g1, g2)) == split(g1) * split(g2) * sigma(g1, g2)
