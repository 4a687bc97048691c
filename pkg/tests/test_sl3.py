import math
from fractions import Fraction

import pytest

from sl3split.errors import ConsistencyError, HypothesisError, MembershipError
from sl3split.sampling import derive_seed, sample_gamma14, sample_rational_sl3, sample_unipotent
from sl3split.sl3 import (
    IDENTITY,
    W1,
    W2,
    W12,
    W21,
    WL,
    Cell,
    Plucker,
    ScaledPlucker,
    bruhat,
    cartan_long,
    cell_of,
    elem,
    in_gamma14,
    in_gamma_inf,
    mat_det,
    mat_inv,
    mat_mul,
    minus_transpose_inv,
    n_mat,
    plucker,
    right_mul_coords,
    scale_down,
    scaled_plucker,
    sym_cartan,
    sym_conj_n,
    sym_s2,
    sym_s3,
    sym_scale,
    t_mat,
    transpose,
)

G0 = ((1, 0, 0), (4, 1, 0), (4, 4, 1))


def test_weyl_representatives():
    assert mat_mul(W1, W2) == W12
    assert mat_mul(W2, W1) == W21
    assert mat_mul(W1, mat_mul(W2, W1)) == WL
    assert mat_mul(W2, mat_mul(W1, W2)) == WL
    for w in (W1, W2, W12, W21, WL):
        assert mat_det(w) == 1


def test_mul_inv():
    assert mat_mul(IDENTITY, G0) == G0
    assert mat_inv(n_mat(1, 0, 0)) == n_mat(-1, 0, 0)
    assert mat_mul(G0, mat_inv(G0)) == IDENTITY
    sym = ((0, 1, 0), (1, 0, 0), (0, 0, -1))  # symmetric orthogonal, det 1
    assert minus_transpose_inv(sym) == sym
    assert minus_transpose_inv(G0) == transpose(mat_inv(G0))


def test_membership():
    assert in_gamma14(IDENTITY) and in_gamma_inf(IDENTITY)
    n = n_mat(3, 5, -2)
    assert in_gamma14(n) and in_gamma_inf(n)
    assert in_gamma14(G0) and not in_gamma_inf(G0)
    assert not in_gamma14(((1, 0, 0), (1, 1, 0), (0, 0, 1)))
    assert not in_gamma14(((5, 0, 0), (0, 1, 0), (0, 0, 1)))  # det != 1


def test_plucker_examples():
    assert plucker(IDENTITY) == (0, 0, -1, 0, 0, -1)
    assert plucker(WL) == (-1, 0, 0, -1, 0, 0)
    assert plucker(G0) == (-4, -4, -1, -12, 4, -1)
    assert scaled_plucker(G0) == (-1, -1, -1, -3, 1, -1)
    assert scaled_plucker(((1, 0, 0), (0, 1, 0), (-4, 0, 1))) == (1, 0, -1, -1, 0, -1)
    assert scaled_plucker(IDENTITY) == (0, 0, -1, 0, 0, -1)


def test_plucker_relation_and_left_invariance():
    for i in range(300):
        g = sample_gamma14(derive_seed(100, i), 1 + i % 12)
        p = plucker(g)
        assert p.relation() == 0
        assert p.is_valid()
        sp = scale_down(p)
        assert sp.is_valid()
        assert sp.primed() == p
        n = sample_unipotent(derive_seed(100, i, "n"))
        assert plucker(mat_mul(n, g)) == p


def test_scale_down_guards():
    with pytest.raises(ConsistencyError):
        scale_down(Plucker(1, 0, -1, -4, 0, -1))
    with pytest.raises(MembershipError):
        scaled_plucker(((1, 0, 0), (1, 1, 0), (0, 0, 1)))


def test_cells():
    assert cell_of(Plucker(0, 0, -1, 0, 0, -1)) is Cell.B
    assert cell_of(Plucker(0, 0, -1, 0, 4, -1)) is Cell.W1
    assert cell_of(Plucker(-4, -4, -1, -12, 4, -1)) is Cell.LONG
    assert cell_of(plucker(W1)) is Cell.W1
    assert cell_of(plucker(W2)) is Cell.W2
    assert cell_of(plucker(W12)) is Cell.W1W2
    assert cell_of(plucker(W21)) is Cell.W2W1
    assert cell_of(plucker(WL)) is Cell.LONG


def test_cell_bi_invariance():
    for i in range(200):
        g = sample_gamma14(derive_seed(101, i), 1 + i % 10)
        c = cell_of(plucker(g))
        n = sample_unipotent(derive_seed(101, i, "n"))
        assert cell_of(plucker(mat_mul(n, g))) is c
        assert cell_of(plucker(mat_mul(g, n))) is c


def test_bruhat_examples():
    dec = bruhat(IDENTITY)
    assert dec.w.word == () and dec.t == IDENTITY
    dec = bruhat(WL)
    assert dec.w.word == (1, 2, 1)
    assert dec.t == IDENTITY and dec.n == IDENTITY and dec.n2 == IDENTITY
    dec = bruhat(((1, 0, 0), (4, 1, 0), (0, 0, 1)))
    assert dec.w.word == (1,)
    rec = mat_mul(dec.n, mat_mul(dec.t, mat_mul(dec.w.matrix, dec.n2)))
    assert all(Fraction(rec[i][j]) == ((1, 0, 0), (4, 1, 0), (0, 0, 1))[i][j]
               for i in range(3) for j in range(3))


def test_bruhat_reconstruction_and_canonical_n2():
    for i in range(400):
        g = sample_rational_sl3(derive_seed(102, i), 4)
        dec = bruhat(g)
        rec = mat_mul(dec.n, mat_mul(dec.t, mat_mul(dec.w.matrix, dec.n2)))
        assert all(Fraction(rec[a][b]) == Fraction(g[a][b])
                   for a in range(3) for b in range(3))
        assert mat_det(dec.t) == 1
        # canonical right part: conjugating n2 by the representative is lower
        # unitriangular
        w = dec.w.matrix
        conj = mat_mul(w, mat_mul(dec.n2, mat_inv(w)))
        assert conj[0][1] == conj[0][2] == conj[1][2] == 0
        # the Weyl word matches the cell of the coordinates
        from sl3split.sl3 import CELL_WORDS

        assert CELL_WORDS[cell_of(plucker(g))] == dec.w.word


def test_sym_transforms_match_matrices():
    s2m, s3m = t_mat(1, -1, 1), t_mat(1, 1, -1)
    for i in range(300):
        g = sample_gamma14(derive_seed(103, i), 1 + i % 10)
        sp = scaled_plucker(g)
        x, y, z = (i % 7) - 3, (i % 5) - 2, (i % 3) - 1
        n = n_mat(x, y, z)
        assert sym_conj_n(sp, x, y, z) == scaled_plucker(
            mat_mul(n, mat_mul(g, mat_inv(n))))
        assert sym_s2(sp) == scaled_plucker(mat_mul(s2m, mat_mul(g, s2m)))
        assert sym_s3(sp) == scaled_plucker(mat_mul(s3m, mat_mul(g, s3m)))
        assert sym_cartan(sp) == scaled_plucker(cartan_long(g))
        assert right_mul_coords(sp, x, y, z) == scaled_plucker(mat_mul(g, n))


def test_sym_examples():
    sp = ScaledPlucker(-1, -1, -1, -3, 1, -1)
    assert sym_s2(sp) == (-1, 1, -1, -3, -1, -1)
    assert sym_cartan(sym_cartan(sp)) == sp
    assert sym_conj_n(sp, 0, 0, 0) == sp


def test_sym_scale():
    g = mat_mul(elem(2, 0, 12), elem(1, 0, 8))  # gcd of corner coordinates is 3
    sp = scaled_plucker(g)
    d = math.gcd(sp.a1, sp.a2)
    assert d % 3 == 0
    d1 = math.gcd(3, sp.b1)
    out = sym_scale(sp, d1, 3 // d1)
    assert out.is_valid()
    assert (out.a1, out.a2) == (sp.a1 // 3, sp.a2 // 3)
    with pytest.raises(HypothesisError):
        sym_scale(sp, 5, 5)
