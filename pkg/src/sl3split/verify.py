"""Named verification suites with reproducible seeded sampling.

Each suite draws its trial data from seeds derived as hash(master seed,
trial index), so reports are identical however trials are sharded.  A suite
returns a Report whose failure list carries a full input witness; the first
failing random trial is re-run at shorter generator words to shrink the
witness before reporting.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .arith import hilbert_real, kronecker, legendre_oracle, odd_part, val2
from .blocks import block_factor_any, block_to_matrix
from .cocycle import sigma
from .cosets import (
    canonical_rep,
    enumerate_reps,
    in_rep_box,
    phi_split,
    psi_merge,
    twist_factor,
)
from .errors import ConsistencyError, HypothesisError
from .sampling import (
    derive_seed,
    sample_gamma14,
    sample_positive_diag,
    sample_rational_sl3,
    sample_unipotent,
)
from .sl3 import (
    Cell,
    ScaledPlucker,
    bruhat,
    cartan_long,
    cell_of,
    in_gamma14,
    mat_inv,
    mat_ints,
    mat_mul,
    n_mat,
    plucker,
    scale_down,
    scaled_plucker,
    sym_cartan,
    sym_conj_n,
    sym_s2,
    sym_s3,
    sym_scale,
    t_mat,
)
from .splitting import split, split_block, split_cell, split_coords, split_reduction

S2 = t_mat(1, -1, 1)
S3 = t_mat(1, 1, -1)


@dataclass
class Report:
    suite: str
    cases: int = 0
    failures: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, **witness):
        if len(self.failures) < 32:
            self.failures.append(witness)
        else:
            self.failures[-1] = {"suppressed": "further failures omitted"}

    def as_dict(self) -> dict:
        return {
            "suite": self.suite,
            "cases": self.cases,
            "failures": [{k: repr(v) for k, v in f.items()} for f in self.failures],
            "ok": self.ok,
            "elapsed": round(self.elapsed, 3),
        }


def _timed(fn):
    def wrapper(trials: int, seed: int, bound: int | None = None) -> Report:
        t0 = time.monotonic()
        report = fn(trials, seed, bound)
        report.elapsed = time.monotonic() - t0
        return report

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def _sample_pair(seed, i, max_word):
    w1 = 1 + derive_seed(seed, i, "wl1") % max_word
    w2 = 1 + derive_seed(seed, i, "wl2") % max_word
    return (sample_gamma14(derive_seed(seed, i, "g1"), w1),
            sample_gamma14(derive_seed(seed, i, "g2"), w2))


@_timed
def suite_kronecker(trials, seed, bound) -> Report:
    """Multiplicativity, periodicity, reciprocity and the small-value laws of
    the Kronecker symbol, plus agreement with the exhaustive Legendre oracle."""
    bound = bound or 10**6
    rep = Report("kronecker")

    def nz(rng):
        v = 0
        while v == 0:
            v = rng.randint(-bound, bound)
        return v

    for i in range(trials):
        rng = random.Random(derive_seed(seed, i, "kron"))
        a, b, m, n = nz(rng), nz(rng), nz(rng), nz(rng)
        rep.cases += 1
        if kronecker(a, n) * kronecker(b, n) != kronecker(a * b, n):
            rep.fail(law="numerator multiplicativity", a=a, b=b, n=n)
        if kronecker(a, m) * kronecker(a, n) != kronecker(a, m * n):
            rep.fail(law="denominator multiplicativity", a=a, m=m, n=n)
        npos = abs(n)
        period = 4 * npos if npos % 4 == 2 else npos
        k = rng.randint(-3, 3)
        if kronecker(a + k * period, npos) != kronecker(a, npos):
            rep.fail(law="numerator periodicity", a=a, n=npos, k=k)
        if a % 4 != 3:
            bper = 4 * abs(a) if a % 4 == 2 else abs(a)
            if bper and kronecker(a, m + k * bper) != kronecker(a, m):
                rep.fail(law="denominator periodicity", a=a, m=m, k=k)
        nodd = odd_part(n)
        if kronecker(-1, n) != (-1) ** (((nodd - 1) // 2) % 2):
            rep.fail(law="value at -1", n=n)
        if kronecker(2, nodd) != (-1) ** (((nodd * nodd - 1) // 8) % 2):
            rep.fail(law="value at 2", n=n)
        if math.gcd(m, n) == 1:
            modd = odd_part(m)
            rhs = hilbert_real(n, m) * (-1) ** ((((modd - 1) // 2) * ((nodd - 1) // 2)) % 2)
            if kronecker(m, n) * kronecker(n, m) != rhs:
                rep.fail(law="reciprocity", m=m, n=n)
        modd = odd_part(m)
        rhs = (-1) ** ((((modd - 1) // 2) * ((nodd - 1) // 2)) % 2)
        if kronecker(kronecker(-1, m), n) != rhs:
            rep.fail(law="iterated symbol", m=m, n=n)
        if kronecker(kronecker(-1, m), n) != hilbert_real(kronecker(-1, m), kronecker(-1, n)):
            rep.fail(law="iterated symbol vs hilbert", m=m, n=n)

    p = 3
    while p <= 500:
        for k in range(-p, p + 1):
            rep.cases += 1
            if kronecker(k, p) != legendre_oracle(k, p):
                rep.fail(law="legendre oracle", k=k, p=p)
        p += 2
        while not all(p % q for q in range(3, int(p**0.5) + 1, 2)):
            p += 2
    return rep


@_timed
def suite_plucker(trials, seed, bound) -> Report:
    """Quadratic relation, unipotent invariance, coprimality and congruence
    of the coordinates, and exact Bruhat reconstruction."""
    bound = bound or 12
    rep = Report("plucker")
    for i in range(trials):
        wl = 1 + derive_seed(seed, i, "wl") % bound
        g = sample_gamma14(derive_seed(seed, i, "g"), wl)
        rep.cases += 1
        p = plucker(g)
        if p.relation() != 0 or not p.is_valid():
            rep.fail(check="relation", g=g, p=p)
        sp = scale_down(p)
        if not sp.is_valid():
            rep.fail(check="scaled invariants", g=g, sp=sp)
        if math.gcd(p.a1, p.b1, p.c1) != 1 or math.gcd(p.a2, p.b2, p.c2) != 1:
            rep.fail(check="unscaled coprimality", g=g, p=p)
        n = sample_unipotent(derive_seed(seed, i, "n"))
        if plucker(mat_mul(n, g)) != p:
            rep.fail(check="left invariance", g=g, n=n)
        if cell_of(plucker(mat_mul(g, n))) != cell_of(p):
            rep.fail(check="cell right invariance", g=g, n=n)
        if cell_of(plucker(mat_mul(n, g))) != cell_of(p):
            rep.fail(check="cell left invariance", g=g, n=n)
        r = sample_rational_sl3(derive_seed(seed, i, "rat"), 4)
        dec = bruhat(r)
        rec = mat_mul(dec.n, mat_mul(dec.t, mat_mul(dec.w.matrix, dec.n2)))
        if any(Fraction(rec[a][b]) != Fraction(r[a][b]) for a in range(3) for b in range(3)):
            rep.fail(check="bruhat reconstruction", g=r, dec=dec)
    return rep


@_timed
def suite_cocycle(trials, seed, bound) -> Report:
    """Cocycle identity and the unipotent/positive-diagonal identities."""
    bound = bound or 4
    rep = Report("cocycle")
    for i in range(trials):
        g1 = sample_rational_sl3(derive_seed(seed, i, "g1"), bound)
        g2 = sample_rational_sl3(derive_seed(seed, i, "g2"), bound)
        g3 = sample_rational_sl3(derive_seed(seed, i, "g3"), bound)
        rep.cases += 1
        lhs = sigma(g1, g2) * sigma(mat_mul(g1, g2), g3)
        rhs = sigma(g1, mat_mul(g2, g3)) * sigma(g2, g3)
        if lhs != rhs:
            rep.fail(check="cocycle identity", g1=g1, g2=g2, g3=g3)
        if lhs not in (-1, 1):
            rep.fail(check="sign codomain", g1=g1, g2=g2)
        n1 = sample_unipotent(derive_seed(seed, i, "n1"))
        n2 = sample_unipotent(derive_seed(seed, i, "n2"))
        a = sample_positive_diag(derive_seed(seed, i, "a"))
        if sigma(mat_mul(n1, g1), mat_mul(g2, n2)) != sigma(g1, g2):
            rep.fail(check="bi-invariance", g1=g1, g2=g2, n1=n1, n2=n2)
        if sigma(mat_mul(g1, n1), g2) != sigma(g1, mat_mul(n1, g2)):
            rep.fail(check="shift invariance", g1=g1, g2=g2, n1=n1)
        if sigma(n1, g1) != 1 or sigma(g1, n1) != 1:
            rep.fail(check="unipotent triviality", g1=g1, n1=n1)
        if sigma(g1, a) != 1:
            rep.fail(check="positive diagonal triviality", g1=g1, a=a)
    return rep


def _shrink_pair(seed, i, max_word, pred):
    """Smallest failing word length for a failing paired trial."""
    for wl in range(1, max_word + 1):
        g1 = sample_gamma14(derive_seed(seed, i, "g1"), wl)
        g2 = sample_gamma14(derive_seed(seed, i, "g2"), wl)
        if not pred(g1, g2):
            return g1, g2
    return None


@_timed
def suite_homomorphism(trials, seed, bound) -> Report:
    """The defining identity: the splitting differs from a homomorphism by
    exactly the cocycle."""
    bound = bound or 12
    rep = Report("homomorphism")

    def holds(g1, g2):
        return split(mat_mul(g1, g2)) == split(g1) * split(g2) * sigma(g1, g2)

    for i in range(trials):
        g1, g2 = _sample_pair(seed, i, bound)
        rep.cases += 1
        if not holds(g1, g2):
            small = _shrink_pair(seed, i, bound, holds) or (g1, g2)
            rep.fail(check="homomorphism", g1=small[0], g2=small[1])
    return rep


@_timed
def suite_symmetry(trials, seed, bound) -> Report:
    """Coordinate transforms match matrix conjugation, and the splitting
    transforms with the documented sign under each symmetry."""
    bound = bound or 9
    rep = Report("symmetry")
    for i in range(trials):
        rng = random.Random(derive_seed(seed, i, "sym"))
        wl = 1 + rng.randrange(bound)
        g = sample_gamma14(derive_seed(seed, i, "g"), wl)
        sp = scaled_plucker(g)
        rep.cases += 1
        x, y, z = rng.randint(-3, 3), rng.randint(-3, 3), rng.randint(-3, 3)
        n = n_mat(x, y, z)
        if scaled_plucker(mat_mul(n, mat_mul(g, mat_inv(n)))) != sym_conj_n(sp, x, y, z):
            rep.fail(check="conjugation transform", g=g, xyz=(x, y, z))
        if scaled_plucker(mat_mul(S3, mat_mul(g, S3))) != sym_s3(sp):
            rep.fail(check="s3 transform", g=g)
        if scaled_plucker(mat_mul(S2, mat_mul(g, S2))) != sym_s2(sp):
            rep.fail(check="s2 transform", g=g)
        if scaled_plucker(cartan_long(g)) != sym_cartan(sp):
            rep.fail(check="cartan transform", g=g)
        s = split(g)
        if not (split(mat_mul(n, g)) == split(mat_mul(g, n)) == s):
            rep.fail(check="unipotent bi-invariance", g=g, n=n)
        if split(mat_mul(n, mat_mul(g, mat_inv(n)))) != s:
            rep.fail(check="conjugation invariance", g=g, n=n)
        if sp.a1 != 0 and sp.a2 != 0:
            expect = -s if sp.a1 * sp.a2 > 0 else s
            if split(mat_mul(S2, mat_mul(g, S2))) != expect:
                rep.fail(check="s2 sign rule", g=g)
            if split(mat_mul(S3, mat_mul(g, S3))) != s:
                rep.fail(check="s3 big-cell invariance", g=g)
            if split(cartan_long(g)) != hilbert_real(-sp.a1, -sp.a2) * s:
                rep.fail(check="cartan sign rule", g=g)
            d = odd_part(math.gcd(sp.a1, sp.a2))
            if d > 1:
                d1 = math.gcd(d, sp.b1)
                d2 = d // d1
                if sp.b2 % d2 == 0:
                    scaled = sym_scale(sp, d1, d2)
                    tm = mat_mul(t_mat(1, Fraction(1, d2), Fraction(1, d)),
                                 mat_mul(g, t_mat(1, d2, d1 * d2)))
                    if not in_gamma14(mat_ints(tm)):
                        rep.fail(check="scale conjugate membership", g=g, d1=d1, d2=d2)
                    elif scaled_plucker(mat_ints(tm)) != scaled:
                        rep.fail(check="scale transform", g=g, d1=d1, d2=d2)

    # the zero-corner cases need elements with a2 = 0 and all blocks nontrivial
    count = 0
    for spc in _small_cell_enumeration(4):
        if spc.a1 == 0 or spc.a2 != 0:
            continue
        bp = block_factor_any(spc)
        g = block_to_matrix(bp)
        s = split(g)
        rep.cases += 1
        count += 1
        if bp.c1 != 0 and bp.c2 != 0 and bp.c3 != 0:
            expect = hilbert_real(bp.c1 * bp.a3, -1) * s
        else:
            expect = s
        if split(mat_mul(S3, mat_mul(g, S3))) != expect:
            rep.fail(check="s3 zero-corner sign rule", sp=spc, bp=bp)
        if spc.b2 != 0 and split(cartan_long(g)) != hilbert_real(-spc.a1, spc.b2) * s:
            rep.fail(check="cartan zero-corner sign rule", sp=spc)
    if count == 0:
        rep.fail(check="coverage", detail="no zero-corner elements enumerated")
    return rep


@_timed
def suite_reduction(trials, seed, bound) -> Report:
    """Removing any odd divisor of gcd(a1, a2) multiplies the splitting by
    the documented two-symbol correction; even divisors are rejected."""
    bound = bound or 10
    rep = Report("reduction")

    def check_all_reductions(sp):
        rep.cases += 1
        s = split_coords(sp)
        d = odd_part(math.gcd(sp.a1, sp.a2))
        for dd in sorted(_divisors(d)):
            d1 = math.gcd(dd, sp.b1)
            d2 = dd // d1
            if sp.b2 % d2:
                continue
            reduced, corr = split_reduction(sp, d1, d2)
            if dd == 1 and (reduced, corr) != (sp, 1):
                rep.fail(check="trivial reduction", sp=sp)
            if s != corr * split_coords(reduced):
                rep.fail(check="reduction correction", sp=sp, d1=d1, d2=d2)
        if math.gcd(sp.a1, sp.a2) % 2 == 0:
            try:
                v = val2(math.gcd(sp.a1, sp.a2))[0]
                split_reduction(sp, 2**v, 1)
            except HypothesisError:
                pass
            else:
                rep.fail(check="even divisor rejected", sp=sp)

    for i in range(trials):
        wl = 1 + derive_seed(seed, i, "wl") % bound
        g = sample_gamma14(derive_seed(seed, i, "g"), wl)
        sp = scaled_plucker(g)
        if sp.a1 == 0 or sp.a2 == 0:
            continue
        check_all_reductions(sp)
    for a1 in range(-6, 7):
        for a2 in range(-6, 7):
            if a1 == 0 or a2 == 0 or odd_part(math.gcd(a1, a2)) == 1:
                continue
            for spc in enumerate_reps(a1, a2):
                check_all_reductions(spc)
    return rep


def _divisors(n: int) -> list[int]:
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return out


def _small_cell_enumeration(height: int):
    """All valid coordinate sextuples of bounded height outside the big cell."""
    out = [ScaledPlucker(0, 0, -1, 0, 0, -1)]
    cmods = [c for c in range(-height, height + 1) if c % 4 == 3]
    nz = [v for v in range(-height, height + 1) if v]
    for b2 in nz:
        for c2 in cmods:
            if math.gcd(b2, c2) == 1:
                out.append(ScaledPlucker(0, 0, -1, 0, b2, c2))
    for b1 in nz:
        for c1 in cmods:
            if math.gcd(b1, c1) == 1:
                out.append(ScaledPlucker(0, b1, c1, 0, 0, -1))
    for b1 in nz:
        for c1 in cmods:
            if math.gcd(b1, c1) != 1:
                continue
            for a2 in nz:
                num = -c1 * a2
                if num % (4 * b1):
                    continue
                b2 = num // (4 * b1)
                for c2 in cmods:
                    if math.gcd(a2, b2, c2) != 1:
                        continue
                    sp = ScaledPlucker(0, b1, c1, a2, b2, c2)
                    if sp.is_valid():
                        out.append(sp)
    for b2 in nz:
        for c2 in cmods:
            if math.gcd(b2, c2) != 1:
                continue
            for a1 in nz:
                num = -a1 * c2
                if num % (4 * b2):
                    continue
                b1 = num // (4 * b2)
                for c1 in cmods:
                    if math.gcd(a1, b1, c1) != 1:
                        continue
                    sp = ScaledPlucker(a1, b1, c1, 0, b2, c2)
                    if sp.is_valid():
                        out.append(sp)
    return out


@_timed
def suite_cells(trials, seed, bound) -> Report:
    """Dispatcher, cell table and block-formula oracle agree everywhere:
    exhaustively on enumerated representatives and small cells, and on
    random samples."""
    bound = bound or 6
    rep = Report("cells")
    for a1 in range(-bound, bound + 1):
        for a2 in range(-bound, bound + 1):
            if a1 == 0 or a2 == 0:
                continue
            for spc in enumerate_reps(a1, a2):
                rep.cases += 1
                bp = block_factor_any(spc)
                g = block_to_matrix(bp)
                if scaled_plucker(g) != spc:
                    rep.fail(check="representative reconstruction", sp=spc)
                if split(g) != split_block(bp):
                    rep.fail(check="dispatcher vs oracle", sp=spc)
    for spc in _small_cell_enumeration(8):
        rep.cases += 1
        bp = block_factor_any(spc)
        if split_cell(spc.primed()) != split_block(bp):
            rep.fail(check="cell table vs oracle", sp=spc)
        if split_coords(spc) != split_block(bp):
            rep.fail(check="dispatcher vs oracle (small cells)", sp=spc)
    for i in range(trials):
        wl = 1 + derive_seed(seed, i, "wl") % 12
        g = sample_gamma14(derive_seed(seed, i, "g"), wl)
        sp = scaled_plucker(g)
        rep.cases += 1
        oracle = split_block(block_factor_any(sp))
        if split_coords(sp) != oracle:
            rep.fail(check="dispatcher vs oracle (sampled)", g=g, sp=sp)
        if cell_of(sp.primed()) is not Cell.LONG and split_cell(sp.primed()) != oracle:
            rep.fail(check="cell table vs oracle (sampled)", g=g, sp=sp)
    return rep


def _mult_parameter_tuples(bound: int):
    out = []
    for a1 in range(1, bound + 1, 2):
        for a2v in range(1, bound + 1, 2):
            for a2 in (a2v, -a2v):
                for al1 in range(1, bound + 1):
                    for al2v in range(1, bound + 1):
                        for al2 in (al2v, -al2v):
                            if math.gcd(a1 * a2, al1 * al2) != 1:
                                continue
                            if (a1 * al1 + a2 * al2) % 4 != 0:
                                continue
                            out.append((a1, al1, a2, al2))
    return out


@_timed
def suite_cosets(trials, seed, bound) -> Report:
    """Representative boxes, the coset bijection and its cardinality law."""
    bound = bound or 7
    rep = Report("cosets")
    for i in range(trials):
        wl = 1 + derive_seed(seed, i, "wl") % 10
        g = sample_gamma14(derive_seed(seed, i, "g"), wl)
        sp = scaled_plucker(g)
        if sp.a1 == 0 or sp.a2 == 0:
            continue
        rep.cases += 1
        r, n = canonical_rep(g)
        if not in_rep_box(r):
            rep.fail(check="box membership", g=g, r=r)
        nn = sample_unipotent(derive_seed(seed, i, "n"))
        if canonical_rep(mat_mul(g, nn))[0] != r or canonical_rep(mat_mul(nn, g))[0] != r:
            rep.fail(check="double-coset invariance", g=g, n=nn)
        if canonical_rep(mat_mul(g, n))[0] != r:
            rep.fail(check="idempotence", g=g)

    cache: dict[tuple[int, int], list] = {}

    def reps_of(a, b):
        if (a, b) not in cache:
            cache[(a, b)] = enumerate_reps(a, b)
        return cache[(a, b)]

    for (a1, al1, a2, al2) in _mult_parameter_tuples(bound):
        mu = kronecker(-1, -a1 * a2)
        big = reps_of(a1 * al1, a2 * al2)
        left = reps_of(a1, mu * a2)
        right = reps_of(al1, -mu * al2)
        rep.cases += 1
        if len(big) != len(left) * len(right):
            rep.fail(check="cardinality factorization", params=(a1, al1, a2, al2))
        lset, rset = set(left), set(right)
        for p in big:
            rep.cases += 1
            try:
                r1, r2 = phi_split(p, a1, al1, a2, al2)
                if r1 not in lset or r2 not in rset:
                    rep.fail(check="image membership", p=p, params=(a1, al1, a2, al2))
                if psi_merge((r1, r2), a1, al1, a2, al2) != p:
                    rep.fail(check="psi inverts phi", p=p, params=(a1, al1, a2, al2))
            except (ConsistencyError, HypothesisError) as e:
                rep.fail(check="bijection error", p=p, params=(a1, al1, a2, al2),
                         error=str(e))
        for r1 in left:
            for r2 in right:
                rep.cases += 1
                try:
                    p = psi_merge((r1, r2), a1, al1, a2, al2)
                    if phi_split(p, a1, al1, a2, al2) != (r1, r2):
                        rep.fail(check="phi inverts psi", pair=(r1, r2),
                                 params=(a1, al1, a2, al2))
                except (ConsistencyError, HypothesisError) as e:
                    rep.fail(check="merge error", pair=(r1, r2),
                             params=(a1, al1, a2, al2), error=str(e))
    return rep


@_timed
def suite_twist(trials, seed, bound) -> Report:
    """Twisted multiplicativity of the splitting across the coset bijection."""
    bound = bound or 7
    rep = Report("twist")
    scache: dict[ScaledPlucker, int] = {}

    def s_of(p):
        if p not in scache:
            scache[p] = split_coords(p)
        return scache[p]

    ecache: dict[tuple[int, int], list] = {}

    def reps_of(a, b):
        if (a, b) not in ecache:
            ecache[(a, b)] = enumerate_reps(a, b)
        return ecache[(a, b)]

    for (a1, al1, a2, al2) in _mult_parameter_tuples(bound):
        if (al2 // math.gcd(al1, al2)) % 2 == 0:
            continue
        tw = twist_factor(a1, al1, a2, al2)
        for p in reps_of(a1 * al1, a2 * al2):
            rep.cases += 1
            try:
                r1, r2 = phi_split(p, a1, al1, a2, al2)
                if s_of(p) != s_of(r1) * s_of(r2) * tw:
                    rep.fail(check="twisted multiplicativity", p=p,
                             params=(a1, al1, a2, al2))
            except (ConsistencyError, HypothesisError) as e:
                rep.fail(check="bijection error", p=p,
                         params=(a1, al1, a2, al2), error=str(e))
    return rep


SUITES = {
    "kronecker": suite_kronecker,
    "plucker": suite_plucker,
    "cocycle": suite_cocycle,
    "homomorphism": suite_homomorphism,
    "symmetry": suite_symmetry,
    "reduction": suite_reduction,
    "cells": suite_cells,
    "cosets": suite_cosets,
    "twist": suite_twist,
}
