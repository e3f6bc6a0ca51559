import random
from fractions import Fraction

import numpy as np
import pytest
import sympy as sp
from sympy.matrices.normalforms import invariant_factors

from torusk3 import fixtures, intmat, lattice
from torusk3.errors import Degenerate


def random_symmetric(rng, n, lo=-4, hi=4):
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            a[i][j] = a[j][i] = rng.randint(lo, hi)
    return a


def random_unimodular(rng, n, steps=12):
    p = intmat.identity(n)
    for _ in range(steps):
        i, j = rng.sample(range(n), 2)
        f = rng.choice((-2, -1, 1, 2))
        p[i] = [x + f * y for x, y in zip(p[i], p[j])]
    if rng.random() < 0.5:
        p[0] = [-x for x in p[0]]
    return p


def test_snf_against_sympy():
    rng = random.Random(7)
    for _ in range(100):
        n = rng.randint(1, 6)
        a = random_symmetric(rng, n)
        D, U, V = intmat.smith_normal_form(a)
        assert intmat.matmul(intmat.matmul(U, a), V) == D
        assert abs(intmat.det(U)) == 1 and abs(intmat.det(V)) == 1
        diag = [D[i][i] for i in range(n)]
        assert all(D[i][j] == 0 for i in range(n) for j in range(n) if i != j)
        nz = [d for d in diag if d]
        assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
        oracle = [abs(int(x)) for x in invariant_factors(sp.Matrix(a), domain=sp.ZZ)]
        assert sorted(map(abs, diag)) == sorted(oracle)


def test_det_rank_signature_against_oracles():
    rng = random.Random(11)
    for _ in range(100):
        n = rng.randint(1, 7)
        a = random_symmetric(rng, n)
        m = sp.Matrix(a)
        assert intmat.det(a) == m.det()
        assert intmat.rank(a) == m.rank()
        if m.det() != 0:
            ev = np.linalg.eigvalsh(np.array(a, dtype=float))
            assert intmat.signature(a) == (int((ev > 0).sum()), int((ev < 0).sum()))


def test_congruence_invariance():
    rng = random.Random(3)
    grams = [fixtures.A_B[n] for n in ("Delta1", "Delta2", "Delta3")]
    grams += [lattice.gram_A(4), lattice.gram_E(6), lattice.direct_sum([lattice.gram_U(), lattice.gram_k(-6)])]
    for g in grams:
        inv = lattice.invariants(g)
        for _ in range(5):
            p = random_unimodular(rng, len(g))
            h = intmat.congruence(p, g)
            inv_h = lattice.invariants(h)
            assert lattice.same_invariants(inv, inv_h)
            assert lattice.verify_congruence(lattice.CongruenceWitness(
                tuple(map(tuple, p)), lattice.as_gram(g), lattice.as_gram(h)))


def test_discriminant_value_independent_of_lift():
    g = lattice.as_gram(fixtures.B_B_DUAL3)
    inv = lattice.invariants(g)
    ginv = intmat.inverse(g)
    n = len(g)

    def q(u):
        return sum(Fraction(u[a]) * ginv[a][b] * u[b] for a in range(n) for b in range(n)) % 2

    rng = random.Random(5)
    for u, val in zip(inv.generator_lifts, inv.q_values):
        assert q(u) == val % 2
        for _ in range(10):
            shift = [rng.randint(-3, 3) for _ in range(n)]
            u2 = [a + sum(s * g[k][i] for k, s in enumerate(shift)) for i, a in enumerate(u)]
            assert q(u2) == q(u)


@pytest.mark.parametrize("g,rank,sig,det,group", [
    (fixtures.A_B["Delta1"], 4, (1, 3), -8, (2, 4)),
    (fixtures.A_B["Delta2"], 7, (1, 6), 6, (6,)),
    (fixtures.A_B["Delta3"], 2, (1, 1), -4, (2, 2)),
    (fixtures.B_B_DUAL3, 18, (1, 17), -4, (2, 2)),
])
def test_invariants(g, rank, sig, det, group):
    inv = lattice.invariants(g)
    assert (inv.rank, inv.signature, inv.determinant, inv.disc_group) == (rank, sig, det, group)
    assert sp.Matrix(g).det() == det


def test_degenerate():
    with pytest.raises(Degenerate):
        lattice.invariants(((1, 1), (1, 1)))


@pytest.mark.parametrize("name", ["Delta1", "Delta2", "Delta3"])
def test_reference_P(name):
    w = lattice.CongruenceWitness(fixtures.P_MATRIX[name], fixtures.A_B[name],
                                  fixtures.target_gram(name))
    assert lattice.verify_congruence(w)


@pytest.mark.parametrize("name", ["Delta1", "Delta2", "Delta3"])
def test_recognize(name):
    rec = lattice.recognize(fixtures.A_B[name])
    assert rec.level == "verified-isometric"
    assert lattice.verify_congruence(rec.witness)
    assert lattice.same_invariants(lattice.invariants(rec.catalog_gram),
                                   lattice.invariants(fixtures.target_gram(name)))


def test_recognize_unknown():
    assert lattice.recognize(((-2, 1), (1, 30))).level in ("unknown", "same-invariants")


def test_find_congruence_rejects_different_det():
    assert lattice.find_congruence(lattice.gram_A(2), lattice.gram_U()) is None


def test_u_summand():
    assert lattice.detect_U_summand(fixtures.A_B["Delta1"])
    assert lattice.detect_U_summand(fixtures.A_B["Delta2"])
    assert not lattice.detect_U_summand(fixtures.A_B["Delta3"])
    w = lattice.u_summand_witness(fixtures.A_B["Delta1"])
    assert lattice.verify_congruence(w)
    assert [list(r[:2]) for r in w.target[:2]] == [[0, 1], [1, 0]]


def test_duality():
    ok = lattice.check_duality(fixtures.A_B["Delta3"], fixtures.B_B_DUAL3)
    assert ok.passed and ok.anti_isometry is not None
    for name in ("Delta1", "Delta2"):
        bad = lattice.check_duality(fixtures.A_B[name], fixtures.B_B_DUAL3)
        assert bad.failed_stage == "rank"


def test_duality_detects_wrong_form():
    # <4> + <-1> matches rank and signature but has discriminant group Z/4
    t = fixtures.B_B_DUAL3
    rep = lattice.check_duality(lattice.direct_sum([lattice.gram_k(2), lattice.gram_k(-2)]), t)
    assert rep.passed
    rep = lattice.check_duality(lattice.direct_sum([lattice.gram_k(4), lattice.gram_k(-1)]), t)
    assert rep.rank_ok and rep.signature_ok and not rep.discriminant_ok
    assert rep.failed_stage == "discriminant"


def test_standard_grams():
    assert sp.Matrix(lattice.gram_E(8)).det() == 1
    assert sp.Matrix(lattice.gram_E(6)).det() == 3
    assert sp.Matrix(lattice.gram_A(5)).det() == -6
