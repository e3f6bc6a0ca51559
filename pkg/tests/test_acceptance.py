"""One test per acceptance criterion, each at exact tolerance.

Criteria 3, 9 and 10 contradict the computation on some items and are marked
``xfail(strict=True)``: they run in full and must keep failing for the
reasons listed in their ``reason``.
"""

import random

import pytest
import sympy as sp

from torusk3 import curves, fixtures, intmat, lattice, picard
from torusk3.polytope import is_reflexive, polar_dual

NAMES = ("Delta1", "Delta2", "Delta3")


def _graph(name):
    return picard.build_intersection_graph(
        fixtures.polytope(name), order=fixtures.NODE_ORDER[name], labels=fixtures.NODE_LABELS[name])


def _dual3_graph():
    d = polar_dual(fixtures.polytope("Delta3"))
    return d, picard.build_intersection_graph(d, order=fixtures.DUAL3_ORDER,
                                              labels=fixtures.DUAL3_LABELS)


def test_criterion_01_reflexivity(criterion):
    bad = []
    for n in NAMES:
        p = fixtures.polytope(n)
        if not is_reflexive(p):
            bad.append(f"{n} not reflexive")
        if sorted(polar_dual(p).vertices) != sorted(fixtures.DUAL_VERTICES[n]):
            bad.append(f"{n} dual differs")
    criterion(1, "reflexivity and dual vertices", bad)


def test_criterion_02_ranks(criterion):
    bad = []
    sums = {"Delta1": 21, "Delta2": 22, "Delta3": 20}
    for n in NAMES:
        p = fixtures.polytope(n)
        got = (picard.rank_L0(p), picard.picard_rank(p), picard.picard_rank(polar_dual(p)))
        ref = (fixtures.RANK_L0[n], fixtures.RHO[n], fixtures.RHO_DUAL[n])
        if got != ref or got[1] + got[2] != sums[n]:
            bad.append(f"{n}: {got} vs {ref}")
    criterion(2, "rank L0, rho, rho*", bad)


@pytest.mark.xfail(strict=True, reason="the linear relations force D1^2 = 12 on Delta2 and "
                   "D2^2 = 2 on Delta3; the reference vectors list 14 and 4")
def test_criterion_03_self_intersections(criterion):
    bad = []
    for n in NAMES:
        got = tuple(_graph(n).self_intersections())
        if got != fixtures.SELF_INTERSECTIONS[n]:
            bad.append(f"{n}: {got}")
    _, g = _dual3_graph()
    if tuple(g.self_intersections()) != fixtures.SELF_INTERSECTIONS["Delta3*"]:
        bad.append("Delta3*")
    criterion(3, "self-intersection vectors", bad)


def test_criterion_04_grams(criterion):
    bad = []
    for n in NAMES:
        pb = picard.picard_gram(_graph(n), fixtures.polytope(n), basis=fixtures.BASIS[n])
        if pb.gram != fixtures.A_B[n]:
            bad.append(n)
    d, g = _dual3_graph()
    if picard.picard_gram(g, d, basis=fixtures.DUAL3_BASIS).gram != fixtures.B_B_DUAL3:
        bad.append("Delta3*")
    criterion(4, "Gram matrices A_B and B_B", bad)


def test_criterion_05_congruences(criterion):
    bad = []
    for n in NAMES:
        w = lattice.CongruenceWitness(fixtures.P_MATRIX[n], fixtures.A_B[n], fixtures.target_gram(n))
        if not lattice.verify_congruence(w):
            bad.append(n)
    criterion(5, "congruence witnesses P", bad)


def test_criterion_06_invariants(criterion):
    inv = lattice.invariants(fixtures.B_B_DUAL3)
    got = (inv.rank, inv.signature, inv.determinant, inv.disc_group)
    bad = [] if got == (18, (1, 17), -4, (2, 2)) else [str(got)]
    criterion(6, "invariants of B_B", bad)


def test_criterion_07_duality(criterion):
    bad = []
    if not lattice.check_duality(fixtures.A_B["Delta3"], fixtures.B_B_DUAL3).passed:
        bad.append("Delta3 does not pass")
    for n in ("Delta1", "Delta2"):
        d = polar_dual(fixtures.polytope(n))
        t = picard.picard_gram(picard.build_intersection_graph(d), d).gram
        rep = lattice.check_duality(fixtures.A_B[n], t)
        if rep.failed_stage != "rank" or rep.rank_s + rep.rank_t == 22:
            bad.append(f"{n} fails at {rep.failed_stage}")
    criterion(7, "duality checks", bad)


def test_criterion_08_recognition(criterion):
    bad = []
    for n in NAMES:
        rec = lattice.recognize(fixtures.A_B[n])
        ok = (rec.level == "verified-isometric" and lattice.verify_congruence(rec.witness)
              and lattice.same_invariants(lattice.invariants(rec.catalog_gram),
                                          lattice.invariants(fixtures.target_gram(n))))
        if not ok:
            bad.append(f"{n}: {rec.level} {rec.name}")
    for n in ("Delta1", "Delta2"):
        if not lattice.detect_U_summand(fixtures.A_B[n]):
            bad.append(f"{n}: no U summand")
    criterion(8, "recognition and U summands", bad)


@pytest.mark.xfail(strict=True, reason="X^6 cancels in the [6A2] expansion; the [A2+E6+A8] "
                   "template has Y^2*Z^4, X*Y^2*Z^3, X^2*Y*Z^3 outside Delta2")
def test_criterion_09_support_membership(criterion, paper_report):
    bad = []
    for case in fixtures.CURVES:
        for kind in ("monomials", "family"):
            c = paper_report.by_id(f"curve/{case.name}/{kind}")
            if c.status != "pass":
                bad.append(f"{case.name} {kind}: {c.computed}")
    if paper_report.by_id("curve/6A2/Z6").status != "pass":
        bad.append("Z^6 for [6A2]")
    criterion(9, "support membership and families", bad)


@pytest.mark.xfail(strict=True, reason="at the stated parameters [A5+A11] and [E6+A11] give "
                   "A8 plus Milnor number 6 off the grid, [2A8] gives A2+A8 plus 4, and "
                   "[6A2] has an extra A1 at (1:0:0)")
def test_criterion_10_configurations(criterion, paper_report):
    bad = []
    for case in fixtures.CURVES:
        c = paper_report.by_id(f"curve/{case.name}/configuration")
        allowed = {"pass", "computed-with-note"} if case.name in ("3A5", "A5+2E6") else {"pass"}
        if c.status not in allowed:
            bad.append(f"{case.name}: {c.computed}")
    if paper_report.by_id("curve/6A2/transversal").status != "pass":
        bad.append("6A2 intersection not transversal")
    criterion(10, "singularity configurations", bad)


def test_criterion_11_properties(criterion):
    from test_lattice import random_symmetric, random_unimodular
    from test_polytope import _random_reflexive

    bad = []
    for n in range(1, 18):
        f = curves.parse_poly(f"X^2*Z^{n - 1} + Y^{n + 1}")
        if curves.milnor_number(f, (0, 0, 1)) != n:
            bad.append(f"mu A{n}")
    polys = _random_reflexive(2024)
    if len(polys) != 20 or any(polar_dual(polar_dual(p)) != p for p in polys):
        bad.append("dual involution")
    rng = random.Random(7)
    for _ in range(100):
        a = random_symmetric(rng, rng.randint(1, 6))
        D, U, V = intmat.smith_normal_form(a)
        if intmat.matmul(intmat.matmul(U, a), V) != D or \
                [abs(D[i][i]) for i in range(len(a)) if D[i][i]] != \
                [abs(int(x)) for x in sp.matrices.normalforms.invariant_factors(
                    sp.Matrix(a), domain=sp.ZZ) if x]:
            bad.append("SNF")
            break
    for g in (fixtures.A_B["Delta1"], fixtures.A_B["Delta2"], fixtures.B_B_DUAL3):
        p = random_unimodular(rng, len(g))
        if not lattice.same_invariants(lattice.invariants(g),
                                       lattice.invariants(intmat.congruence(p, g))):
            bad.append("congruence invariance")
    criterion(11, "property suites", bad)
