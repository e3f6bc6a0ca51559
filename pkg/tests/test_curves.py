import random
from fractions import Fraction

import pytest
import sympy as sp

from torusk3 import curves, fixtures
from torusk3.curves import parse_poly
from torusk3.errors import CommonComponent, DegreeMismatch, InputError, NotSingular

ORIGIN = (0, 0, 1)


def germ(text):
    """Homogenize an affine germ in x, y with Z and return (f, origin)."""
    return parse_poly(text), ORIGIN


def case_curve(name):
    c = fixtures.curve_case(name)
    return curves.TorusCurve(parse_poly(c.f2, c.params), parse_poly(c.f3, c.params))


@pytest.mark.parametrize("n", range(1, 18))
def test_milnor_An(n):
    f, p = germ(f"X^2*Z^{n - 1} + Y^{n + 1}")
    assert curves.milnor_number(f, p) == n
    r = curves.classify_ade(f, p)
    assert (r.hessian_corank, r.ade_type) == (0 if n == 1 else 1, f"A{n}")


@pytest.mark.parametrize("a,b", [(2, 5), (3, 4), (3, 5), (4, 4), (4, 7), (5, 6)])
def test_milnor_brieskorn_pham(a, b):
    f, p = germ(f"X^{a}*Z^{b - a} + Y^{b}")
    assert curves.milnor_number(f, p) == (a - 1) * (b - 1)


@pytest.mark.parametrize("text,mu", [
    ("X^3*Z + Y^4 + X^2*Y^2", 6),
    ("X^3*Z^2 + Y^5 + X^2*Y^2*Z", 8),
    ("X^4*Z + Y^5 + X^3*Y^2", 12),
    ("X^2*Z^5 + Y^7 + X*Y^4*Z^2", 6),
])
def test_milnor_semiquasihomogeneous(text, mu):
    # terms above the Newton diagonal do not change mu = (a-1)(b-1)
    assert curves.milnor_number(parse_poly(text), ORIGIN) == mu


def test_E6():
    f, p = germ("X^3*Z + Y^4")
    r = curves.classify_ade(f, p)
    assert (r.milnor, r.hessian_corank, r.ade_type) == (6, 2, "E6")


@pytest.mark.parametrize("text,mu", [("X^3 + Y^3", 4), ("X^3*Z^2 + Y^5", 8), ("X^2*Y*Z + Y^4", 5)])
def test_outside_the_catalogue(text, mu):
    r = curves.classify_ade(*germ(text))
    assert r.milnor == mu
    assert r.ade_type == f"Unclassified({mu},2)"


def test_not_singular():
    with pytest.raises(NotSingular):
        curves.milnor_number(parse_poly("X^2 + Y*Z"), (1, 0, 0))


def test_projective_invariance():
    rng = random.Random(9)
    f, p = germ("X^2*Z^4 + Y^6 + X*Y^5")
    mu = curves.milnor_number(f, p)
    for _ in range(5):
        while True:
            A = [[rng.randint(-2, 2) for _ in range(3)] for _ in range(3)]
            if sp.Matrix(A).det() != 0:
                break
        g = f.linear_substitution(A)
        q = tuple(sp.Matrix(A).inv() * sp.Matrix(p))
        q = tuple(Fraction(int(sp.fraction(x)[0]), int(sp.fraction(x)[1])) for x in q)
        assert curves.verify_singular(g, q)
        assert curves.milnor_number(g, q) == mu == 5


def test_expansion_against_sympy():
    X, Y, Z = sp.symbols("X Y Z")
    for case in fixtures.CURVES:
        c = case_curve(case.name)
        subs = {sp.Symbol(k): sp.Rational(str(v)) for k, v in case.params.items()}
        ns = {"X": X, "Y": Y, "Z": Z, **{str(s): s for s in subs}}
        ref = sp.expand((sp.sympify(case.f2.replace("^", "**"), ns) ** 3
                         + sp.sympify(case.f3.replace("^", "**"), ns) ** 2).subs(subs))
        got = {m: Fraction(int(sp.fraction(c_)[0]), int(sp.fraction(c_)[1]))
               for m, c_ in sp.Poly(ref, X, Y, Z).terms()} if ref != 0 else {}
        assert c.f.terms == got, case.name


def test_parse_errors():
    with pytest.raises(DegreeMismatch):
        parse_poly("X^2 + Y")
    with pytest.raises(InputError):
        parse_poly("X^2 + Q*Y^2")
    assert parse_poly("t_1*X + Y", {"t1": 2}) == parse_poly("2*X + Y")


def test_transversal_six_points():
    c = case_curve("6A2")
    rep = curves.transversal_intersection_report(c.f2, c.f3)
    assert rep.transversal and curves.transversal_intersection_count(c.f2, c.f3) == 6


def test_tangential_intersection():
    c = case_curve("A17")
    assert curves.transversal_intersection_count(c.f2, c.f3) < 6
    assert not curves.transversal_intersection_report(c.f2, c.f3).transversal


def test_common_component():
    with pytest.raises(CommonComponent):
        curves.transversal_intersection_count(parse_poly("X^2"), parse_poly("X^3"))


def test_verify_singular():
    c = case_curve("A17")
    assert curves.verify_singular(c.f, (0, 0, 1))
    assert not curves.verify_singular(c.f, (1, 1, 1))
    c = case_curve("2A2+A11")
    assert curves.verify_singular(c.f, (1, 1, 1))
    assert not curves.verify_singular(c.f, (-1, 1, 1))


def test_global_total_on_known_curves():
    # a nodal cubic times a line through none of its points: 1 + 3 nodes
    f = parse_poly("(Y^2*Z - X^3 - X^2*Z)*(X + 2*Y + 5*Z)")
    assert curves.global_tjurina_total(f) == 4
    # a smooth conic has no singular points
    assert curves.global_tjurina_total(parse_poly("X^2 + Y^2 + Z^2")) == 0


@pytest.mark.parametrize("name", ["A17", "A2+A14", "3A5", "2A5+E6", "3E6", "4A2+E6"])
def test_residual_zero(name):
    a = curves.analyze_curve(case_curve(name).f, fixtures.curve_case(name).points)
    assert a.residual == 0
    assert curves.parse_configuration(a.configuration) == curves.parse_configuration(name)


def test_configuration_strings():
    assert curves.parse_configuration("2A2+A11") == {"A2": 2, "A11": 1}
    assert curves.format_configuration({"A11": 1, "E6": 1, "A2": 2}) == "2A2+A11+E6"
    with pytest.raises(InputError):
        curves.parse_configuration("2B")


def test_rational_grid_search():
    pts = curves.rational_singular_points(case_curve("2A2+A11").f)
    assert {curves.proj_point(p) for p in pts} >= {curves.proj_point((0, 0, 1)),
                                                  curves.proj_point((1, 1, 1))}
