"""Plane sextics ``F2^3 + F3^2`` and their singular points.

Polynomials are kept as exact ``{exponent: Fraction}`` maps.  Milnor numbers
come from linear algebra on truncated jets: ``dim O / (J + m^{N+1})`` grows
with ``N`` until ``m^{N+1} ⊆ J``, and two equal consecutive values prove it
has stopped (Nakayama).
"""

from __future__ import annotations

import logging
import re
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import comb, gcd
from typing import Iterable, Mapping

from .errors import CommonComponent, DegreeMismatch, InputError, NotIsolated, NotSingular
from .monomials import WeightedMonomial, monomial_to_point
from .polytope import Polytope

log = logging.getLogger(__name__)

VARS = ("X", "Y", "Z")


def _frac(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, str)):
        return Fraction(c)
    raise TypeError(f"non-exact coefficient {c!r}")


@dataclass(frozen=True)
class HomPoly:
    """Homogeneous polynomial in X, Y, Z with rational coefficients."""

    terms: Mapping[tuple[int, int, int], Fraction]
    degree: int

    def __post_init__(self):
        clean = {}
        for e, c in dict(self.terms).items():
            c = _frac(c)
            if c == 0:
                continue
            e = tuple(int(x) for x in e)
            if len(e) != 3 or min(e) < 0 or sum(e) != self.degree:
                raise DegreeMismatch(f"term {e} does not have degree {self.degree}")
            clean[e] = c
        object.__setattr__(self, "terms", dict(sorted(clean.items(), reverse=True)))

    @classmethod
    def zero(cls, degree: int) -> "HomPoly":
        return cls({}, degree)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, HomPoly):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return True
        return self.degree == other.degree and self.terms == other.terms

    def __hash__(self):
        return hash((self.degree, tuple(self.terms.items())))

    def __add__(self, other: "HomPoly") -> "HomPoly":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.degree != other.degree:
            raise DegreeMismatch("cannot add polynomials of different degrees")
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return HomPoly(out, self.degree)

    def __neg__(self):
        return HomPoly({e: -c for e, c in self.terms.items()}, self.degree)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return HomPoly({e: c * other for e, c in self.terms.items()}, self.degree)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                out[e] = out.get(e, 0) + c1 * c2
        return HomPoly(out, self.degree + other.degree)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "HomPoly":
        out = HomPoly({(0, 0, 0): 1}, 0)
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, point) -> Fraction:
        x = [_frac(c) for c in point]
        return sum(
            (c * x[0] ** e[0] * x[1] ** e[1] * x[2] ** e[2] for e, c in self.terms.items()),
            Fraction(0),
        )

    def diff(self, var: int) -> "HomPoly":
        out = {}
        for e, c in self.terms.items():
            if e[var]:
                f = list(e)
                f[var] -= 1
                out[tuple(f)] = c * e[var]
        return HomPoly(out, max(self.degree - 1, 0))

    def gradient(self) -> list["HomPoly"]:
        return [self.diff(i) for i in range(3)]

    def support(self) -> list[tuple[int, int, int]]:
        return list(self.terms)

    def linear_substitution(self, A) -> "HomPoly":
        """``f(A (X, Y, Z)^t)``: each variable becomes a row of ``A``."""
        lin = [HomPoly({(1, 0, 0): A[i][0], (0, 1, 0): A[i][1], (0, 0, 1): A[i][2]}, 1)
               for i in range(3)]
        out = HomPoly.zero(self.degree)
        for e, c in self.terms.items():
            term = HomPoly({(0, 0, 0): c}, 0)
            for i in range(3):
                term = term * lin[i] ** e[i]
            out = out + term
        return out

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.terms.items():
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(VARS, e) if k
            )
            coef = str(c)
            if mono:
                parts.append(mono if c == 1 else ("-" + mono if c == -1 else f"{coef}*{mono}"))
            else:
                parts.append(coef)
        return " + ".join(parts).replace("+ -", "- ")


def monomial_str(e) -> str:
    return "*".join(v if k == 1 else f"{v}^{k}" for v, k in zip(VARS, e) if k) or "1"


# ---------------------------------------------------------------------------
# parsing


def parse_poly(text: str, params: Mapping[str, object] | None = None) -> HomPoly:
    """Parse a homogeneous polynomial in X, Y, Z, e.g. ``"-23/27*X^3 + t_5*X*Y^2"``.

    Parameters (``t1``/``t_1``, ``s``, ...) are substituted from ``params``
    first; every remaining symbol must be one of X, Y, Z.
    """
    import sympy
    from sympy.parsing.sympy_parser import (
        convert_xor,
        implicit_multiplication,
        parse_expr,
        standard_transformations,
    )

    params = dict(params or {})
    local = {v: sympy.Symbol(v) for v in VARS}
    subs = {}
    for name, value in params.items():
        sym = sympy.Symbol(name)
        local[name] = sym
        subs[sym] = sympy.Rational(str(Fraction(str(value))))
        # accept both t1 and t_1 spellings
        alt = name.replace("_", "") if "_" in name else (name[0] + "_" + name[1:] if len(name) > 1 else None)
        if alt and alt not in local:
            local[alt] = sym
    try:
        expr = parse_expr(
            text,
            local_dict=local,
            transformations=standard_transformations + (convert_xor, implicit_multiplication),
            evaluate=True,
        )
    except Exception as exc:  # sympy raises a zoo of exception types
        raise InputError(f"cannot parse polynomial {text!r}: {exc}") from exc
    expr = sympy.expand(expr.subs(subs))
    xyz = [local[v] for v in VARS]
    extra = expr.free_symbols - set(xyz)
    if extra:
        raise InputError(f"unassigned symbols {sorted(map(str, extra))} in {text!r}")
    if expr == 0:
        return HomPoly.zero(0)
    poly = sympy.Poly(expr, *xyz, domain="QQ")
    terms = {m: Fraction(int(c.p), int(c.q)) for m, c in poly.terms()}
    degrees = {sum(m) for m in terms}
    if len(degrees) != 1:
        raise DegreeMismatch(f"{text!r} is not homogeneous")
    return HomPoly(terms, degrees.pop())


# ---------------------------------------------------------------------------
# torus curves


@dataclass(frozen=True)
class TorusCurve:
    f2: HomPoly
    f3: HomPoly
    f: HomPoly = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "f", expand(self.f2, self.f3))


def expand(f2: HomPoly, f3: HomPoly) -> HomPoly:
    """``f2^3 + f3^2`` as a sextic."""
    if not f2.is_zero() and f2.degree != 2:
        raise DegreeMismatch(f"F2 has degree {f2.degree}")
    if not f3.is_zero() and f3.degree != 3:
        raise DegreeMismatch(f"F3 has degree {f3.degree}")
    cube = f2 ** 3 if not f2.is_zero() else HomPoly.zero(6)
    square = f3 ** 2 if not f3.is_zero() else HomPoly.zero(6)
    out = cube + square
    return out if not out.is_zero() else HomPoly.zero(6)


@dataclass(frozen=True)
class MembershipReport:
    points: dict  # monomial string -> lattice point
    inside: dict  # monomial string -> bool
    verdict: bool

    def outside(self) -> list[str]:
        return [m for m, ok in self.inside.items() if not ok]


def support_polytope_membership(f: HomPoly, delta: Polytope) -> MembershipReport:
    """Is every monomial of ``W^2 - f`` a lattice point of ``delta``?"""
    if f.degree != 6:
        raise DegreeMismatch("membership is defined for sextics")
    points, inside = {}, {}
    for e in [None] + f.support():
        if e is None:
            name, mono = "W^2", WeightedMonomial((0, 0, 0, 2))
        else:
            name, mono = monomial_str(e), WeightedMonomial((*e, 0))
        pt = monomial_to_point(mono)
        points[name] = pt
        inside[name] = delta.contains(pt)
    return MembershipReport(points, inside, all(inside.values()))


# ---------------------------------------------------------------------------
# projective points and local germs


def proj_point(coords) -> tuple[Fraction, Fraction, Fraction]:
    """Normalize so that the last nonzero coordinate is 1."""
    c = [_frac(x) for x in coords]
    if len(c) != 3 or not any(c):
        raise ValueError(f"invalid projective point {coords!r}")
    k = max(i for i in range(3) if c[i] != 0)
    return tuple(x / c[k] for x in c)


def format_point(p) -> str:
    return "(" + ":".join(str(x) for x in proj_point(p)) + ")"


def verify_singular(f: HomPoly, p) -> bool:
    """``f`` and its three partials all vanish at ``p``."""
    p = proj_point(p)
    return f(p) == 0 and all(g(p) == 0 for g in f.gradient())


AffPoly = dict  # (i, j) -> Fraction, in local coordinates (x, y)


def local_germ(f: HomPoly, p) -> AffPoly:
    """Dehomogenize at the chart of ``p`` and move ``p`` to the origin."""
    p = proj_point(p)
    k = max(i for i in range(3) if p[i] != 0)
    free = [i for i in range(3) if i != k]
    out: dict = {}
    for e, c in f.terms.items():
        # product over the two free variables of (u + p_i)^e_i
        for a in range(e[free[0]] + 1):
            ca = comb(e[free[0]], a) * p[free[0]] ** (e[free[0]] - a)
            if ca == 0:
                continue
            for b in range(e[free[1]] + 1):
                cb = comb(e[free[1]], b) * p[free[1]] ** (e[free[1]] - b)
                if cb == 0:
                    continue
                out[(a, b)] = out.get((a, b), 0) + c * ca * cb
    return {m: c for m, c in out.items() if c != 0}


def _adiff(g: AffPoly, var: int) -> AffPoly:
    out = {}
    for (a, b), c in g.items():
        e = (a, b)[var]
        if e:
            out[(a - 1, b) if var == 0 else (a, b - 1)] = c * e
    return out


def jet(g: AffPoly, k: int) -> AffPoly:
    return {m: c for m, c in g.items() if sum(m) == k}


def _order(g: AffPoly) -> int:
    return min(sum(m) for m in g) if g else 10 ** 9


def truncated_quotient_dim(gens: Iterable[AffPoly], N: int) -> int:
    """``dim Q[x,y] / (I + m^{N+1})`` for the ideal ``I`` generated by ``gens``."""
    monos = [(a, d - a) for d in range(N + 1) for a in range(d, -1, -1)]
    key = {m: (sum(m), -m[0]) for m in monos}
    pivots: dict = {}  # pivot monomial -> row (dict), normalized to 1 at pivot
    for g in gens:
        if not g:
            continue
        og = _order(g)
        for m in monos:
            if sum(m) + og > N:
                continue
            row = {}
            for (a, b), c in g.items():
                e = (a + m[0], b + m[1])
                if e[0] + e[1] <= N:
                    row[e] = c
            # reduce against existing pivots, lowest-degree monomial first
            while row:
                lead = min(row, key=key.__getitem__)
                prow = pivots.get(lead)
                if prow is None:
                    inv = 1 / row[lead]
                    pivots[lead] = {e: c * inv for e, c in row.items()}
                    break
                f = row[lead]
                for e, c in prow.items():
                    v = row.get(e, 0) - f * c
                    if v:
                        row[e] = v
                    else:
                        row.pop(e, None)
    return len(monos) - len(pivots)


def milnor_number(f: HomPoly, p, degree_bound: int = 2, cap: int = 40) -> int:
    """Milnor number of the plane curve ``f = 0`` at ``p``."""
    if not verify_singular(f, p):
        raise NotSingular(f"{format_point(p)} is not a singular point")
    g = local_germ(f, p)
    return milnor_number_affine(g, degree_bound, cap)


def milnor_number_affine(g: AffPoly, degree_bound: int = 2, cap: int = 40) -> int:
    gx, gy = _adiff(g, 0), _adiff(g, 1)
    if (0, 0) in gx or (0, 0) in gy or (0, 0) in g:
        raise NotSingular("the origin is not a singular point of the germ")
    N = max(1, degree_bound)
    prev = truncated_quotient_dim([gx, gy], N)
    while N < cap:
        N += 1
        cur = truncated_quotient_dim([gx, gy], N)
        if cur == prev:
            return cur
        prev = cur
    raise NotIsolated(f"local algebra did not stabilize by degree {cap}")


def hessian_corank(g: AffPoly) -> int:
    h = [[2 * g.get((2, 0), 0), g.get((1, 1), 0)], [g.get((1, 1), 0), 2 * g.get((0, 2), 0)]]
    if all(x == 0 for r in h for x in r):
        return 2
    return 1 if h[0][0] * h[1][1] - h[0][1] ** 2 == 0 else 0


def is_cube_of_linear_form(c: AffPoly) -> bool:
    """Binary cubic is ``l^3`` iff its Hessian covariant vanishes."""
    if not c:
        return False
    cxx = _adiff(_adiff(c, 0), 0)
    cyy = _adiff(_adiff(c, 1), 1)
    cxy = _adiff(_adiff(c, 0), 1)
    h: dict = {}
    for A, B, sgn in ((cxx, cyy, 1), (cxy, cxy, -1)):
        for (a1, b1), u in A.items():
            for (a2, b2), v in B.items():
                e = (a1 + a2, b1 + b2)
                h[e] = h.get(e, 0) + sgn * u * v
    return all(v == 0 for v in h.values())


@dataclass(frozen=True)
class SingularPointReport:
    point: tuple
    milnor: int
    hessian_corank: int
    ade_type: str  # "A<n>", "E6" or "Unclassified(mu,corank)"

    def as_dict(self) -> dict:
        return {
            "point": format_point(self.point),
            "milnor": self.milnor,
            "hessian_corank": self.hessian_corank,
            "type": self.ade_type,
        }


def _ade_name(g: AffPoly, mu: int, corank: int) -> str:
    if corank <= 1:
        return f"A{mu}"
    if mu == 6 and is_cube_of_linear_form(jet(g, 3)):
        return "E6"
    return f"Unclassified({mu},{corank})"


def classify_germ(g: AffPoly) -> tuple[int, int, str]:
    """(mu, corank, type) of an affine germ singular at the origin."""
    mu = milnor_number_affine(g)
    corank = hessian_corank(g)
    return mu, corank, _ade_name(g, mu, corank)


def classify_ade(f: HomPoly, p) -> SingularPointReport:
    """A_n when the Hessian has corank <= 1, E6 for corank 2 with mu = 6 and a
    cubic 3-jet; anything else is left unclassified."""
    mu = milnor_number(f, p)
    g = local_germ(f, p)
    corank = hessian_corank(g)
    return SingularPointReport(proj_point(p), mu, corank, _ade_name(g, mu, corank))


def configuration(reports: Iterable[SingularPointReport]) -> str:
    """Configuration string such as ``"2A2+A11"`` (sorted by type)."""
    counts = Counter(r.ade_type for r in reports)
    return format_configuration(counts)


def _type_key(t: str):
    if t.startswith("A") and t[1:].isdigit():
        return (0, int(t[1:]))
    if t == "E6":
        return (1, 6)
    return (2, t)


def format_configuration(counts: Mapping[str, int]) -> str:
    parts = []
    for t in sorted(counts, key=_type_key):
        k = counts[t]
        parts.append(t if k == 1 else f"{k}{t}")
    return "+".join(parts)


_CONFIG_PART = re.compile(r"(\d*)([ADE]\d+|Unclassified\(\d+,\d+\))")


def parse_configuration(text: str) -> Counter:
    """``"2A2+A11"`` -> Counter({'A2': 2, 'A11': 1})."""
    out: Counter = Counter()
    for part in text.replace(" ", "").split("+"):
        m = _CONFIG_PART.fullmatch(part)
        if not m:
            raise InputError(f"bad configuration term {part!r} in {text!r}")
        out[m.group(2)] += int(m.group(1) or 1)
    return out


def _small_rationals(limit: int = 6) -> list[Fraction]:
    vals = {Fraction(p, q) for p in range(-limit, limit + 1) for q in range(1, limit + 1)}
    return sorted(vals)


def _integral(h: HomPoly) -> dict:
    den = 1
    for c in h.terms.values():
        den = den * c.denominator // gcd(den, c.denominator)
    return {e: int(c * den) for e, c in h.terms.items()}


def _eval_int(h: dict, x, y, z) -> int:
    return sum(c * x ** e[0] * y ** e[1] * z ** e[2] for e, c in h.items())


def rational_singular_points(f: HomPoly, limit: int = 6) -> list[tuple]:
    """Singular points with coordinates ``p/q``, ``|p|, q <= limit`` (a grid search)."""
    grid = _small_rationals(limit)
    cands = [(a, b, Fraction(1)) for a, b in product(grid, grid)]
    cands += [(a, Fraction(1), Fraction(0)) for a in grid]
    cands.append((Fraction(1), Fraction(0), Fraction(0)))
    checks = [_integral(g) for g in f.gradient()] + [_integral(f)]
    out = []
    for p in cands:
        d = p[0].denominator * p[1].denominator
        x, y, z = (int(c * d) for c in p)
        if all(_eval_int(h, x, y, z) == 0 for h in checks):
            out.append(p)
    return out


# ---------------------------------------------------------------------------
# transversality of the conic and the cubic


@dataclass(frozen=True)
class TransversalityReport:
    center: tuple[int, int, int]
    resultant_degree: int
    distinct_roots: int
    squarefree: bool

    @property
    def transversal(self) -> bool:
        return self.squarefree and self.resultant_degree == 6 and self.distinct_roots == 6


CENTERS = ((0, 0, 1), (0, 1, 0), (1, 0, 0), (1, 2, 3), (2, -3, 5), (3, 1, -7))


def _frame(center):
    """Invertible integer matrix whose third column is ``center``."""
    for a, b in product(((1, 0, 0), (0, 1, 0), (0, 0, 1)), repeat=2):
        A = [[a[i], b[i], center[i]] for i in range(3)]
        d = (A[0][0] * (A[1][1] * A[2][2] - A[1][2] * A[2][1])
             - A[0][1] * (A[1][0] * A[2][2] - A[1][2] * A[2][0])
             + A[0][2] * (A[1][0] * A[2][1] - A[1][1] * A[2][0]))
        if d:
            return A
    raise ValueError("zero center")


def _binary_resultant(f2: HomPoly, f3: HomPoly, center):
    """Resultant eliminating the direction of ``center``; a binary sextic as a
    univariate sympy Poly in ``t = X'/Y'`` plus its formal degree."""
    import sympy

    A = _frame(center)
    g2, g3 = f2.linear_substitution(A), f3.linear_substitution(A)
    X, Y, Z = sympy.symbols("X Y Z")

    def to_sym(h: HomPoly):
        return sum(
            sympy.Rational(c.numerator, c.denominator) * X ** e[0] * Y ** e[1] * Z ** e[2]
            for e, c in h.terms.items()
        )

    res = sympy.resultant(to_sym(g2), to_sym(g3), Z)
    return sympy.expand(res), (X, Y)


def transversal_intersection_report(f2: HomPoly, f3: HomPoly) -> TransversalityReport:
    """Count intersection points of ``f2 = 0`` and ``f3 = 0`` via resultants.

    Several projection centres (not on either curve) are tried; a squarefree
    degree-6 resultant certifies six transversal intersection points.  The
    best centre is reported.
    """
    import sympy

    best = None
    for c in CENTERS:
        if f2(c) == 0 or f3(c) == 0:
            continue
        res, (X, Y) = _binary_resultant(f2, f3, c)
        if res == 0:
            raise CommonComponent("the conic and the cubic share a component")
        t = sympy.Symbol("t")
        uni = sympy.Poly(res.subs({X: t, Y: 1}), t, domain="QQ")
        total = sympy.Poly(res, X, Y).total_degree()
        at_infinity = 1 if uni.degree() < total else 0
        distinct = sympy.Poly(sympy.sqf_part(uni.as_expr()), t).degree() + at_infinity if uni.degree() > 0 else at_infinity
        # a root at infinity is simple iff the degree drops by exactly one
        inf_mult = total - uni.degree()
        sqf = sympy.degree(sympy.gcd(uni, uni.diff(t)), t) == 0 and inf_mult <= 1
        rep = TransversalityReport(tuple(c), total, distinct, sqf)
        if best is None or (rep.distinct_roots, rep.squarefree) > (best.distinct_roots, best.squarefree):
            best = rep
        if rep.transversal:
            break
    if best is None:
        raise CommonComponent("every projection centre lies on one of the curves")
    return best


def transversal_intersection_count(f2: HomPoly, f3: HomPoly) -> int:
    """Number of distinct intersection points seen by the best projection."""
    return transversal_intersection_report(f2, f3).distinct_roots


def template_support(f2_text: str, f3_text: str) -> set[tuple[int, int, int]]:
    """Support of ``f2^3 + f3^2`` with parameters left symbolic.

    A monomial belongs to the support when its coefficient is a nonzero
    polynomial in the parameters, i.e. it appears for generic values.
    """
    import sympy
    from sympy.parsing.sympy_parser import (
        convert_xor,
        implicit_multiplication,
        parse_expr,
        standard_transformations,
    )

    xyz = sympy.symbols("X Y Z")
    local = dict(zip(VARS, xyz))
    tr = standard_transformations + (convert_xor, implicit_multiplication)
    try:
        f2 = parse_expr(f2_text, local_dict=local, transformations=tr)
        f3 = parse_expr(f3_text, local_dict=local, transformations=tr)
    except Exception as exc:
        raise InputError(f"cannot parse template: {exc}") from exc
    poly = sympy.Poly(sympy.expand(f2 ** 3 + f3 ** 2), *xyz)
    return {m for m, c in poly.terms() if sympy.expand(c) != 0}


# ---------------------------------------------------------------------------
# global bookkeeping

_GENERIC_FRAMES = (
    ((1, 0, 2), (0, 1, -3), (1, 1, 5)),
    ((2, 1, 0), (-1, 3, 1), (1, -2, 4)),
    ((1, 3, -1), (2, -1, 1), (3, 1, 7)),
)


def _qq_poly(terms: dict, gens):
    import sympy

    data = {e: sympy.Rational(c.numerator, c.denominator) for e, c in terms.items()}
    return sympy.Poly.from_dict(data or {(0,) * len(gens): 0}, *gens, domain="QQ")


def _restrict(h: HomPoly, axis: int, value: int) -> dict:
    """Set coordinate ``axis`` to 0 or 1 and drop it from the exponents."""
    out: dict = {}
    for e, c in h.terms.items():
        if value == 0 and e[axis]:
            continue
        k = tuple(x for i, x in enumerate(e) if i != axis)
        out[k] = out.get(k, 0) + c
    return {k: c for k, c in out.items() if c}


def global_tjurina_total(f: HomPoly) -> int:
    """Sum of Tjurina numbers over all singular points of ``f = 0`` in P^2(C).

    Coordinates are changed so that no singular point lies on ``Z = 0``, then
    ``dim Q[x, y] / (f, f_x, f_y)`` is read off a Groebner basis.  For simple
    singularities the Tjurina and Milnor numbers coincide.
    """
    import sympy

    x, y = sympy.symbols("x y")
    for A in _GENERIC_FRAMES:
        g = f.linear_substitution(A)
        at_inf = [_qq_poly(_restrict(h, 2, 0), (x, y)) for h in (g, *g.gradient())]
        common = at_inf[0]
        for h in at_inf[1:]:
            common = common.gcd(h)
        if common.total_degree() > 0:
            continue
        gi = _restrict(g, 2, 1)
        if not gi:
            raise NotIsolated("zero polynomial")
        gens = [_qq_poly(h, (x, y)) for h in (gi, _adiff(gi, 0), _adiff(gi, 1))]
        G = sympy.groebner([h.as_expr() for h in gens if not h.is_zero], x, y, order="grevlex")
        if G.exprs == [1]:
            return 0
        leads = [sympy.Poly(p, x, y).monoms(order="grevlex")[0] for p in G.exprs]
        ax = min((a for a, b in leads if b == 0), default=None)
        by = min((b for a, b in leads if a == 0), default=None)
        if ax is None or by is None:
            raise NotIsolated("the singular locus is not finite")
        return sum(
            1 for a in range(ax) for b in range(by)
            if not any(a >= la and b >= lb for la, lb in leads)
        )
    raise NotIsolated("no frame keeps the singular points off the line at infinity")


@dataclass(frozen=True)
class CurveAnalysis:
    reports: tuple[SingularPointReport, ...]
    not_singular: tuple[tuple, ...]  # requested points that are not singular
    global_total: int
    residual: int  # Milnor number not accounted for by the reported points

    @property
    def configuration(self) -> str:
        return configuration(self.reports)

    def as_dict(self) -> dict:
        return {
            "points": [r.as_dict() for r in self.reports],
            "not_singular": [format_point(p) for p in self.not_singular],
            "configuration": self.configuration,
            "global_total": self.global_total,
            "residual": self.residual,
        }


def analyze_curve(f: HomPoly, points: Iterable = (), search: bool = True) -> CurveAnalysis:
    """Classify the given points, add rational singular points from the grid
    search, and compare the Milnor sum with the global total."""
    seen: dict = {}
    bad = []
    for p in points:
        q = proj_point(p)
        if q in seen or q in bad:
            continue
        if verify_singular(f, q):
            seen[q] = None
        else:
            bad.append(q)
    if search:
        for q in rational_singular_points(f):
            seen.setdefault(proj_point(q), None)
    reports = tuple(classify_ade(f, q) for q in seen)
    total = global_tjurina_total(f)
    return CurveAnalysis(reports, tuple(bad), total, total - sum(r.milnor for r in reports))
