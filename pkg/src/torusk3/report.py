"""End-to-end check of every published number against fresh computation."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Mapping

from . import curves, fixtures, lattice, monomials, picard
from .errors import TorusK3Error
from .polytope import convex_hull, is_reflexive, lattice_points, polar_dual

PASS, FAIL, NOTE, SKIP = "pass", "fail", "computed-with-note", "skipped"

# claims whose published wording contradicts itself; the computed value is
# reported instead of being judged
INCONSISTENT = {
    "curve/A5+2E6/configuration": (
        "heading lists A5+2E6 while the text assigns A5 to all three points"
    ),
    "curve/3A5/configuration": (
        "text assigns both A8 and A5 to (0:0:1) inside the 3A5 case"
    ),
}

# published correspondence between monomials and lattice points
MONOMIAL_POINTS = {
    "W^2": (-1, -1, 1),
    "Y^6": (-1, 5, -1),
    "X^6": (5, -1, -1),
    "Z^6": (-1, -1, -1),
    "Y^3*Z^3": (-1, 2, -1),
    "Y^2*Z^4": (-1, 1, -1),
    "X^4*Z^2": (3, -1, -1),
    "X^2*Z^4": (1, -1, -1),
    "X*Y*Z*W": (0, 0, 0),
}


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    return str(x)


@dataclass
class Claim:
    id: str
    description: str
    expected: object
    computed: object = None
    status: str = SKIP
    note: str = ""

    def as_dict(self) -> dict:
        return {
            "id": self.id,
            "description": self.description,
            "expected": _jsonable(self.expected),
            "computed": _jsonable(self.computed),
            "status": self.status,
            "note": self.note,
        }


@dataclass
class Report:
    claims: list[Claim] = field(default_factory=list)

    def counts(self) -> dict:
        c = Counter(cl.status for cl in self.claims)
        return {s: c.get(s, 0) for s in (PASS, FAIL, NOTE, SKIP)}

    @property
    def ok(self) -> bool:
        counts = self.counts()
        return counts[FAIL] == 0 and counts[SKIP] == 0

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 1

    def by_id(self, cid: str) -> Claim:
        return next(c for c in self.claims if c.id == cid)

    def as_dict(self) -> dict:
        return {"summary": self.counts(), "claims": [c.as_dict() for c in self.claims]}

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=True) + "\n"

    def to_text(self) -> str:
        lines = []
        for c in self.claims:
            line = f"[{c.status.upper():>18}] {c.id}"
            if c.status != PASS:
                line += f": expected {json.dumps(_jsonable(c.expected))}, computed {json.dumps(_jsonable(c.computed))}"
            if c.note:
                line += f" ({c.note})"
            lines.append(line)
        counts = self.counts()
        lines.append(
            f"{len(self.claims)} claims: {counts[PASS]} pass, {counts[FAIL]} fail, "
            f"{counts[NOTE]} computed-with-note, {counts[SKIP]} skipped"
        )
        return "\n".join(lines) + "\n"


class _Runner:
    def __init__(self):
        self.report = Report()

    def check(self, cid: str, description: str, expected, compute: Callable, *,
              requires: tuple[str, ...] = (), note: str = "", compare=None) -> Claim:
        claim = Claim(cid, description, expected)
        self.report.claims.append(claim)
        blocked = [r for r in requires if self._status(r) not in (PASS, NOTE)]
        if blocked:
            claim.note = "depends on " + ", ".join(blocked)
            return claim
        try:
            value = compute()
        except TorusK3Error as exc:
            claim.computed = f"{type(exc).__name__}: {exc}"
            claim.status = FAIL
            return claim
        if isinstance(value, tuple) and len(value) == 2 and isinstance(value[1], _Note):
            value, extra = value
            note = "; ".join(x for x in (note, extra.text) if x)
        claim.computed = value
        equal = compare(expected, value) if compare else _jsonable(expected) == _jsonable(value)
        if cid in INCONSISTENT:
            claim.status = NOTE
            note = "; ".join(x for x in (INCONSISTENT[cid], note) if x)
        else:
            claim.status = PASS if equal else FAIL
        claim.note = note
        return claim

    def _status(self, cid: str) -> str | None:
        for c in self.report.claims:
            if c.id == cid:
                return c.status
        return None


@dataclass(frozen=True)
class _Note:
    text: str


def _same_config(expected: str, computed: str) -> bool:
    if "unlocated" in computed:
        return False
    return curves.parse_configuration(expected) == curves.parse_configuration(computed)


def verify_paper(vertices: Mapping[str, object] | None = None) -> Report:
    """Run every claim in a fixed order.

    ``vertices`` replaces fixture polytopes by name (used for fault injection).
    """
    run = _Runner()
    verts = dict(fixtures.DELTA_VERTICES)
    verts.update(vertices or {})
    names = ("Delta1", "Delta2", "Delta3")
    polys, duals, graphs, grams = {}, {}, {}, {}

    # polytopes -----------------------------------------------------------
    for n in names:
        def reflexive(n=n):
            polys[n] = convex_hull(verts[n])
            return is_reflexive(polys[n])
        run.check(f"reflexive/{n}", f"{n} is reflexive", True, reflexive)
    for n in names:
        def dual(n=n):
            duals[n] = polar_dual(polys[n])
            return sorted(duals[n].vertices)
        run.check(f"dual-vertices/{n}", f"vertices of the polar dual of {n}",
                  sorted(fixtures.DUAL_VERTICES[n]), dual, requires=(f"reflexive/{n}",))
    for n in names:
        run.check(f"lattice-points/{n}/interior", f"origin is the only interior lattice point of {n}",
                  [(0, 0, 0)],
                  lambda n=n: [p for p in lattice_points(polys[n]) if polys[n].strictly_contains(p)],
                  requires=(f"reflexive/{n}",))

    # monomial correspondence -------------------------------------------------
    for text, pt in MONOMIAL_POINTS.items():
        def corr(text=text, pt=pt):
            m = monomials.parse_monomial(text)
            p = monomials.monomial_to_point(m)
            back = monomials.point_to_monomial(p)
            return list(p) if back == m else f"round trip gave {back}"
        run.check(f"monomial/{text}", f"{text} corresponds to {pt}", list(pt), corr)

    # ranks ----------------------------------------------------------------
    for n in names:
        run.check(f"rank-L0/{n}", f"rank of the toric correction term for {n}",
                  fixtures.RANK_L0[n], lambda n=n: picard.rank_L0(polys[n]),
                  requires=(f"reflexive/{n}",))
    for n in names:
        run.check(f"rho/{n}", f"Picard rank of the generic section for {n}",
                  fixtures.RHO[n], lambda n=n: picard.picard_rank(polys[n]),
                  requires=(f"reflexive/{n}",))
    for n in names:
        run.check(f"rho-dual/{n}", f"Picard rank for the dual of {n}",
                  fixtures.RHO_DUAL[n], lambda n=n: picard.picard_rank(duals[n]),
                  requires=(f"dual-vertices/{n}",))
    for n in names:
        run.check(f"rho-sum/{n}", f"rho + rho* for {n}",
                  fixtures.RHO[n] + fixtures.RHO_DUAL[n],
                  lambda n=n: picard.picard_rank(polys[n]) + picard.picard_rank(duals[n]),
                  requires=(f"rho/{n}", f"rho-dual/{n}"))

    # divisor graphs and Gram matrices ---------------------------------------
    for n in names:
        def selfint(n=n):
            graphs[n] = picard.build_intersection_graph(
                polys[n], order=fixtures.NODE_ORDER[n], labels=fixtures.NODE_LABELS[n])
            return list(graphs[n].self_intersections())
        run.check(f"self-intersections/{n}", f"self-intersection numbers of the divisors for {n}",
                  list(fixtures.SELF_INTERSECTIONS[n]), selfint, requires=(f"reflexive/{n}",))

    def selfint_dual():
        graphs["Delta3*"] = picard.build_intersection_graph(
            duals["Delta3"], order=fixtures.DUAL3_ORDER, labels=fixtures.DUAL3_LABELS)
        return list(graphs["Delta3*"].self_intersections())
    run.check("self-intersections/Delta3*", "self-intersection numbers for the dual of Delta3",
              list(fixtures.SELF_INTERSECTIONS["Delta3*"]), selfint_dual,
              requires=("dual-vertices/Delta3",))

    def graph_ready(n):
        # the Gram claims only need the graph, not agreement of every self-intersection
        return graphs.get(n) is not None

    for n in names:
        def gram(n=n):
            if not graph_ready(n):
                raise TorusK3Error("no intersection graph")
            grams[n] = picard.picard_gram(graphs[n], polys[n], basis=fixtures.BASIS[n]).gram
            return [list(r) for r in grams[n]]
        run.check(f"gram/{n}", f"Gram matrix of the Picard lattice for {n}",
                  [list(r) for r in fixtures.A_B[n]], gram, requires=(f"reflexive/{n}",))

    def gram_dual():
        if not graph_ready("Delta3*"):
            raise TorusK3Error("no intersection graph")
        grams["Delta3*"] = picard.picard_gram(
            graphs["Delta3*"], duals["Delta3"], basis=fixtures.DUAL3_BASIS).gram
        return [list(r) for r in grams["Delta3*"]]
    run.check("gram/Delta3*", "Gram matrix for the dual of Delta3",
              [list(r) for r in fixtures.B_B_DUAL3], gram_dual,
              requires=("dual-vertices/Delta3",))

    for n in names:
        def congr(n=n):
            w = lattice.CongruenceWitness(fixtures.P_MATRIX[n], grams[n], fixtures.target_gram(n))
            return lattice.verify_congruence(w)
        run.check(f"congruence/{n}", f"P A P^t is {fixtures.TARGET_NAME[n]} for {n}",
                  True, congr, requires=(f"gram/{n}",))

    # invariants of the dual Gram ----------------------------------------------
    inv = {}

    def inv_dual(key):
        if "d" not in inv:
            inv["d"] = lattice.invariants(grams["Delta3*"])
        return inv["d"].as_dict()[key]
    run.check("invariants/Delta3*/rank", "rank of the dual Gram", 18,
              lambda: inv_dual("rank"), requires=("gram/Delta3*",))
    run.check("invariants/Delta3*/signature", "signature of the dual Gram", [1, 17],
              lambda: inv_dual("signature"), requires=("gram/Delta3*",))
    run.check("invariants/Delta3*/determinant", "determinant of the dual Gram", -4,
              lambda: inv_dual("determinant"), requires=("gram/Delta3*",))
    run.check("invariants/Delta3*/discriminant-group", "discriminant group of the dual Gram",
              [2, 2], lambda: inv_dual("disc_group"), requires=("gram/Delta3*",))

    # duality ------------------------------------------------------------------
    run.check("duality/Delta3", "U + Pic(dual of Delta3) is the orthogonal complement of Pic(Delta3)",
              {"passed": True, "failed_stage": None},
              lambda: _duality_summary(grams["Delta3"], grams["Delta3*"]),
              requires=("gram/Delta3", "gram/Delta3*"))
    for n in ("Delta1", "Delta2"):
        def dual_fail(n=n):
            g = picard.build_intersection_graph(duals[n])
            t = picard.picard_gram(g, duals[n]).gram
            return _duality_summary(grams[n], t)
        run.check(f"duality/{n}", f"duality fails at the rank stage for {n}",
                  {"passed": False, "failed_stage": "rank"}, dual_fail,
                  requires=(f"gram/{n}", f"dual-vertices/{n}"))

    # recognition ----------------------------------------------------------------
    for n in names:
        def recog(n=n):
            r = lattice.recognize(grams[n])
            return {"level": r.level, "name": r.name}
        run.check(f"recognize/{n}", f"Pic({n}) is {fixtures.TARGET_NAME[n]}",
                  {"level": "verified-isometric", "name": fixtures.TARGET_NAME[n]},
                  recog, requires=(f"gram/{n}",))
    for n in ("Delta1", "Delta2"):
        run.check(f"U-summand/{n}", f"Pic({n}) splits off a hyperbolic plane", True,
                  lambda n=n: lattice.detect_U_summand(grams[n]), requires=(f"gram/{n}",))

    # curves ---------------------------------------------------------------------
    for case in fixtures.CURVES:
        _curve_claims(run, case, polys)
    return run.report


def _duality_summary(s, t) -> dict:
    r = lattice.check_duality(s, t)
    return {"passed": r.passed, "failed_stage": r.failed_stage}


def _curve_claims(run: _Runner, case: fixtures.CurveCase, polys) -> None:
    key = f"curve/{case.name}"
    cache = {}

    def curve():
        if "c" not in cache:
            f2 = curves.parse_poly(case.f2, case.params)
            f3 = curves.parse_poly(case.f3, case.params)
            cache["c"] = curves.TorusCurve(f2, f3)
        return cache["c"]

    def listed():
        sup = {curves.monomial_str(e) for e in curves.template_support(case.f2, case.f3)}
        missing = [m for m in case.listed_monomials if m not in sup]
        return missing if not missing else (missing, _Note("absent from the expanded template"))
    run.check(f"{key}/monomials", "listed monomials occur in the expansion", [], listed)

    def family():
        sup = curves.template_support(case.f2, case.f3)
        f = curves.HomPoly({e: 1 for e in sup}, 6)
        reports = {n: curves.support_polytope_membership(f, polys[n]) for n in sorted(polys)}
        if case.family is None:
            return {n: r.verdict for n, r in reports.items()}
        r = reports[case.family]
        note = f"outside: {', '.join(r.outside())}" if not r.verdict else ""
        return {case.family: r.verdict}, _Note(note)
    expected_family = ({case.family: True} if case.family
                       else {n: False for n in ("Delta1", "Delta2", "Delta3")})
    req = tuple(f"reflexive/{n}" for n in ("Delta1", "Delta2", "Delta3")
                if case.family in (None, n))
    run.check(f"{key}/family", "support lies in the stated polytope", expected_family,
              family, requires=req)

    if case.name == "6A2":
        def transversal():
            c = curve()
            rep = curves.transversal_intersection_report(c.f2, c.f3)
            count = curves.transversal_intersection_count(c.f2, c.f3)
            return {"distinct": count, "degree": rep.resultant_degree, "squarefree": rep.squarefree}
        run.check(f"{key}/transversal", "conic and cubic meet transversally in six points",
                  {"distinct": 6, "degree": 6, "squarefree": True}, transversal)

        def z6_outside():
            p = monomials.monomial_to_point(monomials.parse_monomial("Z^6"))
            return {n: polys[n].contains(p) for n in sorted(polys)}
        run.check(f"{key}/Z6", "Z^6 lies outside all three polytopes",
                  {"Delta1": False, "Delta2": False, "Delta3": False}, z6_outside,
                  requires=("reflexive/Delta1", "reflexive/Delta2", "reflexive/Delta3"))

    def config():
        c = curve()
        a = curves.analyze_curve(c.f, case.points)
        reports = list(a.reports)
        residual = a.residual
        notes = []
        if case.name == "6A2":
            # cusps at the six conic-cubic intersections
            rep = curves.transversal_intersection_report(c.f2, c.f3)
            if rep.transversal:
                reports += [curves.SingularPointReport((0, 0, 0), 2, 1, "A2")] * 6
                residual -= 12
                notes.append("six A2 points from the transversal intersection")
        for p in case.points:
            if curves.proj_point(p) in a.not_singular:
                notes.append(f"{curves.format_point(p)} is not singular")
        stated = {curves.proj_point(p) for p in case.points}
        for r in a.reports:
            if r.point not in stated:
                notes.append(f"{r.ade_type} at {curves.format_point(r.point)}")
        text = curves.configuration(reports)
        if residual:
            text += f"+unlocated({residual})"
            notes.append(f"Milnor number {residual} at points off the rational grid")
        return text, _Note("; ".join(notes))
    run.check(f"{key}/configuration", f"singularities at {_params_text(case.params)}",
              case.name, config, compare=_same_config, note=case.note)


def _params_text(params) -> str:
    if not params:
        return "the given curve"
    return ", ".join(f"{k}={v}" for k, v in sorted(params.items()))
