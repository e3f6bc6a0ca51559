"""Command-line front end.

Every command prints one JSON document on stdout and a short human summary on
stderr.  Exit codes: 0 success, 1 computation failure, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import curves, lattice, picard
from .errors import InputError, TorusK3Error
from .polytope import (
    convex_hull,
    interior_lattice_points,
    is_reflexive,
    lattice_points,
    polar_dual_full,
)
from .report import verify_paper


# ---------------------------------------------------------------------------
# input documents


def load_document(path: str) -> dict:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise InputError(f"{path}: expected a JSON object at the top level")
    return doc


def _int(x, where: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise InputError(f"{where}: expected an integer, got {json.dumps(x)}")
    return x


def _rational(x, where: str) -> Fraction:
    if isinstance(x, bool) or isinstance(x, float):
        raise InputError(f"{where}: expected an integer or a fraction string, got {json.dumps(x)}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x)
        except (ValueError, ZeroDivisionError):
            pass
    raise InputError(f"{where}: expected an integer or a fraction string, got {json.dumps(x)}")


def _triples(doc, key: str, path: str, rational: bool = False) -> list[tuple]:
    value = doc.get(key)
    if not isinstance(value, list):
        raise InputError(f"{path}: key {key!r} must be a list of triples")
    out = []
    conv = _rational if rational else _int
    for i, item in enumerate(value):
        where = f"{path}: {key}[{i}]"
        if not isinstance(item, list) or len(item) != 3:
            raise InputError(f"{where}: expected a triple")
        out.append(tuple(conv(c, f"{where}") for c in item))
    return out


def parse_polytope_doc(doc: dict, path: str = "<input>") -> dict:
    vertices = _triples(doc, "vertices", path)
    out = {"vertices": vertices}
    if "order" in doc:
        out["order"] = _triples(doc, "order", path)
    for key in ("labels", "basis"):
        if key in doc:
            v = doc[key]
            if not isinstance(v, list) or not all(isinstance(s, str) for s in v):
                raise InputError(f"{path}: key {key!r} must be a list of strings")
            out[key] = v
    return out


def parse_gram_doc(doc: dict, path: str = "<input>") -> tuple[tuple[int, ...], ...]:
    g = doc.get("gram")
    if not isinstance(g, list) or not g:
        raise InputError(f"{path}: key 'gram' must be a non-empty square integer array")
    n = len(g)
    rows = []
    for i, row in enumerate(g):
        if not isinstance(row, list) or len(row) != n:
            raise InputError(f"{path}: gram row {i} must have {n} entries")
        rows.append(tuple(_int(x, f"{path}: gram[{i}]") for x in row))
    gram = tuple(rows)
    if any(gram[i][j] != gram[j][i] for i in range(n) for j in range(i)):
        raise InputError(f"{path}: gram matrix is not symmetric")
    return gram


def parse_curve_doc(doc: dict, path: str = "<input>") -> dict:
    for key in ("f2", "f3"):
        if not isinstance(doc.get(key), str):
            raise InputError(f"{path}: key {key!r} must be a polynomial string")
    params = doc.get("params", {})
    if not isinstance(params, dict):
        raise InputError(f"{path}: 'params' must be an object")
    params = {k: _rational(v, f"{path}: params.{k}") for k, v in params.items()}
    points = _triples(doc, "points", path, rational=True) if "points" in doc else []
    return {"f2": doc["f2"], "f3": doc["f3"], "params": params, "points": points}


# ---------------------------------------------------------------------------
# output helpers


def _num(x):
    x = Fraction(x)
    return int(x) if x.denominator == 1 else str(x)


def _pt(p):
    return [_num(c) for c in p]


def emit(doc: dict, summary: str) -> None:
    sys.stdout.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    sys.stderr.write(summary.rstrip("\n") + "\n")


# ---------------------------------------------------------------------------
# commands


def cmd_polytope(args) -> int:
    inp = parse_polytope_doc(load_document(args.file), args.file)
    p = convex_hull(inp["vertices"])
    if args.action == "points":
        pts = lattice_points(p)
        inner = interior_lattice_points(p)
        emit({"vertices": [_pt(v) for v in p.vertices], "count": len(pts),
              "points": [_pt(q) for q in pts], "interior": [_pt(q) for q in inner]},
             f"{len(pts)} lattice points, {len(inner)} interior")
        return 0
    if args.action == "reflexive":
        ok = is_reflexive(p)
        emit({"vertices": [_pt(v) for v in p.vertices], "reflexive": ok,
              "interior_points": [_pt(q) for q in interior_lattice_points(p)]},
             "reflexive" if ok else "not reflexive")
        return 0
    pd = polar_dual_full(p)
    emit({"vertices": [_pt(v) for v in p.vertices],
          "dual_vertices": [_pt(v) for v in pd.polytope.vertices],
          "integral": pd.integral},
         f"dual has {len(pd.polytope.vertices)} vertices"
         + ("" if pd.integral else " (not integral)"))
    return 0


def _picard_from_input(inp: dict):
    delta = convex_hull(inp["vertices"])
    g = picard.build_intersection_graph(delta, order=inp.get("order"), labels=inp.get("labels"))
    pb = picard.picard_gram(g, delta, basis=inp.get("basis"))
    return delta, g, pb


def cmd_k3(args) -> int:
    if args.action == "picard":
        inp = parse_polytope_doc(load_document(args.files[0]), args.files[0])
        delta, g, pb = _picard_from_input(inp)
        rec = lattice.recognize(pb.gram)
        terms = picard.picard_rank_terms(delta)
        doc = {
            "rank_L0": terms["rank_L0"],
            "rho": terms["rho"],
            "edge_points_of_dual": terms["edge_points_of_dual"],
            "nodes": [{"label": n.label, "source": list(n.source), "component": n.component_index,
                       "self_intersection": n.self_int} for n in g.nodes],
            "basis": list(pb.labels),
            "gram": [list(r) for r in pb.gram],
            "recognition": rec.as_dict(),
        }
        emit(doc, f"rho = {terms['rho']}, Pic = {rec.name or 'unrecognized'} ({rec.level})")
        return 0
    if len(args.files) != 2:
        raise InputError("k3 duality needs two files")
    grams = []
    for path in args.files:
        doc = load_document(path)
        if "gram" in doc:
            grams.append(parse_gram_doc(doc, path))
        else:
            grams.append(_picard_from_input(parse_polytope_doc(doc, path))[2].gram)
    return _duality(*grams)


def _duality(s, t) -> int:
    rep = lattice.check_duality(s, t)
    emit(rep.as_dict(), "duality holds" if rep.passed else f"duality fails at {rep.failed_stage}")
    return 0


def cmd_lattice(args) -> int:
    grams = [parse_gram_doc(load_document(p), p) for p in args.files]
    if args.action == "duality":
        if len(grams) != 2:
            raise InputError("lattice duality needs two files")
        return _duality(*grams)
    if len(grams) != 1:
        raise InputError(f"lattice {args.action} takes one file")
    g = grams[0]
    if args.action == "invariants":
        inv = lattice.invariants(g)
        d = inv.as_dict()
        emit(d, f"rank {d['rank']}, signature {tuple(d['signature'])}, det {d['determinant']}")
        return 0
    rec = lattice.recognize(g)
    emit(rec.as_dict(), f"{rec.name or 'unrecognized'} ({rec.level})")
    return 0


def cmd_curve(args) -> int:
    inp = parse_curve_doc(load_document(args.file), args.file)
    f2 = curves.parse_poly(inp["f2"], inp["params"])
    f3 = curves.parse_poly(inp["f3"], inp["params"])
    c = curves.TorusCurve(f2, f3)
    a = curves.analyze_curve(c.f, inp["points"])
    doc = {"f": str(c.f), **a.as_dict()}
    emit(doc, f"configuration {a.configuration or 'smooth'}"
         + (f", {a.residual} unlocated" if a.residual else ""))
    return 0


def cmd_verify(args) -> int:
    overrides = {}
    for item in args.polytope or ():
        name, _, path = item.partition("=")
        if not path:
            raise InputError(f"--polytope expects NAME=FILE, got {item!r}")
        overrides[name] = parse_polytope_doc(load_document(path), path)["vertices"]
    report = verify_paper(overrides)
    if args.json:
        sys.stdout.write(report.to_json())
        c = report.counts()
        sys.stderr.write(f"{len(report.claims)} claims: {c['pass']} pass, {c['fail']} fail, "
                         f"{c['computed-with-note']} computed-with-note, {c['skipped']} skipped\n")
    else:
        sys.stdout.write(report.to_text())
    return report.exit_code


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="torusk3", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("polytope", help="polar dual, reflexivity and lattice points")
    p.add_argument("action", choices=("dual", "reflexive", "points"))
    p.add_argument("file")
    p.set_defaults(func=cmd_polytope)

    p = sub.add_parser("k3", help="Picard lattice of the generic section")
    p.add_argument("action", choices=("picard", "duality"))
    p.add_argument("files", nargs="+")
    p.set_defaults(func=cmd_k3)

    p = sub.add_parser("lattice", help="invariants and recognition of Gram matrices")
    p.add_argument("action", choices=("invariants", "recognize", "duality"))
    p.add_argument("files", nargs="+")
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("curve", help="singularities of F2^3 + F3^2")
    p.add_argument("action", choices=("classify",))
    p.add_argument("file")
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("verify-paper", help="check every reference value")
    p.add_argument("--json", action="store_true")
    p.add_argument("--polytope", action="append", metavar="NAME=FILE",
                   help="replace a fixture polytope (e.g. Delta3=bad.json)")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except TorusK3Error as exc:
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
