from fractions import Fraction
from itertools import product

import numpy as np
import pytest
import sympy as sp

from torusk3 import fixtures, picard
from torusk3.errors import RankMismatch, TorusK3Error
from torusk3.polytope import convex_hull, lattice_points, polar_dual

NAMES = ["Delta1", "Delta2", "Delta3"]


def graph(name):
    return picard.build_intersection_graph(
        fixtures.polytope(name), order=fixtures.NODE_ORDER[name], labels=fixtures.NODE_LABELS[name])


def brute_genus(delta, v):
    """Interior lattice points of the facet <v, x> = -1, by direct enumeration."""
    others = [w for w in polar_dual(delta).vertices if w != v]
    pts = lattice_points(delta)
    return sum(1 for x in pts
               if np.dot(v, x) == -1 and all(np.dot(w, x) > -1 for w in others))


@pytest.mark.parametrize("name", NAMES)
def test_rank_terms(name):
    d = fixtures.polytope(name)
    assert picard.rank_L0(d) == fixtures.RANK_L0[name]
    assert picard.picard_rank(d) == fixtures.RHO[name]
    assert picard.picard_rank(polar_dual(d)) == fixtures.RHO_DUAL[name]
    assert picard.picard_rank(d) + picard.picard_rank(polar_dual(d)) == 20 + picard.rank_L0(d)


@pytest.mark.parametrize("name", NAMES)
def test_vertex_self_intersections_from_genus(name):
    d = fixtures.polytope(name)
    g = graph(name)
    dual = polar_dual(d)
    for node in g.nodes:
        if node.source in dual.vertices:
            assert node.self_int == 2 * brute_genus(d, node.source) - 2


@pytest.mark.parametrize("name", NAMES)
def test_relations_lie_in_radical(name):
    g = graph(name)
    assert not (np.array(g.gram_full) @ np.array(g.relations).T).any()


def _forced_first_self_intersection(g, col):
    """Solve sum_j <m, v_j> D_j . D_col = 0 for D_col^2, using a relation
    whose coefficient on D_col is nonzero."""
    for r in g.relations:
        if r[col]:
            rest = sum(r[j] * g.gram_full[j][col] for j in range(len(r)) if j != col)
            return Fraction(-rest, r[col])
    raise AssertionError("no relation involves the node")


@pytest.mark.parametrize("name,label,computed", [
    ("Delta1", "D1", 14),
    # frozen: the linear relations leave no other value
    ("Delta2", "D1", 12),
    ("Delta3", "D2", 2),
])
def test_self_intersection_forced_by_relations(name, label, computed):
    g = graph(name)
    i = g.index(label)
    assert g.nodes[i].self_int == computed
    assert _forced_first_self_intersection(g, i) == computed


def test_self_intersections_other_nodes_match_reference():
    for name in NAMES:
        got = graph(name).self_intersections()
        ref = fixtures.SELF_INTERSECTIONS[name]
        diff = [lab for lab, a, b in zip(fixtures.NODE_LABELS[name], got, ref) if a != b]
        assert diff == {"Delta1": [], "Delta2": ["D1"], "Delta3": ["D2"]}[name]


def test_dual3_nodes():
    d = polar_dual(fixtures.polytope("Delta3"))
    g = picard.build_intersection_graph(d, order=fixtures.DUAL3_ORDER, labels=fixtures.DUAL3_LABELS)
    assert tuple(g.self_intersections()) == fixtures.SELF_INTERSECTIONS["Delta3*"]
    pb = picard.picard_gram(g, d, basis=fixtures.DUAL3_BASIS)
    assert pb.gram == fixtures.B_B_DUAL3


@pytest.mark.parametrize("name", NAMES)
def test_gram_in_reference_basis(name):
    g = graph(name)
    pb = picard.picard_gram(g, fixtures.polytope(name), basis=fixtures.BASIS[name])
    assert pb.gram == fixtures.A_B[name]
    assert pb.labels == fixtures.BASIS[name]


@pytest.mark.parametrize("name", NAMES)
def test_default_basis_is_equivalent(name):
    d = fixtures.polytope(name)
    g = picard.build_intersection_graph(d)
    pb = picard.picard_gram(g, d)
    ref = sp.Matrix(fixtures.A_B[name])
    got = sp.Matrix(pb.gram)
    assert got.det() == ref.det()
    assert sorted(np.sign(np.linalg.eigvalsh(np.array(pb.gram, float)))) == \
        sorted(np.sign(np.linalg.eigvalsh(np.array(fixtures.A_B[name], float))))


def test_default_basis_on_delta3():
    # lexicographic node order gives a different but congruent Gram
    d = fixtures.polytope("Delta3")
    assert picard.picard_gram(picard.build_intersection_graph(d), d).gram == ((0, 2), (2, -2))


def test_bad_basis():
    d = fixtures.polytope("Delta1")
    g = graph("Delta1")
    with pytest.raises(RankMismatch):
        picard.picard_gram(g, d, basis=("D1", "D2", "D3", "D4"))
    with pytest.raises(RankMismatch):
        picard.picard_gram(g, d, basis=("D4", "D5", "D6"))


def test_bad_order():
    with pytest.raises(TorusK3Error):
        picard.build_intersection_graph(fixtures.polytope("Delta3"), order=[(0, 0, 1)])


def test_cube_rank():
    # the cube's dual has no edge-interior points; rank 20 - rho(octahedron) check
    cube = convex_hull(list(product((-1, 1), repeat=3)))
    octa = polar_dual(cube)
    assert picard.picard_rank(cube) + picard.picard_rank(octa) == 20 + picard.rank_L0(cube)
