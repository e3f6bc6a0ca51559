import random
from fractions import Fraction
from itertools import product

import numpy as np
import pytest
from scipy.spatial import ConvexHull

from torusk3 import fixtures
from torusk3.errors import DegenerateInput, NotAFace, OriginNotInterior, TorusK3Error
from torusk3.polytope import (
    FaceRef,
    convex_hull,
    count_interior,
    count_points,
    dual_face,
    interior_lattice_points,
    is_reflexive,
    lattice_points,
    polar_dual,
    relative_interior_points,
)

CUBE = list(product((-1, 1), repeat=3))
OCTAHEDRON = [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)]


def scipy_oracle(points):
    """Float hull: vertices and distinct facet planes (rounded)."""
    arr = np.array(points, dtype=float)
    hull = ConvexHull(arr)
    verts = sorted(tuple(int(c) for c in arr[i]) for i in hull.vertices)
    planes = {tuple(np.round(eq / np.abs(eq[:3]).max(), 9)) for eq in hull.equations}
    return verts, hull, len(planes)


def inside_oracle(hull, x):
    return all(np.dot(eq[:3], x) + eq[3] <= 1e-9 for eq in hull.equations)


@pytest.mark.parametrize("name", ["Delta1", "Delta2", "Delta3"])
def test_hull_matches_scipy(name):
    pts = fixtures.DELTA_VERTICES[name]
    p = convex_hull(pts)
    verts, hull, nfacets = scipy_oracle(pts)
    assert list(p.vertices) == verts
    assert len(p.facets) == nfacets == 5
    assert len(p.faces(1)) == 8
    assert p.euler_characteristic() == 2


@pytest.mark.parametrize("name", ["Delta1", "Delta2", "Delta3"])
def test_lattice_points_match_scipy(name):
    p = convex_hull(fixtures.DELTA_VERTICES[name])
    _, hull, _ = scipy_oracle(p.vertices)
    box = product(range(-1, 6), repeat=3)
    assert lattice_points(p) == sorted(x for x in box if inside_oracle(hull, x))


def test_lattice_point_counts():
    counts = {n: len(lattice_points(fixtures.polytope(n))) for n in fixtures.DELTA_VERTICES}
    # frozen from the scipy oracle above
    assert counts == {"Delta1": 31, "Delta2": 27, "Delta3": 35}


def test_interior_points_nonreflexive():
    p = convex_hull([(x * 2, y * 2, z * 2) for x, y, z in CUBE])
    assert len(interior_lattice_points(p)) == 27
    assert not is_reflexive(p)


def test_hull_drops_interior_and_edge_points():
    p = convex_hull(CUBE + [(0, 0, 0), (1, 0, 1), (0, 0, 1)])
    assert sorted(p.vertices) == sorted(CUBE)
    assert len(p.facets) == 6 and len(p.faces(1)) == 12


@pytest.mark.parametrize("pts", [
    [(0, 0, 0), (1, 0, 0), (0, 1, 0)],
    [(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0), (2, 3, 0)],
    [(0, 0, 0), (1, 1, 1), (2, 2, 2), (3, 3, 3)],
])
def test_degenerate_input(pts):
    with pytest.raises(DegenerateInput):
        convex_hull(pts)


@pytest.mark.parametrize("name", ["Delta1", "Delta2", "Delta3"])
def test_duals_match_published(name):
    d = polar_dual(fixtures.polytope(name))
    assert list(d.vertices) == sorted(fixtures.DUAL_VERTICES[name])
    assert d.is_integral


def test_cube_octahedron_duality():
    cube = convex_hull(CUBE)
    octa = polar_dual(cube)
    assert sorted(octa.vertices) == sorted(OCTAHEDRON)
    assert polar_dual(octa) == cube
    assert is_reflexive(cube) and is_reflexive(octa)


def test_rational_dual_of_pyramid():
    pyr = convex_hull([(1, 1, -1), (1, -1, -1), (-1, 1, -1), (-1, -1, -1), (0, 0, 2)])
    d = polar_dual(pyr)
    assert not d.is_integral
    assert (Fraction(3, 2), 0, Fraction(-1, 2)) in d.vertices
    assert not is_reflexive(pyr)


def test_origin_on_boundary():
    with pytest.raises(OriginNotInterior):
        polar_dual(convex_hull([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)]))


def _random_reflexive(seed, want=20):
    """Hulls of random subsets of fixture lattice points, kept when reflexive."""
    rng = random.Random(seed)
    pool = sorted({q for n in fixtures.DELTA_VERTICES
                   for q in lattice_points(fixtures.polytope(n))} - {(0, 0, 0)})
    found = []
    for _ in range(5000):
        if len(found) == want:
            break
        try:
            p = convex_hull(rng.sample(pool, rng.randint(4, 8)))
            ok = is_reflexive(p)
        except TorusK3Error:
            continue
        if ok and p not in found:
            found.append(p)
    return found


def test_dual_involution_on_perturbations():
    polys = _random_reflexive(2024)
    assert len(polys) == 20
    for p in polys:
        d = polar_dual(p)
        assert is_reflexive(d)
        assert polar_dual(d) == p


def test_face_duality_reverses_inclusion():
    p = fixtures.polytope("Delta1")
    d = polar_dual(p)
    for dim in range(3):
        for face in p.faces(dim):
            df = dual_face(face, p, d)
            assert df.dim == 2 - dim
            assert dual_face(df, d, p) == face


def test_dual_face_rejects_non_faces():
    p = fixtures.polytope("Delta1")
    with pytest.raises(NotAFace):
        dual_face(FaceRef(1, (2, 3)), p, polar_dual(p))


def test_counts_on_known_edge():
    # the edge from (-1,-1,1) to (3,-1,-1) has lattice points at every other step
    p = fixtures.polytope("Delta1")
    e = p.face_from_vertices([(-1, -1, 1), (3, -1, -1)])
    assert count_points(e, p) == 3
    assert relative_interior_points(e, p) == [(1, -1, 0)]


def test_facet_interior_sum_matches_total():
    for name in fixtures.DELTA_VERTICES:
        p = fixtures.polytope(name)
        total = len(p.vertices) + 1
        total += sum(count_interior(f, p) for dim in (1, 2) for f in p.faces(dim))
        assert total == len(lattice_points(p))
