"""Exact geometry of 3-dimensional polytopes in a rank-3 lattice.

Everything here is done with Python integers and :class:`fractions.Fraction`;
no floating point is involved.  Polytopes are small (a few dozen points), so
the hull is found by brute-force facet enumeration over point triples.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, reduce
from itertools import combinations, product
from math import ceil, floor, gcd, lcm
from typing import Iterable, Sequence

from .errors import DegenerateInput, NotAFace, OriginNotInterior

Point = tuple  # a triple of int or Fraction


def _as_exact(c) -> Fraction | int:
    if isinstance(c, bool):
        raise TypeError("boolean coordinate")
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return int(c) if c.denominator == 1 else c
    if isinstance(c, str):
        return _as_exact(Fraction(c))
    raise TypeError(f"non-exact coordinate {c!r}")


def as_point(coords: Iterable) -> Point:
    """Normalize a coordinate triple to exact numbers (ints where integral)."""
    pt = tuple(_as_exact(c) for c in coords)
    if len(pt) != 3:
        raise ValueError(f"expected 3 coordinates, got {len(pt)}")
    return pt


def is_lattice_point(p: Point) -> bool:
    return all(isinstance(c, int) for c in p)


def dot(u, v):
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def sub(u, v):
    return (u[0] - v[0], u[1] - v[1], u[2] - v[2])


def cross(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def primitive(v) -> tuple[int, int, int]:
    """Scale a nonzero rational vector to the primitive integer vector on its ray."""
    fr = [Fraction(c) for c in v]
    den = reduce(lcm, (c.denominator for c in fr), 1)
    ints = [int(c * den) for c in fr]
    g = reduce(gcd, (abs(c) for c in ints), 0)
    if g == 0:
        raise ValueError("zero vector has no primitive representative")
    return tuple(c // g for c in ints)


@dataclass(frozen=True, order=True)
class HalfSpace:
    """The closed half-space ``<normal, x> >= -offset``.

    ``normal`` is a primitive integer vector pointing into the polytope.
    """

    normal: tuple[int, int, int]
    offset: Fraction | int

    def value(self, x) -> Fraction | int:
        """Slack of ``x``: zero on the boundary plane, positive inside."""
        return dot(self.normal, x) + self.offset

    def contains(self, x) -> bool:
        return self.value(x) >= 0


@dataclass(frozen=True, order=True)
class FaceRef:
    dim: int
    vertex_indices: tuple[int, ...]


@dataclass(frozen=True, eq=False)
class Polytope:
    """A full-dimensional convex polytope in R^3 with exact vertices.

    Build instances with :func:`convex_hull`.  ``vertices`` are sorted
    lexicographically; ``facets[i]`` is the supporting half-space of the
    facet ``faces(2)[i]``.
    """

    vertices: tuple[Point, ...]
    facets: tuple[HalfSpace, ...]
    facet_vertices: tuple[tuple[int, ...], ...]
    edge_vertices: tuple[tuple[int, int], ...]
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __eq__(self, other):
        if not isinstance(other, Polytope):
            return NotImplemented
        return self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        return f"Polytope(vertices={list(map(list, self.vertices))})"

    @property
    def is_integral(self) -> bool:
        return all(is_lattice_point(v) for v in self.vertices)

    def faces(self, dim: int) -> list[FaceRef]:
        if dim == 0:
            return [FaceRef(0, (i,)) for i in range(len(self.vertices))]
        if dim == 1:
            return [FaceRef(1, e) for e in self.edge_vertices]
        if dim == 2:
            return [FaceRef(2, f) for f in self.facet_vertices]
        raise ValueError(f"no faces of dimension {dim} in a 3-polytope")

    @cached_property
    def face_lattice(self) -> frozenset[FaceRef]:
        return frozenset(f for d in (0, 1, 2) for f in self.faces(d))

    def face_points(self, face: FaceRef) -> list[Point]:
        return [self.vertices[i] for i in face.vertex_indices]

    def vertex_index(self, v) -> int:
        return self.vertices.index(as_point(v))

    def face_from_vertices(self, verts: Iterable) -> FaceRef:
        """Look up the face whose vertex set is exactly ``verts``."""
        idx = tuple(sorted(self.vertex_index(v) for v in verts))
        for f in self.face_lattice:
            if f.vertex_indices == idx:
                return f
        raise NotAFace(f"{sorted(map(list, verts))} is not a face")

    def contains(self, x) -> bool:
        return all(h.contains(x) for h in self.facets)

    def strictly_contains(self, x) -> bool:
        return all(h.value(x) > 0 for h in self.facets)

    @cached_property
    def origin_interior(self) -> bool:
        return self.strictly_contains((0, 0, 0))

    def lattice_points(self) -> list[tuple[int, int, int]]:
        return lattice_points(self)

    def euler_characteristic(self) -> int:
        return len(self.vertices) - len(self.edge_vertices) + len(self.facet_vertices)


def _dedupe(points: Iterable) -> list[Point]:
    return sorted({as_point(p) for p in points})


def convex_hull(points: Iterable) -> Polytope:
    """Convex hull of a finite set of exact points in R^3.

    Raises :class:`DegenerateInput` unless the points span R^3 affinely.
    """
    pts = _dedupe(points)
    if len(pts) < 4:
        raise DegenerateInput(f"need at least 4 distinct points, got {len(pts)}")
    # full-dimensionality: some tetrahedron must have nonzero volume
    base = pts[0]
    diffs = [sub(p, base) for p in pts[1:]]
    if not any(dot(cross(a, b), c) != 0 for a, b, c in combinations(diffs, 3)):
        raise DegenerateInput("points do not span R^3 (they lie in a plane)")

    planes: dict[HalfSpace, None] = {}
    for a, b, c in combinations(pts, 3):
        n = cross(sub(b, a), sub(c, a))
        if n == (0, 0, 0):
            continue
        n = primitive(n)
        vals = [dot(n, p) for p in pts]
        h = dot(n, a)
        lo, hi = min(vals), max(vals)
        if lo == h:
            planes[HalfSpace(n, -h)] = None
        elif hi == h:
            planes[HalfSpace(tuple(-x for x in n), h)] = None
    facets = sorted(planes)

    # a point is a vertex iff the normals of the facets through it span R^3
    def is_vertex(p) -> bool:
        normals = [f.normal for f in facets if f.value(p) == 0]
        return any(dot(cross(u, v), w) != 0 for u, v, w in combinations(normals, 3))

    vertices = tuple(p for p in pts if is_vertex(p))
    facet_vertices = tuple(
        tuple(i for i, v in enumerate(vertices) if f.value(v) == 0) for f in facets
    )
    edges = set()
    for fa, fb in combinations(facet_vertices, 2):
        common = set(fa) & set(fb)
        if len(common) == 2:
            edges.add(tuple(sorted(common)))
    return Polytope(
        vertices=vertices,
        facets=tuple(facets),
        facet_vertices=facet_vertices,
        edge_vertices=tuple(sorted(edges)),
    )


@dataclass(frozen=True)
class PolarDual:
    """Result of :func:`polar_dual` with the face correspondence recorded."""

    polytope: Polytope
    integral: bool
    # vertex index of the source -> facet index of the dual
    vertex_to_facet: dict[int, int]
    # facet index of the source -> vertex index of the dual
    facet_to_vertex: dict[int, int]


def polar_dual_full(p: Polytope) -> PolarDual:
    if not p.origin_interior:
        raise OriginNotInterior("the origin must lie strictly inside the polytope")
    dual_pts = []
    for h in p.facets:
        off = Fraction(h.offset)
        dual_pts.append(as_point(Fraction(c) / off for c in h.normal))
    dual = convex_hull(dual_pts)
    facet_to_vertex = {i: dual.vertex_index(y) for i, y in enumerate(dual_pts)}
    vertex_to_facet = {}
    for i, v in enumerate(p.vertices):
        hits = [j for j, f in enumerate(dual.facet_vertices)
                if all(dot(dual.vertices[k], v) == -1 for k in f)]
        if len(hits) != 1:
            raise AssertionError(f"vertex {v} has no unique dual facet")
        vertex_to_facet[i] = hits[0]
    return PolarDual(dual, dual.is_integral, vertex_to_facet, facet_to_vertex)


def polar_dual(p: Polytope) -> Polytope:
    """The polytope ``{y : <y, x> >= -1 for all x in p}``.

    Dual vertices stay rational when they are not integral; check
    ``Polytope.is_integral`` on the result.
    """
    return polar_dual_full(p).polytope


def lattice_points(p: Polytope) -> list[tuple[int, int, int]]:
    """All integer points of ``p``, sorted lexicographically."""
    key = "lattice_points"
    if key in p._cache:
        return list(p._cache[key])
    lo = [ceil(min(v[i] for v in p.vertices)) for i in range(3)]
    hi = [floor(max(v[i] for v in p.vertices)) for i in range(3)]
    pts = [
        x for x in product(*(range(lo[i], hi[i] + 1) for i in range(3)))
        if p.contains(x)
    ]
    p._cache[key] = tuple(pts)
    return pts


def interior_lattice_points(p: Polytope) -> list[tuple[int, int, int]]:
    return [x for x in lattice_points(p) if p.strictly_contains(x)]


def is_reflexive(p: Polytope) -> bool:
    """True iff ``p`` is integral, 0 is its only interior lattice point, and
    its polar dual is integral."""
    if not p.is_integral or not p.origin_interior:
        return False
    if interior_lattice_points(p) != [(0, 0, 0)]:
        return False
    return polar_dual(p).is_integral


def _check_face(face: FaceRef, p: Polytope) -> None:
    if face not in p.face_lattice:
        raise NotAFace(f"{face} is not a face of {p}")


def face_lattice_points(face: FaceRef, p: Polytope) -> list[tuple[int, int, int]]:
    """Lattice points of ``p`` lying on ``face`` (a vertex, edge or facet)."""
    _check_face(face, p)
    verts = p.face_points(face)
    if face.dim == 0:
        v = verts[0]
        return [v] if is_lattice_point(v) else []
    if face.dim == 1:
        a, b = verts
        if not (is_lattice_point(a) and is_lattice_point(b)):
            # rational endpoints: fall back to the scan
            return [x for x in lattice_points(p) if _on_segment(x, a, b)]
        d = sub(b, a)
        g = reduce(gcd, (abs(c) for c in d))
        return sorted(tuple(a[i] + k * d[i] // g for i in range(3)) for k in range(g + 1))
    h = p.facets[p.facet_vertices.index(face.vertex_indices)]
    return [x for x in lattice_points(p) if h.value(x) == 0]


def _on_segment(x, a, b) -> bool:
    d, e = sub(b, a), sub(x, a)
    if cross(d, e) != (0, 0, 0):
        return False
    t = dot(e, d)
    return 0 <= t <= dot(d, d)


def count_points(face: FaceRef, p: Polytope) -> int:
    """l(face): number of lattice points on the closed face."""
    return len(face_lattice_points(face, p))


def relative_interior_points(face: FaceRef, p: Polytope) -> list[tuple[int, int, int]]:
    if face.dim == 0:
        _check_face(face, p)
        return []
    on_face = face_lattice_points(face, p)
    if face.dim == 1:
        ends = set(p.face_points(face))
        return [x for x in on_face if x not in ends]
    boundary = set()
    for e in p.faces(1):
        if set(e.vertex_indices) <= set(face.vertex_indices):
            boundary.update(face_lattice_points(e, p))
    return [x for x in on_face if x not in boundary]


def count_interior(face: FaceRef, p: Polytope) -> int:
    """l*(face): lattice points in the relative interior of ``face``."""
    return len(relative_interior_points(face, p))


def dual_face(face: FaceRef, p: Polytope, p_dual: Polytope) -> FaceRef:
    """The face ``{y in p_dual : <y, x> = -1 for all x in face}`` of ``p_dual``."""
    _check_face(face, p)
    xs = p.face_points(face)
    idx = tuple(
        j for j, y in enumerate(p_dual.vertices) if all(dot(y, x) == -1 for x in xs)
    )
    result = FaceRef(2 - face.dim, idx)
    if result not in p_dual.face_lattice:
        raise NotAFace(f"dual of {face} is not a face of the given dual polytope")
    return result


def edge_points_in_order(edge: FaceRef, p: Polytope, start=None) -> list[tuple[int, int, int]]:
    """Lattice points of an edge listed from ``start`` (default: the first vertex)."""
    a, b = p.face_points(edge)
    if start is not None and as_point(start) == b:
        a, b = b, a
    pts = face_lattice_points(edge, p)
    return sorted(pts, key=lambda x: dot(sub(x, a), sub(b, a)))


def polytope_from_vertices(vertices: Sequence) -> Polytope:
    """Hull of ``vertices``; raises if any given point turns out not to be a vertex."""
    p = convex_hull(vertices)
    given = _dedupe(vertices)
    if list(p.vertices) != given:
        extra = sorted(set(given) - set(p.vertices))
        raise DegenerateInput(f"points {extra} are not vertices of their hull")
    return p
