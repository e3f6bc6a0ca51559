"""Picard lattices of generic anticanonical K3 sections of toric Fano 3-folds.

For a reflexive polytope ``Δ`` the restricted toric divisors are indexed by the
lattice points of ``Δ*`` lying on its vertices and edges.  A point in the
interior of an edge ``Γ*`` restricts to ``l*(Γ) + 1`` disjoint components, where
``Γ`` is the dual edge of ``Δ``.  Points in the interior of facets of ``Δ*`` do
not meet a generic section and are ignored.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from . import intmat
from .errors import RankMismatch, RankOutOfRange, TorusK3Error
from .polytope import (
    FaceRef,
    Polytope,
    as_point,
    count_interior,
    dot,
    dual_face,
    edge_points_in_order,
    is_reflexive,
    polar_dual,
    relative_interior_points,
)

BASIS_VECTORS = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def _require_reflexive(delta: Polytope) -> Polytope:
    if not is_reflexive(delta):
        raise TorusK3Error("polytope is not reflexive")
    return polar_dual(delta)


def _edge_pairs(delta: Polytope, dual: Polytope):
    """Yield (edge of Δ, dual edge of Δ*)."""
    for edge in delta.faces(1):
        yield edge, dual_face(edge, delta, dual)


def rank_L0(delta: Polytope) -> int:
    """Toric correction term: sum over edges of l*(Γ) * l*(Γ*)."""
    dual = _require_reflexive(delta)
    return sum(
        count_interior(e, delta) * count_interior(de, dual)
        for e, de in _edge_pairs(delta, dual)
    )


def edge_lattice_points(p: Polytope) -> list[tuple[int, int, int]]:
    """Lattice points of ``p`` on vertices or edges (no facet-interior points)."""
    pts = set(p.vertices)
    for e in p.faces(1):
        pts.update(relative_interior_points(e, p))
    return sorted(pts)


def picard_rank_terms(delta: Polytope) -> dict:
    dual = _require_reflexive(delta)
    edge_points = len(edge_lattice_points(dual))
    l0 = rank_L0(delta)
    return {"edge_points_of_dual": edge_points, "rank_L0": l0, "rho": edge_points + l0 - 3}


def picard_rank(delta: Polytope) -> int:
    """Picard number of the generic K3 section.

    The edge sum counts every lattice point of ``Δ*`` that lies on a vertex or
    an edge exactly once.
    """
    rho = picard_rank_terms(delta)["rho"]
    if not 1 <= rho <= 20:
        raise RankOutOfRange(f"computed Picard rank {rho} is outside [1, 20]")
    return rho


@dataclass(frozen=True)
class DivisorNode:
    source: tuple[int, int, int]
    component_index: int
    self_int: int
    label: str


@dataclass(frozen=True)
class IntersectionGraph:
    nodes: tuple[DivisorNode, ...]
    gram_full: tuple[tuple[int, ...], ...]
    relations: tuple[tuple[int, ...], ...]

    @property
    def labels(self) -> list[str]:
        return [n.label for n in self.nodes]

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def self_intersections(self) -> list[int]:
        return [n.self_int for n in self.nodes]


@dataclass(frozen=True)
class PicardBasis:
    node_indices: tuple[int, ...]
    labels: tuple[str, ...]
    gram: tuple[tuple[int, ...], ...]


def _default_labels(order, multiplicity, prefix="D"):
    labels = {}
    for i, src in enumerate(order, start=1):
        for c in range(multiplicity[src]):
            labels[(src, c)] = f"{prefix}{i}" + "'" * c
    return labels


def build_intersection_graph(
    delta: Polytope,
    order: Sequence | None = None,
    labels: Sequence[str] | None = None,
    prefix: str = "D",
) -> IntersectionGraph:
    """Intersection graph of the restricted toric divisors of a generic section.

    ``order`` optionally fixes the order of the source points (lattice points
    of ``Δ*``); by default vertices come first, then edge-interior points, each
    group sorted lexicographically.  Components of a split divisor are
    consecutive.  ``labels`` overrides the generated node names.
    """
    dual = _require_reflexive(delta)

    vertex_self = {}
    for i, v in enumerate(dual.vertices):
        facet = dual_face(FaceRef(0, (i,)), dual, delta)
        vertex_self[v] = 2 * count_interior(facet, delta) - 2

    # edge of Δ* -> (endpoints, interior points in order, k)
    chains = []
    pair_mult = {}
    multiplicity = {v: 1 for v in dual.vertices}
    for edge in dual.faces(1):
        gamma = dual_face(edge, dual, delta)
        k = count_interior(gamma, delta) + 1
        a, b = dual.face_points(edge)
        pts = edge_points_in_order(edge, dual, start=a)
        inner = pts[1:-1]
        if inner:
            chains.append((a, b, inner, k))
            for m in inner:
                multiplicity[m] = k
        else:
            pair_mult[frozenset((a, b))] = k

    default_order = list(dual.vertices) + sorted(set(multiplicity) - set(dual.vertices))
    if order is None:
        order = default_order
    else:
        order = [as_point(p) for p in order]
        if sorted(order) != sorted(default_order):
            raise TorusK3Error("node order must list every vertex/edge lattice point of the dual once")

    keys = [(src, c) for src in order for c in range(multiplicity[src])]
    if labels is None:
        names = _default_labels(order, multiplicity, prefix)
        labels = [names[k] for k in keys]
    elif len(labels) != len(keys):
        raise TorusK3Error(f"expected {len(keys)} labels, got {len(labels)}")
    pos = {k: i for i, k in enumerate(keys)}
    n = len(keys)
    gram = [[0] * n for _ in range(n)]

    for (src, c), i in pos.items():
        gram[i][i] = vertex_self.get(src, -2)
    for pair, mult in pair_mult.items():
        a, b = tuple(pair)
        i, j = pos[(a, 0)], pos[(b, 0)]
        gram[i][j] = gram[j][i] = mult
    for a, b, inner, k in chains:
        for c in range(k):
            walk = [pos[(a, 0)]] + [pos[(m, c)] for m in inner] + [pos[(b, 0)]]
            for i, j in zip(walk, walk[1:]):
                gram[i][j] += 1
                gram[j][i] += 1

    relations = tuple(
        tuple(dot(src, e) for (src, _c) in keys) for e in BASIS_VECTORS
    )
    nodes = tuple(
        DivisorNode(src, c, gram[pos[(src, c)]][pos[(src, c)]], labels[pos[(src, c)]])
        for (src, c) in keys
    )
    return IntersectionGraph(nodes, tuple(map(tuple, gram)), relations)


def _dropped_is_unimodular(g: IntersectionGraph, dropped: Sequence[int]) -> bool:
    minor = [[r[i] for i in dropped] for r in g.relations]
    return abs(intmat.det(minor)) == 1


def default_basis(g: IntersectionGraph) -> tuple[int, ...]:
    """Drop the earliest triple of nodes that the relations eliminate over Z.

    With the vertex divisors listed first this keeps the later nodes, e.g.
    ``{D4, D5, ...}`` when ``D1, D2, D3`` can be solved for.
    """
    n = len(g.nodes)
    for dropped in combinations(range(n), 3):
        if _dropped_is_unimodular(g, dropped):
            return tuple(i for i in range(n) if i not in dropped)
    raise RankMismatch("no three nodes can be eliminated by the relations over Z")


def picard_gram(
    g: IntersectionGraph,
    delta: Polytope,
    basis: Sequence[str] | Sequence[int] | None = None,
) -> PicardBasis:
    """Gram matrix of the Picard lattice on a basis of node classes.

    ``basis`` may name the nodes to keep (labels or indices); otherwise
    :func:`default_basis` picks one.  The kept nodes must form a Z-basis of the
    node lattice modulo the relations, and their number must equal the rank
    predicted by :func:`picard_rank`.
    """
    rho = picard_rank(delta)
    if intmat.rank(g.relations) != 3:
        raise RankMismatch("the three linear relations are not independent")
    if basis is None:
        idx = default_basis(g)
    else:
        idx = tuple(g.index(b) if isinstance(b, str) else int(b) for b in basis)
        dropped = [i for i in range(len(g.nodes)) if i not in idx]
        if len(dropped) != 3 or not _dropped_is_unimodular(g, dropped):
            raise RankMismatch("requested basis is not a Z-basis modulo the relations")
    if len(idx) != rho:
        raise RankMismatch(f"basis has {len(idx)} classes but the rank formula gives {rho}")
    gram = tuple(tuple(g.gram_full[i][j] for j in idx) for i in idx)
    return PicardBasis(idx, tuple(g.nodes[i].label for i in idx), gram)
