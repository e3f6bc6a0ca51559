"""Even integral lattices given by Gram matrices.

Invariants (rank, signature, determinant), discriminant groups and forms,
verified congruences ``P G P^t``, a bounded isometry search, a small
catalogue of standard lattices and the discriminant-form duality check used
for K3 lattice complements.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations_with_replacement, product
from math import prod
from typing import Sequence

import numpy as np

from . import intmat
from .errors import Degenerate

log = logging.getLogger(__name__)

K3_RANK = 22


def _mod(x: Fraction, m: int) -> Fraction:
    """Representative of ``x`` in ``[0, m)``."""
    return x - m * (x // m)


def as_gram(g) -> tuple[tuple[int, ...], ...]:
    rows = tuple(tuple(int(x) for x in r) for r in g)
    if not intmat.is_symmetric(rows):
        raise ValueError("Gram matrix must be square and symmetric")
    return rows


def is_even(g) -> bool:
    return all(g[i][i] % 2 == 0 for i in range(len(g)))


# ---------------------------------------------------------------------------
# discriminant forms


@dataclass(frozen=True)
class DiscriminantForm:
    """Finite quadratic form on ``⊕ Z/d_i``.

    ``q_matrix[i][j]`` is the rational pairing of the lifted generators; the
    quadratic value of an element ``c`` is ``c^t Q c`` reduced mod 2.
    """

    orders: tuple[int, ...]
    q_matrix: tuple[tuple[Fraction, ...], ...]

    @property
    def order(self) -> int:
        return prod(self.orders)

    def q(self, c) -> Fraction:
        n = len(self.orders)
        v = sum(self.q_matrix[i][j] * c[i] * c[j] for i in range(n) for j in range(n))
        return _mod(Fraction(v), 2)

    def b(self, c, d) -> Fraction:
        n = len(self.orders)
        v = sum(self.q_matrix[i][j] * c[i] * d[j] for i in range(n) for j in range(n))
        return _mod(Fraction(v), 1)

    def generator_values(self) -> list[Fraction]:
        n = len(self.orders)
        return [self.q(tuple(int(i == j) for j in range(n))) for i in range(n)]

    @cached_property
    def elements(self) -> list[tuple[int, ...]]:
        return list(product(*(range(d) for d in self.orders)))

    def add(self, c, d):
        return tuple((x + y) % m for x, y, m in zip(c, d, self.orders))

    def element_order(self, c) -> int:
        k, x = 1, c
        while any(x):
            x = self.add(x, c)
            k += 1
        return k

    def value_multiset(self) -> list[Fraction]:
        return sorted(self.q(c) for c in self.elements)

    def find_isomorphism(self, other: "DiscriminantForm", sign: int = 1):
        """A group isomorphism ``φ`` with ``q_other(φ(x)) = sign * q_self(x)``.

        Returns the images of the generators of ``self`` as elements of
        ``other``, or None.  Exhaustive; the groups here have order <= ~100.
        """
        if self.order != other.order:
            return None
        if self.order == 1:
            return ()
        mine = [_mod(sign * v, 2) for v in self.value_multiset()]
        if sorted(mine) != other.value_multiset():
            return None
        by_order: dict[int, list] = {}
        for h in other.elements:
            by_order.setdefault(other.element_order(h), []).append(h)
        choices = [
            [h for h in by_order.get(d, []) if other.q(h) == _mod(sign * self.q(e), 2)]
            for d, e in zip(self.orders, (tuple(int(i == j) for j in range(len(self.orders)))
                                          for i in range(len(self.orders))))
        ]
        for imgs in product(*choices):
            image = {}
            ok = True
            for c in self.elements:
                h = tuple([0] * len(other.orders))
                for k, ck in enumerate(c):
                    for _ in range(ck):
                        h = other.add(h, imgs[k])
                if h in image.values() or other.q(h) != _mod(sign * self.q(c), 2):
                    ok = False
                    break
                image[c] = h
            if ok:
                return imgs
        return None

    def is_isomorphic(self, other: "DiscriminantForm", sign: int = 1) -> bool:
        return self.find_isomorphism(other, sign) is not None


@dataclass(frozen=True)
class LatticeInvariants:
    rank: int
    signature: tuple[int, int]
    determinant: int
    disc_group: tuple[int, ...]
    disc_form: DiscriminantForm
    # lifts of the discriminant group generators as integer vectors u with
    # element g^{-1} u of the dual lattice
    generator_lifts: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def q_values(self) -> list[Fraction]:
        return self.disc_form.generator_values()

    def as_dict(self) -> dict:
        n = len(self.disc_group)
        return {
            "rank": self.rank,
            "signature": list(self.signature),
            "determinant": self.determinant,
            "disc_group": list(self.disc_group),
            "q_values": [str(v) for v in self.q_values],
            "b_values": [
                [str(self.disc_form.b(_unit(n, i), _unit(n, j))) for j in range(n)]
                for i in range(n)
            ],
        }


def _unit(n, i):
    return tuple(int(k == i) for k in range(n))


def invariants(g) -> LatticeInvariants:
    """Rank, signature, determinant and discriminant form of a Gram matrix."""
    g = as_gram(g)
    n = len(g)
    d = intmat.det(g)
    if d == 0:
        raise Degenerate("Gram matrix is degenerate (det = 0)")
    D, U, _V = intmat.smith_normal_form(g)
    Uinv = intmat.inverse(U)
    ginv = intmat.inverse(g)
    lifts = []
    orders = []
    for i in range(n):
        if D[i][i] > 1:
            orders.append(D[i][i])
            lifts.append(tuple(int(Uinv[r][i]) for r in range(n)))
    qm = tuple(
        tuple(
            sum(Fraction(u[a]) * ginv[a][b] * w[b] for a in range(n) for b in range(n))
            for w in lifts
        )
        for u in lifts
    )
    return LatticeInvariants(
        rank=intmat.rank(g),
        signature=intmat.signature(g),
        determinant=d,
        disc_group=tuple(orders),
        disc_form=DiscriminantForm(tuple(orders), qm),
        generator_lifts=tuple(lifts),
    )


# ---------------------------------------------------------------------------
# congruences


@dataclass(frozen=True)
class CongruenceWitness:
    P: tuple[tuple[int, ...], ...]
    source: tuple[tuple[int, ...], ...]
    target: tuple[tuple[int, ...], ...]


def verify_congruence(w: CongruenceWitness) -> bool:
    """Exact check of ``P source P^t == target`` with ``|det P| = 1``."""
    n = len(w.source)
    if len(w.P) != n or len(w.target) != n or any(len(r) != n for r in w.P):
        return False
    if abs(intmat.det(w.P)) != 1:
        return False
    return intmat.congruence(w.P, w.source) == [list(r) for r in w.target]


MAX_BOX = 3_000_000


def _box(n: int, bound: int) -> np.ndarray:
    rng = np.arange(-bound, bound + 1, dtype=np.int64)
    grids = np.meshgrid(*([rng] * n), indexing="ij")
    return np.stack([gr.ravel() for gr in grids], axis=1)


def _search(source, target, bound: int, node_limit: int):
    """Backtracking for rows ``x_i`` of ``P`` with ``x_i S x_j = T_ij``.

    Each target index keeps a pool of admissible box vectors; choosing a row
    filters the pools of all unassigned indices (forward checking), and the
    index with the smallest pool is assigned next.  Since ``det T = det S`` is
    checked beforehand, any complete assignment is automatically unimodular.
    """
    n = len(source)
    S = np.array(source, dtype=np.int64)
    X = _box(n, bound)
    XS = X @ S
    norms = np.einsum("ij,ij->i", XS, X)
    pools = {i: np.nonzero(norms == target[i][i])[0] for i in range(n)}
    assigned: dict[int, int] = {}
    nodes = 0

    def independent(i, c) -> bool:
        keys = list(assigned) + [i]
        if intmat.det([[target[a][b] for b in keys] for a in keys]) != 0:
            return True
        rows = np.vstack([X[assigned[k]] for k in assigned] + [X[c]]).astype(float)
        return np.linalg.matrix_rank(rows) == len(keys)

    def rec(pools):
        nonlocal nodes
        if not pools:
            return True
        i = min(pools, key=lambda k: (pools[k].size, k))
        rest = {k: v for k, v in pools.items() if k != i}
        for c in pools[i]:
            nodes += 1
            if nodes > node_limit:
                return False
            if assigned and not independent(i, c):
                continue
            xs = XS[c]
            new = {}
            for k, pool in rest.items():
                pool = pool[X[pool] @ xs == target[i][k]]
                if pool.size == 0:
                    break
                new[k] = pool
            else:
                assigned[i] = int(c)
                if rec(new):
                    return True
                del assigned[i]
        return False

    if not rec(pools):
        return None
    return [[int(x) for x in X[assigned[i]]] for i in range(n)]


def find_congruence(source, target, bound: int = 2, node_limit: int = 200_000):
    """Search for unimodular ``P`` with entries in ``[-bound, bound]`` and
    ``P source P^t = target``.

    Bounds are tried in increasing order.  Returns a verified
    :class:`CongruenceWitness` or None; None does not prove non-isometry.
    """
    source, target = as_gram(source), as_gram(target)
    if len(source) != len(target):
        return None
    if intmat.det(source) != intmat.det(target):
        return None
    if intmat.signature(source) != intmat.signature(target):
        return None
    n = len(source)
    for b in range(1, bound + 1):
        if (2 * b + 1) ** n > MAX_BOX:
            log.debug("box of side %d too large in dimension %d", 2 * b + 1, n)
            break
        rows = _search(source, target, b, node_limit)
        if rows is not None:
            w = CongruenceWitness(tuple(map(tuple, rows)), source, target)
            assert verify_congruence(w)
            return w
    return None


def _isotropic_split(g, bound: int):
    """Witness ``P`` whose first two rows span a copy of U, or None."""
    g = as_gram(g)
    n = len(g)
    if n < 2 or not is_even(g):
        return None
    for b in range(1, bound + 1):
        if (2 * b + 1) ** n > MAX_BOX:
            break
        S = np.array(g, dtype=np.int64)
        X = _box(n, b)
        XS = X @ S
        norms = np.einsum("ij,ij->i", XS, X)
        for idx in np.nonzero(norms == 0)[0]:
            row = [int(x) for x in XS[idx]]
            if not any(row):
                continue
            if np.gcd.reduce(np.abs(XS[idx])) != 1:
                continue
            e = [int(x) for x in X[idx]]
            y = intmat.solve_integer([row], [1])
            yy = sum(y[i] * g[i][j] * y[j] for i in range(n) for j in range(n))
            f = [yi - (yy // 2) * ei for yi, ei in zip(y, e)]
            eg = [sum(e[i] * g[i][j] for i in range(n)) for j in range(n)]
            fg = [sum(f[i] * g[i][j] for i in range(n)) for j in range(n)]
            rest = intmat.integer_kernel([eg, fg])
            P = [e, f] + rest
            if abs(intmat.det(P)) != 1:
                continue
            target = intmat.congruence(P, g)
            w = CongruenceWitness(tuple(map(tuple, P)), g, tuple(map(tuple, target)))
            assert verify_congruence(w)
            return w
    return None


def detect_U_summand(g, bound: int = 2) -> bool:
    """True if a hyperbolic plane U splits off as an orthogonal summand.

    Looks for a primitive isotropic vector ``e`` with ``e . L = Z`` inside the
    coefficient box; such an ``e`` and a partner ``f`` span U, and U, being
    unimodular, is then an orthogonal summand.  False means none was found.
    """
    return _isotropic_split(g, bound) is not None


def u_summand_witness(g, bound: int = 2) -> CongruenceWitness | None:
    return _isotropic_split(g, bound)


# ---------------------------------------------------------------------------
# catalogue of standard lattices


def gram_U():
    return ((0, 1), (1, 0))


def gram_k(k: int):
    return ((k,),)


def gram_A(n: int):
    return tuple(
        tuple(-2 if i == j else (1 if abs(i - j) == 1 else 0) for j in range(n))
        for i in range(n)
    )


def _gram_from_edges(n, edges):
    m = [[-2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in edges:
        m[i][j] = m[j][i] = 1
    return tuple(map(tuple, m))


def gram_E(n: int):
    """Negative-definite E6/E7/E8: a chain 0-1-...-(n-2) with node n-1 on node 2."""
    if n not in (6, 7, 8):
        raise ValueError("E_n only for n = 6, 7, 8")
    edges = [(i, i + 1) for i in range(n - 2)] + [(2, n - 1)]
    return _gram_from_edges(n, edges)


@dataclass(frozen=True)
class Summand:
    name: str
    gram: tuple[tuple[int, ...], ...]


def catalog_summands() -> list[Summand]:
    out = [Summand("U", gram_U())]
    for k in (-2, 2, -4, 4, -6, 6, -8, 8):
        out.append(Summand(f"<{k}>", gram_k(k)))
    # A1 coincides with <-2>
    for n in range(2, 9):
        out.append(Summand(f"A{n}", gram_A(n)))
    out.append(Summand("E6", gram_E(6)))
    out.append(Summand("E8", gram_E(8)))
    return out


def direct_sum(grams):
    return tuple(map(tuple, intmat.block_diag(*grams)))


def lattice_name(parts: Sequence[Summand]) -> str:
    return " + ".join(p.name for p in parts)


def catalog_candidates(rank: int, max_summands: int = 4):
    summands = catalog_summands()
    for k in range(1, max_summands + 1):
        for combo in combinations_with_replacement(summands, k):
            if sum(len(s.gram) for s in combo) == rank:
                yield combo


@dataclass(frozen=True)
class Recognition:
    level: str  # "verified-isometric" | "same-invariants" | "unknown"
    name: str | None
    witness: CongruenceWitness | None = None
    catalog_gram: tuple | None = None

    def as_dict(self) -> dict:
        out = {"level": self.level, "name": self.name}
        if self.witness is not None:
            out["P"] = [list(r) for r in self.witness.P]
        return out


def _candidate_key(combo):
    # prefer decompositions with a U summand, then fewer summands
    has_u = any(s.name == "U" for s in combo)
    return (not has_u, len(combo), [s.name for s in combo])


def same_invariants(a: LatticeInvariants, b: LatticeInvariants) -> bool:
    return (
        a.rank == b.rank
        and a.signature == b.signature
        and a.determinant == b.determinant
        and a.disc_group == b.disc_group
        and a.disc_form.is_isomorphic(b.disc_form)
    )


def recognize(g, bound: int = 2) -> Recognition:
    """Match ``g`` against direct sums of up to four catalogue lattices.

    A match is "verified-isometric" when an explicit congruence to the
    catalogue Gram matrix is found, else "same-invariants".
    """
    g = as_gram(g)
    inv = invariants(g)
    matches = []
    for combo in catalog_candidates(inv.rank):
        cg = direct_sum([s.gram for s in combo])
        if intmat.signature(cg) != inv.signature or intmat.det(cg) != inv.determinant:
            continue
        if same_invariants(inv, invariants(cg)):
            matches.append((combo, cg))
    matches.sort(key=lambda m: _candidate_key(m[0]))
    for combo, cg in matches:
        w = find_congruence(g, cg, bound)
        if w is not None:
            return Recognition("verified-isometric", lattice_name(combo), w, cg)
    if matches:
        combo, cg = matches[0]
        return Recognition("same-invariants", lattice_name(combo), None, cg)
    return Recognition("unknown", None)


# ---------------------------------------------------------------------------
# duality of Picard lattices inside the K3 lattice


@dataclass(frozen=True)
class DualityReport:
    rank_s: int
    rank_t: int  # rank of U + t
    rank_ok: bool
    signature_s: tuple[int, int]
    signature_t: tuple[int, int]
    signature_ok: bool
    discriminant_ok: bool
    anti_isometry: tuple | None

    @property
    def passed(self) -> bool:
        return self.rank_ok and self.signature_ok and self.discriminant_ok

    @property
    def failed_stage(self) -> str | None:
        for stage, ok in (("rank", self.rank_ok), ("signature", self.signature_ok),
                          ("discriminant", self.discriminant_ok)):
            if not ok:
                return stage
        return None

    def as_dict(self) -> dict:
        return {
            "rank_s": self.rank_s,
            "rank_U_plus_t": self.rank_t,
            "rank_ok": self.rank_ok,
            "signature_s": list(self.signature_s),
            "signature_U_plus_t": list(self.signature_t),
            "signature_ok": self.signature_ok,
            "discriminant_ok": self.discriminant_ok,
            "passed": self.passed,
            "failed_stage": self.failed_stage,
        }


def check_duality(s, t) -> DualityReport:
    """Can ``s`` and ``U + t`` be mutual orthogonal complements in the K3 lattice?

    Checks ranks summing to 22, signatures ``(1, r-1)`` and ``(2, r'-2)``, and
    an anti-isometry of discriminant forms ``q_s = -q_{U+t}``.
    """
    s = as_gram(s)
    t2 = direct_sum([gram_U(), as_gram(t)])
    inv_s, inv_t = invariants(s), invariants(t2)
    rank_ok = inv_s.rank + inv_t.rank == K3_RANK
    sig_ok = inv_s.signature == (1, inv_s.rank - 1) and inv_t.signature == (2, inv_t.rank - 2)
    iso = inv_s.disc_form.find_isomorphism(inv_t.disc_form, sign=-1)
    return DualityReport(
        inv_s.rank, inv_t.rank, rank_ok,
        inv_s.signature, inv_t.signature, sig_ok,
        iso is not None, iso,
    )
