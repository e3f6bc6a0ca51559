"""Weighted-degree-6 monomials in ``X, Y, Z, W`` (weights 1, 1, 1, 3) as
lattice points.

A monomial ``X^a Y^b Z^c W^d`` corresponds to the vector
``(a-1, b-1, c-1, d-1)`` of the rank-3 lattice
``M = {(a0, a1, a2, a3) : a0 + a1 + a2 + 3 a3 = 0 mod 6}``, written in the basis
``e1 = (1, 0, -1, 0)``, ``e2 = (0, 1, -1, 0)``, ``e3 = (0, 0, -3, 1)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from . import intmat
from .errors import InputError, NegativeExponent, NotInLattice

WEIGHTS = (1, 1, 1, 3)
DEGREE = 6
BASIS = ((1, 0, -1, 0), (0, 1, -1, 0), (0, 0, -3, 1))
VARIABLES = "XYZW"


@dataclass(frozen=True, order=True)
class WeightedMonomial:
    exponents: tuple[int, int, int, int]

    def __post_init__(self):
        if any(e < 0 for e in self.exponents):
            raise NegativeExponent(f"negative exponent in {self.exponents}")

    @property
    def degree(self) -> int:
        return sum(w * e for w, e in zip(WEIGHTS, self.exponents))

    def __str__(self) -> str:
        parts = []
        for v, e in zip(VARIABLES, self.exponents):
            if e == 1:
                parts.append(v)
            elif e > 1:
                parts.append(f"{v}^{e}")
        return "*".join(parts) or "1"


def in_lattice(raw, weights=WEIGHTS, degree=DEGREE) -> bool:
    return sum(w * a for w, a in zip(weights, raw)) % degree == 0


def raw_to_point(raw, basis=BASIS) -> tuple[int, int, int]:
    """Coordinates of a lattice vector of ``M`` in the given basis."""
    raw = tuple(int(a) for a in raw)
    if not in_lattice(raw):
        raise NotInLattice(f"{raw} violates the congruence defining M")
    # raw = x B with B the 3x4 basis matrix; solve B^t x^t = raw^t
    aug = [list(col) + [r] for col, r in zip(zip(*basis), raw)]
    m, piv = intmat.rref(aug)
    if 3 in piv:
        raise NotInLattice(f"{raw} is not in the span of the basis")
    sol = [m[i][3] for i in range(3)]
    if any(Fraction(x).denominator != 1 for x in sol):
        raise NotInLattice(f"{raw} has non-integral coordinates {sol}")
    return tuple(int(x) for x in sol)


def point_to_raw(p, basis=BASIS) -> tuple[int, int, int, int]:
    return tuple(sum(c * b[k] for c, b in zip(p, basis)) for k in range(4))


def monomial_to_point(m: WeightedMonomial) -> tuple[int, int, int]:
    if m.degree != DEGREE:
        raise NotInLattice(f"{m} has weighted degree {m.degree}, not {DEGREE}")
    return raw_to_point(tuple(e - 1 for e in m.exponents))


def point_to_monomial(p) -> WeightedMonomial:
    exps = tuple(a + 1 for a in point_to_raw(p))
    if any(e < 0 for e in exps):
        raise NegativeExponent(f"point {tuple(p)} gives the Laurent monomial exponents {exps}")
    return WeightedMonomial(exps)


def all_monomials() -> list[WeightedMonomial]:
    """Every monomial of weighted degree 6."""
    out = []
    for d in range(DEGREE // WEIGHTS[3] + 1):
        rest = DEGREE - 3 * d
        for a, b in product(range(rest + 1), repeat=2):
            if a + b <= rest:
                out.append(WeightedMonomial((a, b, rest - a - b, d)))
    return sorted(out)


_TOKEN = re.compile(r"\s*([XYZW])\s*(?:\^\s*(\d+))?\s*")


def parse_monomial(text: str) -> WeightedMonomial:
    """Parse strings such as ``"X^2*Z^4"`` or ``"XYZW"``; ``*`` is optional."""
    exps = [0, 0, 0, 0]
    s = text.replace("*", " ").strip()
    if s in ("", "1"):
        return WeightedMonomial((0, 0, 0, 0))
    pos = 0
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m or m.end() == pos:
            raise InputError(f"cannot parse monomial {text!r} at column {pos + 1}")
        exps[VARIABLES.index(m.group(1))] += int(m.group(2) or 1)
        pos = m.end()
    return WeightedMonomial(tuple(exps))
