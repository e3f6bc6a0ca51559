"""Reference data: the three polytopes, their labelled divisor orders, the
published Gram matrices and change-of-basis matrices, and the torus-type curve
templates with their suggested parameter values.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .polytope import Polytope, convex_hull

DELTA_VERTICES = {
    "Delta1": ((-1, -1, 1), (-1, 1, -1), (3, -1, -1), (5, -1, -1), (-1, 5, -1)),
    "Delta2": ((-1, -1, 1), (-1, 2, -1), (3, -1, -1), (5, -1, -1), (-1, 5, -1)),
    "Delta3": ((-1, -1, 1), (-1, 1, -1), (1, -1, -1), (5, -1, -1), (-1, 5, -1)),
}

DUAL_VERTICES = {
    "Delta1": ((0, 0, 1), (-1, -1, -3), (0, 1, 0), (1, 2, 2), (1, 0, 0)),
    "Delta2": ((0, 0, 1), (-1, -1, -3), (0, 1, 0), (3, 4, 6), (1, 0, 0)),
    "Delta3": ((0, 0, 1), (-1, -1, -3), (0, 1, 0), (1, 1, 1), (1, 0, 0)),
}

# labelled source points of the divisor nodes
NODE_ORDER = {
    "Delta1": ((0, 0, 1), (-1, -1, -3), (0, 1, 0), (1, 2, 2), (1, 0, 0), (1, 1, 1)),
    "Delta2": ((0, 0, 1), (-1, -1, -3), (0, 1, 0), (3, 4, 6), (1, 0, 0), (2, 2, 3),
               (1, 2, 2), (2, 3, 4)),
    "Delta3": ((0, 0, 1), (-1, -1, -3), (0, 1, 0), (1, 1, 1), (1, 0, 0)),
}

NODE_LABELS = {
    "Delta1": ("D1", "D2", "D3", "D4", "D5", "D6", "D7"),
    "Delta2": ("D1", "D2", "D3", "D4", "D5", "D6", "D7", "D7'", "D8", "D8'"),
    "Delta3": ("D1", "D2", "D3", "D4", "D5"),
}

BASIS = {
    "Delta1": ("D4", "D5", "D6", "D7"),
    "Delta2": ("D4", "D5", "D6", "D7", "D7'", "D8", "D8'"),
    "Delta3": ("D4", "D5"),
}

DUAL3_ORDER = (
    (-1, -1, 1), (0, -1, 0), (2, -1, 0), (-1, 2, 0), (-1, 0, 0), (1, -1, -1),
    (2, -1, -1), (3, -1, -1), (4, -1, -1), (5, -1, -1), (4, 0, -1), (3, 1, -1),
    (2, 2, -1), (1, 3, -1), (0, 4, -1), (-1, 5, -1), (-1, 4, -1), (-1, 3, -1),
    (-1, 2, -1), (-1, 1, -1), (0, 0, -1),
)
DUAL3_LABELS = tuple(f"M{i}" for i in range(1, 22))
DUAL3_BASIS = tuple(f"M{i}" for i in range(1, 19))

SELF_INTERSECTIONS = {
    "Delta1": (14, 2, -2, -2, 0, -2, -2),
    "Delta2": (14, 2, -2, -2, 0, -2, -2, -2, -2, -2),
    "Delta3": (16, 4, 0, -2, 0),
    "Delta3*": (0,) + (-2,) * 20,
}

RANK_L0 = {"Delta1": 1, "Delta2": 2, "Delta3": 0}
RHO = {"Delta1": 4, "Delta2": 7, "Delta3": 2}
RHO_DUAL = {"Delta1": 17, "Delta2": 15, "Delta3": 18}

A_B = {
    "Delta1": (
        (-2, 0, 1, 1),
        (0, 0, 1, 1),
        (1, 1, -2, 0),
        (1, 1, 0, -2),
    ),
    "Delta2": (
        (-2, 0, 1, 0, 0, 1, 1),
        (0, 0, 1, 0, 0, 0, 0),
        (1, 1, -2, 0, 0, 0, 0),
        (0, 0, 0, -2, 0, 1, 0),
        (0, 0, 0, 0, -2, 0, 1),
        (1, 0, 0, 1, 0, -2, 0),
        (1, 0, 0, 0, 1, 0, -2),
    ),
    "Delta3": ((-2, 2), (2, 0)),
}

P_MATRIX = {
    "Delta1": (
        (0, 1, 1, 0),
        (0, 1, 0, 0),
        (1, -1, 0, 0),
        (0, -2, -1, 1),
    ),
    "Delta2": (
        (0, 1, 1, 0, 0, 0, 0),
        (0, 1, 0, 0, 0, 0, 0),
        (0, 0, 0, 0, 1, 0, 0),
        (0, 0, 0, 0, 0, 0, 1),
        (1, -1, 0, 0, 0, 0, 0),
        (0, 0, 0, 0, 0, 1, 0),
        (0, 0, 0, 1, 0, 0, 0),
    ),
    "Delta3": ((1, 0), (1, 1)),
}

TARGET_NAME = {"Delta1": "U + <-2> + <-4>", "Delta2": "U + A5", "Delta3": "<-2> + <2>"}


def _b_dual3():
    n = 18
    g = [[0] * n for _ in range(n)]
    for i in range(1, n):
        g[i][i] = -2
    edges = [(1, 2), (1, 3), (1, 4), (1, 5), (2, 6), (3, 10), (4, 16)]
    edges += [(i, i + 1) for i in range(6, 18)]
    for a, b in edges:
        g[a - 1][b - 1] = g[b - 1][a - 1] = 1
    return tuple(map(tuple, g))


B_B_DUAL3 = _b_dual3()


def target_gram(name: str):
    """Block-diagonal Gram the published P matrix is meant to reach."""
    from .lattice import gram_A, gram_U, gram_k
    from .intmat import block_diag

    blocks = {
        "Delta1": (gram_U(), gram_k(-2), gram_k(-4)),
        "Delta2": (gram_U(), gram_A(5)),
        "Delta3": (gram_k(-2), gram_k(2)),
    }[name]
    return tuple(map(tuple, block_diag(*blocks)))


def polytope(name: str) -> Polytope:
    return convex_hull(DELTA_VERTICES[name])


# ---------------------------------------------------------------------------
# curves

F2_CONIC = "Y*Z - X^2"


@dataclass(frozen=True)
class CurveCase:
    name: str  # heading configuration
    f3: str
    params: dict = field(default_factory=dict)
    points: dict = field(default_factory=dict)  # point -> stated type(s)
    family: str | None = None  # "Delta1".."Delta3", or None for none of them
    listed_monomials: tuple[str, ...] = ()
    f2: str = F2_CONIC
    note: str = ""


def _mons(text: str) -> tuple[str, ...]:
    return tuple(m.strip() for m in text.split(","))


CURVES: tuple[CurveCase, ...] = (
    CurveCase(
        "A17", "-X^2*Z + Y*Z^2 + Y^3", {},
        {(0, 0, 1): "A17"}, "Delta1",
        _mons("X^6, Y^6, X^4*Z^2, Y^4*Z^2, Y^3*Z^3, Y^2*Z^4"),
    ),
    CurveCase(
        "A2+A14", "Y^3 + t5*X*Y^2 - X^2*Z + Y*Z^2", {"t5": 1},
        {(0, 0, 1): "A14", (-1, 1, 1): "A2"}, "Delta1",
        _mons("X^6, Y^6, X^2*Y^4, X^4*Z^2, X*Y^5, Y^4*Z^2, Y^3*Z^3, Y^2*Z^4"),
    ),
    CurveCase(
        "A5+A11",
        "-t2*X^3 - (t1+t2-s-1)*Y^3 + X^2*Y - t1*X^2*Z + 2*(t1+t2-s-1)*X*Y^2"
        " + t1*Y*Z^2 - (t1+t2-s)*Y^2*Z",
        {"t1": 1, "t2": 1, "s": 0},
        {(0, 0, 1): "A11", (1, 1, 1): "A5"}, "Delta1",
        _mons("X^6, Y^6, X^5*Y, X^4*Y^2, X^3*Y^3, X^2*Y^4, X*Y^5, X^4*Z^2, X^5*Z,"
              " Y^5*Z, Y^4*Z^2, Y^3*Z^3, Y^2*Z^4"),
    ),
    CurveCase(
        "E6+A11",
        "-t2*X^3 + (-t1-t2+1)*Y^3 + X^2*Y + 2*(t1+t2-1)*X*Y^2 + t1*Y*Z^2"
        " + (t1+t2)*Y^2*Z - t1*X^2*Z",
        {"t1": -1, "t2": 1},
        {(0, 0, 1): "A11", (1, 1, 1): "E6"}, "Delta1",
        _mons("X^6, Y^6, X^5*Y, X^5*Z, X^4*Y^2, X^4*Z^2, X^3*Y^3, X^2*Y^4, X*Y^5,"
              " Y^5*Z, Y^4*Z^2, Y^3*Z^3, Y^2*Z^4"),
    ),
    CurveCase(
        "2A8",
        "-(t2+1)*X^3 + t2*Y^3 + 3*t2*X^2*Y - 3*t2*X*Y^2 - t1*X^2*Z + t1*Y*Z^2",
        {"t1": 1, "t2": 1},
        {(0, 0, 1): "A8", (1, 1, 1): "A8"}, "Delta1",
        _mons("X^6, Y^6, X^5*Y, X^4*Y^2, X^4*Z^2, X^3*Y^3, X^2*Y^4, X*Y^5, X^5*Z,"
              " Y^4*Z^2, Y^3*Z^3"),
    ),
    CurveCase(
        "2A2+A11", "Y^3 + t4*X^2*Y - X^2*Z + t5*X*Y^2 + Y*Z^2", {"t4": -2, "t5": 1},
        {(0, 0, 1): "A11", (-1, 1, 1): "A2", (-2, 4, 1): "A2"}, "Delta1",
        _mons("X^6, Y^6, X^4*Y^2, X^4*Z^2, X^3*Y^3, X^2*Y^4, X*Y^5, Y^4*Z^2,"
              " Y^3*Z^3, Y^2*Z^4"),
    ),
    CurveCase(
        "A2+A5+A8",
        "(-t2 - 23/27)*X^3 - (t2 - 4/27)*Y^3 + (t1 + t2 + 23/27 - s)*X^2*Y"
        " + (t2 - 4/27)*X*Y^2 - t1*X^2*Z + X*Y*Z + t1*Y*Z^2 + (-t1 - 1 + s)*Y^2*Z",
        {"t1": 1, "t2": 1, "s": 1},
        {(0, 0, 1): "A8", (-1, 1, 1): "A2", (1, 1, 1): "A5"}, "Delta1",
        _mons("X^6, Y^6, X^5*Y, X^4*Y^2, X^3*Y^3, X^2*Y^4, X*Y^5, X^5*Z, X^4*Z^2,"
              " Y^5*Z, Y^4*Z^2, Y^3*Z^3, Y^2*Z^4"),
    ),
    CurveCase(
        "3A5",
        "-t3*X^3 + X^2*Y + (-t1 - t2/2 + t3 - 1)*X^2*Z + t3*X*Y*Z"
        " + (-t2/2 - 1 + t3)*Y^3 + (t2 + 1 - 2*t3)*Y^2*Z + t1*Y*Z^2",
        {"t1": 1, "t2": 1, "t3": 1},
        {(0, 0, 1): "A5", (1, 1, 1): "A5", (-1, 1, 1): "A5"}, "Delta1",
        _mons("X^6, Y^6, X^5*Y, X^5*Z, X^4*Y^2, X^4*Z^2, X^3*Y^3, X^2*Y^4, Y^5*Z,"
              " Y^4*Z^2, Y^3*Z^3, Y^2*Z^4"),
    ),
    CurveCase(
        "3A2+A8", "t3*X^3 + Y^3 + t4*X^2*Y - X^2*Z + Y*Z^2 + t5*X*Y^2",
        {"t3": -4, "t4": -4, "t5": 1},
        {(0, 0, 1): "A8", (-1, 1, 1): "A2", (-2, 4, 1): "A2", (2, 4, 1): "A2"}, "Delta1",
        _mons("X^6, Y^6, X^5*Y, X^5*Z, X^4*Y^2, X^4*Z^2, X^3*Y^3, X^2*Y^4, X*Y^5,"
              " Y^4*Z^2, Y^3*Z^3, Y^2*Z^4"),
    ),
    CurveCase(
        "2A2+2A5",
        "3*X^3 + Y^3 - (t1+2)*X^2*Z + (t1-t2-1)*X^2*Y - 3*X*Y^2 + t1*Y*Z^2"
        " + (-t1+2+t2)*Y^2*Z",
        {"t1": 1, "t2": 1},
        {(0, 0, 1): "A5", (1, 1, 1): "A5", (-1, 1, 1): "A2", (2, 4, 1): "A2"}, "Delta1",
        _mons("X^6, Y^6, X^5*Y, X^5*Z, X^4*Y^2, X^4*Z^2, X^3*Y^3, X^2*Y^4, X*Y^5,"
              " Y^5*Z, Y^4*Z^2, Y^2*Z^4"),
    ),
    CurveCase(
        "4A2+A5", "t3*X^3 + Y^3 + t4*X^2*Y + (t2-1)*X^2*Z + t5*X*Y^2 + Y*Z^2",
        {"t2": 4, "t3": 0, "t4": -5, "t5": 0},
        {(0, 0, 1): "A5", (-1, 1, 1): "A2", (1, 1, 1): "A2", (-2, 4, 1): "A2",
         (2, 4, 1): "A2"}, "Delta1",
        _mons("X^6, Y^6, X^5*Y, X^5*Z, X^4*Y^2, X^4*Z^2, X^3*Y^3, X^2*Y^4, X*Y^5,"
              " Y^4*Z^2, Y^3*Z^3, Y^2*Z^4"),
    ),
    CurveCase(
        "2A5+E6",
        "-t3*X^3 + X^2*Y - (1 + t2/2 - t3)*X^2*Z + t3*X*Y*Z - (1 + t2/2 - t3)*Y^3"
        " + (1 + t2 - 2*t3)*Y^2*Z",
        {"t2": 1, "t3": 1},
        {(0, 0, 1): "E6", (1, 1, 1): "A5", (-1, 1, 1): "A5"}, "Delta2",
        _mons("X^6, Y^6, X^5*Y, X^5*Z, X^4*Y^2, X^4*Z^2, X^3*Y^3, X^2*Y^4, Y^5*Z,"
              " Y^4*Z^2, Y^3*Z^3"),
        note="the suggested values name t1 and t2, but the parameters are t2 and t3",
    ),
    CurveCase(
        "A5+2E6",
        "-t3*X^3 - (1-t3)*Y^3 + X^2*Y - (1-t3)*X^2*Z + (1-2*t3)*Y^2*Z + t3*X*Y*Z",
        {"t3": -1},
        {(0, 0, 1): "A5", (1, 1, 1): "A5", (-1, 1, 1): "A5"}, "Delta2",
        _mons("X^6, Y^6, X^5*Y, X^5*Z, X^4*Y^2, X^3*Y^3, X^4*Z^2, X^2*Y^4, Y^3*Z^3,"
              " Y^5*Z"),
    ),
    CurveCase(
        "3E6", "X^2*Y - X^2*Z - Y^3 + Y^2*Z", {},
        {(0, 0, 1): "E6", (1, 1, 1): "E6", (-1, 1, 1): "E6"}, "Delta2",
        _mons("X^6, Y^6, X^4*Y^2, X^4*Z^2, X^2*Y^4, Y^5*Z, Y^4*Z^2, Y^3*Z^3"),
    ),
    CurveCase(
        "2A2+A5+E6", "3*X^3 + Y^3 - (1+t2)*X^2*Y - 3*X*Y^2 - 2*X^2*Z + (2+t2)*Y^2*Z",
        {"t2": 1},
        {(0, 0, 1): "E6", (-1, 1, 1): "A2", (2, 4, 1): "A2", (1, 1, 1): "A5"}, "Delta2",
        _mons("X^6, Y^6, X^5*Y, X^5*Z, X^4*Y^2, X^4*Z^2, X^3*Y^3, X^2*Y^4, X*Y^5,"
              " Y^5*Z, Y^4*Z^2, Y^3*Z^3"),
    ),
    CurveCase(
        "2A2+2E6", "3*X^3 + Y^3 - X^2*Y - 3*X*Y^2 - 2*X^2*Z + 2*Y^2*Z", {},
        {(0, 0, 1): "E6", (1, 1, 1): "E6", (-1, 1, 1): "A2", (2, 4, 1): "A2"}, "Delta2",
        _mons("X^6, Y^6, X^5*Y, X^5*Z, X^4*Y^2, X^4*Z^2, X^3*Y^3, X^2*Y^4, X*Y^5,"
              " Y^5*Z, Y^4*Z^2, Y^3*Z^3"),
    ),
    CurveCase(
        "A2+E6+A8",
        "-(t2 + 23/27)*X^3 + (4/27 - t2)*Y^3 + (t1 + t2 + 23/27)*X^2*Y"
        " + (t2 - 4/27)*X*Y^2 - t1*X^2*Z - (t1 + 1)*Y^2*Z + t1*Y*Z^2 + X*Y*Z",
        {"t1": 1, "t2": 1},
        {(0, 0, 1): "A8", (-1, 1, 1): "A2", (1, 1, 1): "E6"}, "Delta2",
        _mons("X^6, Y^6, X^5*Y, X^4*Y^2, X^3*Y^3, X^2*Y^4, X*Y^5, X^5*Z, X^4*Z^2,"
              " Y^5*Z, Y^4*Z^2, Y^3*Z^3"),
    ),
    CurveCase(
        "4A2+E6", "Y^3 - X*Y^2 - 4*X*Z^2 - 5*Y^2*Z + 4*Y*Z^2 + 5*X*Y*Z", {},
        {(1, 1, 1): "E6", (0, 0, 1): "A2", (-1, 1, 1): "A2", (-2, 4, 1): "A2",
         (2, 4, 1): "A2"}, "Delta3",
        _mons("X^6, Y^6, X^2*Y^4, X^2*Z^4, X*Y^5, Y^5*Z, Y^4*Z^2, Y^3*Z^3, Y^2*Z^4"),
    ),
    CurveCase(
        "6A2", "X^3 + Y^3 + Z^3", {}, {}, None,
        _mons("X^6, Y^6, Z^6, X^3*Y^3, X^3*Z^3, Y^3*Z^3"),
    ),
)


def curve_case(name: str) -> CurveCase:
    for c in CURVES:
        if c.name == name:
            return c
    raise KeyError(name)
