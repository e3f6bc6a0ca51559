"""Exact integer and rational matrix helpers.

Matrices are plain lists (or tuples) of rows.  All routines return new lists
and never mutate their inputs.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = Sequence[Sequence[int]]


def to_list(a) -> list[list]:
    return [list(r) for r in a]


def identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(a):
    return [list(r) for r in zip(*a)] if len(a) else []


def matmul(a, b):
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def congruence(p, g):
    """``P g P^t``."""
    return matmul(matmul(p, g), transpose(p))


def is_symmetric(a) -> bool:
    n = len(a)
    return all(len(r) == n for r in a) and all(a[i][j] == a[j][i] for i in range(n) for j in range(i))


def block_diag(*blocks):
    n = sum(len(b) for b in blocks)
    out = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                out[off + i][off + j] = x
        off += len(b)
    return out


def det(a) -> int:
    """Determinant of an integer matrix by fraction-free Bareiss elimination."""
    m = to_list(a)
    n = len(m)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def rref(a):
    """Reduced row echelon form over Q; returns (rows, pivot columns)."""
    m = [[Fraction(x) for x in r] for r in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(a) -> int:
    if not len(a):
        return 0
    return len(rref(a)[1])


def inverse(a) -> list[list[Fraction]]:
    n = len(a)
    aug = [list(r) + [int(i == j) for j in range(n)] for i, r in enumerate(a)]
    m, piv = rref(aug)
    if piv[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [r[n:] for r in m]


def charpoly(a) -> list:
    """Coefficients ``[1, c1, ..., cn]`` of det(xI - A) (Faddeev-LeVerrier).

    For integer input every intermediate matrix is integral and the divisions
    by ``k`` are exact, so the work stays in Python ints.
    """
    n = len(a)
    integral = all(isinstance(x, int) for r in a for x in r)
    A = [list(r) if integral else [Fraction(x) for x in r] for r in a]
    coeffs = [1]
    M = identity(n)
    for k in range(1, n + 1):
        AM = matmul(A, M)
        tr = sum(AM[i][i] for i in range(n))
        if integral:
            assert tr % k == 0
            c = -(tr // k)
        else:
            c = -Fraction(tr) / k
        coeffs.append(c)
        M = [[AM[i][j] + (c if i == j else 0) for j in range(n)] for i in range(n)]
    return coeffs


def _sign_changes(seq) -> int:
    signs = [1 if x > 0 else -1 for x in seq if x != 0]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def signature(a) -> tuple[int, int]:
    """(n+, n-) of a symmetric rational matrix.

    All eigenvalues are real, so Descartes' rule of signs is exact on the
    characteristic polynomial; negative roots are counted on p(-x).
    """
    cp = charpoly(a)
    n = len(cp) - 1
    pos = _sign_changes(cp)
    neg = _sign_changes([c * (-1) ** (n - i) for i, c in enumerate(cp)])
    return pos, neg


def smith_normal_form(a):
    """Smith normal form ``D = U A V`` with unimodular ``U``, ``V``.

    Returns ``(D, U, V)``.  Diagonal entries are non-negative and each divides
    the next.
    """
    A = to_list(a)
    m = len(A)
    n = len(A[0]) if m else 0
    U = identity(m)
    V = identity(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for M in (A, V):
            for r in M:
                r[i], r[j] = r[j], r[i]

    def add_row(src, dst, f):  # row_dst += f * row_src
        A[dst] = [x + f * y for x, y in zip(A[dst], A[src])]
        U[dst] = [x + f * y for x, y in zip(U[dst], U[src])]

    def add_col(src, dst, f):
        for M in (A, V):
            for r in M:
                r[dst] += f * r[src]

    def rquo(x, p):  # nearest-integer quotient keeps entries small
        q, r = divmod(x, p)
        return q + 1 if 2 * abs(r) > abs(p) else q

    for t in range(min(m, n)):
        while True:
            # pivot on the smallest entry left; this keeps coefficient growth in check
            nz = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
            if not nz:
                break
            _, i, j = min(nz)
            swap_rows(t, i)
            swap_cols(t, j)
            p = A[t][t]
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(t, i, -rquo(A[i][t], p))
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(t, j, -rquo(A[t][j], p))
            if any(A[i][t] for i in range(t + 1, m)) or any(A[t][j] for j in range(t + 1, n)):
                continue
            # divisibility: fold in any entry not divisible by the pivot
            bad = next(
                ((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(bad[0], t, 1)
        if not any(A[i][j] for i in range(t, m) for j in range(t, n)):
            break
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
    return A, U, V


def elementary_divisors(a) -> list[int]:
    D, _, _ = smith_normal_form(a)
    return [D[i][i] for i in range(min(len(D), len(D[0]) if D else 0)) if D[i][i] != 0]


def integer_kernel(a) -> list[list[int]]:
    """A Z-basis (as rows) of ``{x in Z^n : A x = 0}``."""
    D, _, V = smith_normal_form(a)
    n = len(V)
    r = sum(1 for i in range(min(len(D), n)) if D[i][i] != 0)
    return [[V[i][j] for i in range(n)] for j in range(r, n)]


def solve_integer(a, b) -> list[int] | None:
    """Some integer ``x`` with ``A x = b``, or None."""
    D, U, V = smith_normal_form(a)
    Ub = [sum(u * y for u, y in zip(row, b)) for row in U]
    m, n = len(D), len(V)
    y = [0] * n
    for i in range(m):
        d = D[i][i] if i < n else 0
        if d == 0:
            if Ub[i] != 0:
                return None
        else:
            if Ub[i] % d:
                return None
            y[i] = Ub[i] // d
    return [sum(V[i][j] * y[j] for j in range(n)) for i in range(n)]
