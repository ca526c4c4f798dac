"""Exact linear algebra over Fraction: solving, determinants, char polys.

Every routine takes and returns fractions.Fraction entries; there is no
floating point anywhere in the package.
"""

from __future__ import annotations

from fractions import Fraction

Q = Fraction

Matrix = list[list[Fraction]]


def qmat(rows) -> Matrix:
    return [[Q(x) for x in row] for row in rows]


def identity(n: int) -> Matrix:
    return [[Q(1) if i == j else Q(0) for j in range(n)] for i in range(n)]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n, k, m = len(a), len(b), len(b[0])
    out = [[Q(0)] * m for _ in range(n)]
    for i in range(n):
        ai = a[i]
        for t in range(k):
            x = ai[t]
            if x:
                bt = b[t]
                row = out[i]
                for j in range(m):
                    row[j] += x * bt[j]
    return out


def mat_vec(a: Matrix, v: list[Fraction]) -> list[Fraction]:
    return [sum((row[j] * v[j] for j in range(len(v))), Q(0)) for row in a]


def trace(a: Matrix) -> Fraction:
    return sum((a[i][i] for i in range(len(a))), Q(0))


def solve(a_rows: Matrix, b: list[Fraction]) -> list[Fraction] | None:
    """One exact solution of A x = b, or None if inconsistent.

    Free variables (if any) are set to zero.  A is given by rows and need
    not be square.
    """
    m = len(a_rows)
    n = len(a_rows[0]) if m else 0
    aug = [[Q(x) for x in row] + [Q(b[i])] for i, row in enumerate(a_rows)]
    pivots: list[tuple[int, int]] = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, m) if aug[i][c] != 0), None)
        if p is None:
            continue
        aug[r], aug[p] = aug[p], aug[r]
        pv = aug[r][c]
        aug[r] = [x / pv for x in aug[r]]
        for i in range(m):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append((r, c))
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if aug[i][n] != 0:
            return None
    x = [Q(0)] * n
    for i, c in pivots:
        x[c] = aug[i][n]
    return x


def rank(a_rows: Matrix) -> int:
    m = len(a_rows)
    if m == 0:
        return 0
    n = len(a_rows[0])
    a = [[Q(x) for x in row] for row in a_rows]
    r = 0
    for c in range(n):
        p = next((i for i in range(r, m) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        pv = a[r][c]
        for i in range(r + 1, m):
            if a[i][c] != 0:
                f = a[i][c] / pv
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == m:
            break
    return r


def char_poly(a: Matrix) -> list[Fraction]:
    """Coefficients [1, c1, ..., cn] of det(xI - A), highest degree first.

    Faddeev-LeVerrier; exact for Fraction input.
    """
    n = len(a)
    coeffs = [Q(1)]
    m = identity(n)
    for k in range(1, n + 1):
        am = mat_mul(a, m)
        c = -trace(am) / k
        coeffs.append(c)
        m = [[am[i][j] + (c if i == j else 0) for j in range(n)] for i in range(n)]
    return coeffs


def real_rooted_sign_counts(coeffs: list[Fraction]) -> tuple[int, int, int]:
    """(positive, zero, negative) root counts of a poly known to be real-rooted.

    Zero roots are the trailing zero coefficients; positive roots are the
    Descartes sign variations of the remaining sequence (exact for
    real-rooted polynomials).
    """
    n = len(coeffs) - 1
    cs = list(coeffs)
    zero = 0
    while cs and cs[-1] == 0:
        cs.pop()
        zero += 1
    signs = [1 if c > 0 else -1 for c in cs if c != 0]
    pos = sum(1 for i in range(len(signs) - 1) if signs[i] != signs[i + 1])
    return pos, zero, n - zero - pos
