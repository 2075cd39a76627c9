"""Small exact linear algebra helpers over the integers and rationals.

Vectors are tuples, matrices are tuples of row tuples.  Everything here is
pure and allocation-light; sizes never exceed the rank of a simple Lie
group, so clarity wins over asymptotics.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

IntVec = tuple[int, ...]
IntMatrix = tuple[tuple[int, ...], ...]


def identity_matrix(n: int) -> IntMatrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_vec(mat: Sequence[Sequence], vec: Sequence) -> tuple:
    return tuple(sum(row[j] * vec[j] for j in range(len(vec))) for row in mat)


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> tuple:
    n, k, m = len(a), len(b), len(b[0])
    return tuple(
        tuple(sum(a[i][t] * b[t][j] for t in range(k)) for j in range(m))
        for i in range(n)
    )


def transpose(mat: Sequence[Sequence]) -> tuple:
    return tuple(zip(*[tuple(row) for row in mat]))


def vec_add(u: Sequence, v: Sequence) -> tuple:
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Sequence, v: Sequence) -> tuple:
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c, v: Sequence) -> tuple:
    return tuple(c * a for a in v)


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def det(mat: Sequence[Sequence]) -> Fraction:
    """Exact determinant by fraction-free row reduction."""
    n = len(mat)
    if n == 0:
        return Fraction(1)
    a = [[Fraction(x) for x in row] for row in mat]
    sign = 1
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            sign = -sign
        for r in range(col + 1, n):
            factor = a[r][col] / a[col][col]
            a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
    result = Fraction(sign)
    for i in range(n):
        result *= a[i][i]
    return result


def solve(mat: Sequence[Sequence], rhs: Sequence) -> tuple[Fraction, ...]:
    """Solve a nonsingular square rational system exactly."""
    n = len(mat)
    a = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(mat)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[pivot] = a[pivot], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                factor = a[r][col]
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
    return tuple(a[i][n] for i in range(n))


def invert(mat: Sequence[Sequence]) -> tuple[tuple[Fraction, ...], ...]:
    """Exact inverse of a nonsingular square rational matrix."""
    n = len(mat)
    cols = [solve(mat, tuple(1 if i == j else 0 for i in range(n))) for j in range(n)]
    return transpose(cols)


def invert_unimodular(mat: Sequence[Sequence[int]]) -> IntMatrix:
    """Inverse of an integer matrix with determinant +-1, as integers."""
    inv = invert(mat)
    out = tuple(tuple(int(x) for x in row) for row in inv)
    for row, orig in zip(out, inv):
        for x, y in zip(row, orig):
            if x != y:
                raise ValueError("matrix is not unimodular")
    return out


def smith_normal_form(mat: Sequence[Sequence[int]]) -> tuple[IntVec, IntMatrix, IntMatrix]:
    """Diagonalize an integer matrix by unimodular row and column operations.

    Returns (divisors, U, V) with U * mat * V diagonal, diagonal entries
    nonnegative and each dividing the next.  U and V are unimodular.
    """
    n = len(mat)
    m = len(mat[0]) if n else 0
    a = [list(row) for row in mat]
    u = [list(row) for row in identity_matrix(n)]
    v = [list(row) for row in identity_matrix(m)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):
        for row in a:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    for t in range(min(n, m)):
        while True:
            # move a nonzero entry of the trailing block to (t, t)
            pos = next(
                ((i, j) for i in range(t, n) for j in range(t, m) if a[i][j] != 0),
                None,
            )
            if pos is None:
                break
            if pos[0] != t:
                swap_rows(t, pos[0])
            if pos[1] != t:
                swap_cols(t, pos[1])
            # euclidean reduction of row t and column t
            reduced = True
            for i in range(t + 1, n):
                if a[i][t] != 0:
                    q = a[i][t] // a[t][t]
                    add_row(i, t, -q)
                    if a[i][t] != 0:
                        swap_rows(t, i)
                        reduced = False
            for j in range(t + 1, m):
                if a[t][j] != 0:
                    q = a[t][j] // a[t][t]
                    add_col(j, t, -q)
                    if a[t][j] != 0:
                        swap_cols(t, j)
                        reduced = False
            if not reduced:
                continue
            # pivot must divide every remaining entry
            offender = next(
                (
                    (i, j)
                    for i in range(t + 1, n)
                    for j in range(t + 1, m)
                    if a[i][j] % a[t][t] != 0
                ),
                None,
            )
            if offender is None:
                break
            add_row(t, offender[0], 1)

    for t in range(min(n, m)):
        if a[t][t] < 0:
            negate_row(t)

    divisors = tuple(a[t][t] for t in range(min(n, m)))
    return divisors, tuple(map(tuple, u)), tuple(map(tuple, v))
