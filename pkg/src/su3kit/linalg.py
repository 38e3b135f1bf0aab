"""Exact Gaussian elimination over any field whose elements support ``+ - * /``.

Works with ``Fraction``, :class:`GaussianRational` and :class:`SurdGaussian`
entries alike; nothing here ever rounds.
"""

from __future__ import annotations

from typing import Sequence

from .numbers import is_zero


def row_echelon(rows: Sequence[Sequence]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form of a copy of ``rows``.

    Returns ``(reduced_rows, pivot_columns)``; zero rows are dropped.
    """
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(m)):
            if not is_zero(m[i][c]):
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv if not is_zero(x) else x for x in m[r]]
        for i in range(len(m)):
            if i != r and not is_zero(m[i][c]):
                f = m[i][c]
                row_r = m[r]
                m[i] = [x - f * y if not is_zero(y) else x for x, y in zip(m[i], row_r)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    """Exact rank of a matrix given as a list of rows."""
    rows = [r for r in rows if any(not is_zero(x) for x in r)]
    if not rows:
        return 0
    return len(row_echelon(rows)[1])


def solve(a: Sequence[Sequence], b: Sequence, zero=0):
    """One exact solution of ``a x = b`` (free variables set to ``zero``), or ``None``."""
    if not a:
        return []
    ncols = len(a[0])
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    red, pivots = row_echelon(aug)
    if ncols in pivots:
        return None
    x = [zero] * ncols
    for row, c in zip(red, pivots):
        x[c] = row[ncols]
    return x


def nullspace(a: Sequence[Sequence], ncols: int | None = None, one=1, zero=0) -> list[list]:
    """Basis of the right kernel of ``a``."""
    if ncols is None:
        ncols = len(a[0])
    if not a:
        red, pivots = [], []
    else:
        red, pivots = row_echelon(a)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for row, c in zip(red, pivots):
            v[c] = -row[f]
        basis.append(v)
    return basis


def matmul(a: Sequence[Sequence], b: Sequence[Sequence], zero=0) -> list[list]:
    n, k, m = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            s = zero
            for t in range(k):
                s = s + a[i][t] * b[t][j]
            row.append(s)
        out.append(row)
    return out


def det(a: Sequence[Sequence]):
    """Exact determinant by elimination."""
    m = [list(r) for r in a]
    n = len(m)
    result = 1
    for c in range(n):
        piv = next((i for i in range(c, n) if not is_zero(m[i][c])), None)
        if piv is None:
            return 0 * m[0][0] if n else 1
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            result = -result
        result = result * m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, n):
            if not is_zero(m[i][c]):
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return result


def inverse(a: Sequence[Sequence], one=1, zero=0) -> list[list]:
    n = len(a)
    aug = [list(row) + [one if i == j else zero for j in range(n)] for i, row in enumerate(a)]
    red, pivots = row_echelon(aug)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in red]
