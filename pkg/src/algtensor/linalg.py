"""Exact linear algebra over Q or a number field.

Rows are kept sparse ({column: value}) because flattenings of structured
tensors are mostly zeros. Rational matrices are moved to plain Fractions
first, which is much faster than degree-one field elements.
"""

from __future__ import annotations

from fractions import Fraction

from .numberfield import AlgebraicNumber


def _scalarize(values):
    vals = list(values)
    if all(not isinstance(v, AlgebraicNumber) or v.is_rational() for v in vals):
        return [v.coeffs[0] if isinstance(v, AlgebraicNumber) else Fraction(v) for v in vals], True
    return vals, False


def rank(matrix) -> int:
    """Rank of a 2-d array-like of field elements."""
    rows = [list(r) for r in matrix]
    if not rows:
        return 0
    flat = [v for r in rows for v in r]
    _, rational = _scalarize(flat)
    if rational:
        rows = [[v.coeffs[0] if isinstance(v, AlgebraicNumber) else Fraction(v) for v in r] for r in rows]
    work = [{j: v for j, v in enumerate(r) if v} for r in rows]
    work = [r for r in work if r]
    rk = 0
    while work:
        # pivot on the sparsest row to limit fill-in
        work.sort(key=len)
        piv = work.pop(0)
        col = min(piv)
        inv = 1 / piv[col]
        rk += 1
        nxt = []
        for r in work:
            c = r.get(col)
            if c:
                f = c * inv
                for j, v in piv.items():
                    w = r.get(j, 0) - f * v
                    if w:
                        r[j] = w
                    else:
                        r.pop(j, None)
            if r:
                nxt.append(r)
        work = nxt
    return rk


def solve(A, b):
    """One solution x of A x = b (lists of field elements), or None if inconsistent."""
    out = solve_many(A, [b])
    return None if out is None else out[0]


def solve_many(A, rhs):
    """Solve A x = b for every b in ``rhs`` with one elimination; None if any is inconsistent."""
    m = len(A)
    n = len(A[0]) if m else 0
    k = len(rhs)
    aug = [list(A[i]) + [b[i] for b in rhs] for i in range(m)]
    flat = [v for r in aug for v in r]
    _, rational = _scalarize(flat)
    if rational:
        aug = [[v.coeffs[0] if isinstance(v, AlgebraicNumber) else Fraction(v) for v in r] for r in aug]
    pivots = []
    row = 0
    for col in range(n):
        p = next((i for i in range(row, m) if aug[i][col]), None)
        if p is None:
            continue
        aug[row], aug[p] = aug[p], aug[row]
        inv = 1 / aug[row][col]
        aug[row] = [v * inv for v in aug[row]]
        for i in range(m):
            if i != row and aug[i][col]:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[row])]
        pivots.append(col)
        row += 1
        if row == m:
            break
    for i in range(row, m):
        if any(aug[i][n + j] for j in range(k)):
            return None
    out = []
    for j in range(k):
        zero = 0 * aug[0][n + j] if m else 0
        x = [zero] * n
        for i, col in enumerate(pivots):
            x[col] = aug[i][n + j]
        out.append(x)
    return out
