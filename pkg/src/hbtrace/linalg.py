"""Exact integer linear algebra: rank, nullspace, span membership.

Forward elimination is fraction-free (Bareiss), so all intermediate values
are integers; back substitution uses exact rationals and results are scaled
back to primitive integer vectors. No floating point anywhere.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd


def _bareiss_echelon(rows: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """Row echelon form by fraction-free Gaussian elimination.

    Returns the echelon matrix and the list of pivot columns. The input is
    not modified.
    """
    M = [list(map(int, row)) for row in rows]
    m = len(M)
    n = len(M[0]) if m else 0
    pivot_cols: list[int] = []
    prev = 1
    r = 0
    for c in range(n):
        if r >= m:
            break
        p = next((i for i in range(r, m) if M[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            M[r], M[p] = M[p], M[r]
        for i in range(r + 1, m):
            for j in range(c + 1, n):
                M[i][j] = (M[r][c] * M[i][j] - M[i][c] * M[r][j]) // prev
            M[i][c] = 0
        prev = M[r][c]
        pivot_cols.append(c)
        r += 1
    return M, pivot_cols


def rank(rows: list[list[int]]) -> int:
    if not rows or not rows[0]:
        return 0
    return len(_bareiss_echelon(rows)[1])


def kernel_basis(rows: list[list[int]], ncols: int | None = None) -> list[list[int]]:
    """Primitive integer basis of the right nullspace of the matrix.

    One basis vector per free column, in increasing column order; each vector
    is scaled to integers with content 1 and positive leading entry.
    """
    if not rows:
        if ncols is None:
            return []
        basis = []
        for f in range(ncols):
            v = [0] * ncols
            v[f] = 1
            basis.append(v)
        return basis
    n = len(rows[0]) if ncols is None else ncols
    E, pivot_cols = _bareiss_echelon(rows)
    free_cols = [c for c in range(n) if c not in pivot_cols]
    basis = []
    for f in free_cols:
        x: list[Fraction] = [Fraction(0)] * n
        x[f] = Fraction(1)
        for r in range(len(pivot_cols) - 1, -1, -1):
            c = pivot_cols[r]
            s = Fraction(0)
            for j in range(c + 1, n):
                if x[j]:
                    s += Fraction(E[r][j]) * x[j]
            x[c] = -s / E[r][c]
        denom = 1
        for v in x:
            denom = denom * v.denominator // gcd(denom, v.denominator)
        ints = [int(v * denom) for v in x]
        content = 0
        for v in ints:
            content = gcd(content, v)
        if content > 1:
            ints = [v // content for v in ints]
        lead = next((v for v in ints if v != 0), 1)
        if lead < 0:
            ints = [-v for v in ints]
        basis.append(ints)
    return basis


def in_rational_span(vectors: list[list[int]], v: list[int]) -> bool:
    """Is v in the Q-span of the given integer vectors?"""
    if all(x == 0 for x in v):
        return True
    if not vectors:
        return False
    cols = list(zip(*vectors))  # vectors as columns
    base = [list(col) for col in cols]
    r0 = rank(base)
    aug = [list(col) + [vi] for col, vi in zip(cols, v)]
    return rank(aug) == r0
