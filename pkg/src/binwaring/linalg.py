"""Small exact linear algebra over Q (row reduction, kernels, consistent solves)."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import InvariantViolation

Matrix = list[list[Fraction]]


def rref(rows: Sequence[Sequence]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the pivot columns."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    """Kernel basis, one vector per free column (in column order)."""
    if not rows:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    m, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(m, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def solve_consistent(a: Sequence[Sequence], b: Sequence) -> list[Fraction]:
    """Unique solution of an overdetermined system ``a x = b``.

    Raises :class:`InvariantViolation` if the system is inconsistent or the
    solution is not unique.
    """
    ncols = len(a[0]) if a else 0
    aug = [list(row) + [bi] for row, bi in zip(a, b)]
    m, pivots = rref(aug)
    if ncols in pivots:
        raise InvariantViolation("inconsistent linear system")
    if len(pivots) != ncols:
        raise InvariantViolation("linear system has no unique solution")
    x = [Fraction(0)] * ncols
    for row, p in zip(m, pivots):
        x[p] = row[-1]
    return x


def in_span(vectors: Sequence[Sequence], v: Sequence) -> bool:
    if not vectors:
        return not any(v)
    return rank(list(vectors) + [v]) == rank(vectors)


def solve_tall_numeric(a: Sequence[Sequence], b: Sequence) -> list:
    """Solve a consistent tall system over C by elimination with row pivoting.

    Works at the ambient mpmath precision.  Pivot rows are chosen by magnitude
    from all remaining rows, so the square subsystem actually solved is well
    conditioned; the caller checks the residual on every row.
    """
    m = [list(row) + [bi] for row, bi in zip(a, b)]
    ncols = len(a[0])
    rows = list(range(len(m)))
    order = []
    for c in range(ncols):
        piv = max(rows, key=lambda i: abs(m[i][c]))
        if not m[piv][c]:
            raise InvariantViolation("singular numeric system")
        rows.remove(piv)
        order.append(piv)
        for i in rows:
            f = m[i][c] / m[piv][c]
            if f:
                m[i] = [x - f * y for x, y in zip(m[i], m[piv])]
    x = [0] * ncols
    for c in range(ncols - 1, -1, -1):
        row = m[order[c]]
        s = row[-1] - sum(row[k] * x[k] for k in range(c + 1, ncols))
        x[c] = s / row[c]
    return x
