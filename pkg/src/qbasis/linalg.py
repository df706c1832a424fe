"""Exact Gaussian elimination over a field, used fiber by fiber.

Matrices are lists of rows. Pivoting takes the first nonzero entry in the
column, so results are deterministic.
"""

from __future__ import annotations


def rref(rows, ncols=None):
    """Reduced row echelon form of ``rows``.

    Returns ``(reduced_rows, pivot_columns)``. The input is not modified.
    """
    a = [list(r) for r in rows]
    if ncols is None:
        ncols = len(a[0]) if a else 0
    pivots = []
    r = 0
    nrows = len(a)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((k for k in range(r, nrows) if a[k][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        if piv != 1:
            a[r] = [v / piv for v in a[r]]
        row = a[r]
        for k in range(nrows):
            if k != r:
                f = a[k][c]
                if f != 0:
                    a[k] = [u - f * v for u, v in zip(a[k], row)]
        pivots.append(c)
        r += 1
    return a, pivots


def rank(rows) -> int:
    rows = [r for r in rows if any(v != 0 for v in r)]
    if not rows:
        return 0
    return len(rref(rows)[1])


def solve_columns(columns, target, zero):
    """Solve ``sum_j c_j * columns[j] == target``.

    ``columns`` are vectors of the same length as ``target``. Returns the
    coefficient list with every free variable set to zero, or ``None`` when
    the system is inconsistent. ``zero`` is the field zero used to fill.
    """
    ncols = len(columns)
    if ncols == 0:
        return [] if all(v == 0 for v in target) else None
    augmented = [[col[i] for col in columns] + [target[i]] for i in range(len(target))]
    reduced, pivots = rref(augmented, ncols + 1)
    if pivots and pivots[-1] == ncols:
        return None
    coeffs = [zero] * ncols
    for row, c in zip(reduced, pivots):
        coeffs[c] = row[ncols]
    return coeffs
