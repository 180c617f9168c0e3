"""Exact integer linear algebra.

Everything here works on plain Python integers, so there is no overflow and
no rounding anywhere.  The central routine is an integer row echelon form
obtained by unimodular row operations (Euclidean pivoting); kernels, ranks
and lattice membership all reduce to it.
"""

from __future__ import annotations


def row_echelon(rows: list[list[int]], pivot_cols: int | None = None):
    """Reduce ``rows`` to integer row echelon form in place-ish.

    Only columns ``< pivot_cols`` are eligible as pivots (``None`` means all).
    Returns ``(echelon_rows, pivots)`` where ``pivots`` is the list of pivot
    column indices, one per leading row.  Row operations are unimodular, so
    the Z-span of the rows is preserved.
    """
    work = [list(r) for r in rows]
    if not work:
        return [], []
    ncols = len(work[0])
    limit = ncols if pivot_cols is None else pivot_cols
    pivots = []
    top = 0
    for col in range(limit):
        # Euclid on the entries of this column below `top` until one remains.
        while True:
            live = [i for i in range(top, len(work)) if work[i][col] != 0]
            if len(live) <= 1:
                break
            live.sort(key=lambda i: abs(work[i][col]))
            base = live[0]
            for i in live[1:]:
                q = work[i][col] // work[base][col]
                if q:
                    work[i] = [a - q * b for a, b in zip(work[i], work[base])]
        live = [i for i in range(top, len(work)) if work[i][col] != 0]
        if not live:
            continue
        i = live[0]
        work[top], work[i] = work[i], work[top]
        if work[top][col] < 0:
            work[top] = [-a for a in work[top]]
        pivots.append(col)
        top += 1
    # Drop all-zero rows beyond the echelon body only when every column was
    # eligible; with restricted pivots the tail rows carry information.
    if pivot_cols is None:
        work = work[:top]
    return work, pivots


def matrix_rank(rows) -> int:
    ech, pivots = row_echelon([list(r) for r in rows])
    return len(pivots)


def kernel_basis(rows) -> list[list[int]]:
    """Z-basis of {x : M x = 0} for the integer matrix with the given rows.

    Standard transpose-augmentation: echelonize [M^T | I] pivoting only on
    the M^T block; rows whose head vanishes have tails spanning the kernel
    lattice.
    """
    rows = [list(r) for r in rows]
    if not rows:
        return []
    nrows = len(rows)
    ncols = len(rows[0])
    aug = []
    for j in range(ncols):
        aug.append([rows[i][j] for i in range(nrows)] + [1 if k == j else 0 for k in range(ncols)])
    ech, pivots = row_echelon(aug, pivot_cols=nrows)
    tails = [r[nrows:] for r in ech if all(a == 0 for a in r[:nrows])]
    basis, _ = row_echelon(tails)
    return basis


def lattice_contains(basis: list[list[int]], vector) -> bool:
    """Whether ``vector`` lies in the Z-span of ``basis``.

    ``basis`` need not be echelonized; it is reduced here.
    """
    ech, pivots = row_echelon([list(r) for r in basis])
    v = list(vector)
    for row, col in zip(ech, pivots):
        if v[col] != 0:
            q, r = divmod(v[col], row[col])
            if r != 0:
                return False
            v = [a - q * b for a, b in zip(v, row)]
    return all(a == 0 for a in v)


def lattices_equal(basis_a, basis_b) -> bool:
    """Mutual membership in both directions."""
    return all(lattice_contains(basis_b, v) for v in basis_a) and all(
        lattice_contains(basis_a, v) for v in basis_b
    )


def dot(u, v) -> int:
    return sum(a * b for a, b in zip(u, v))
