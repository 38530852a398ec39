"""Exact linear algebra over duck-typed fields, plus numeric signatures.

The elimination routines accept matrices as lists of row lists whose
entries share a field: Fractions, cyclotomic elements, rational functions
or anything else supporting +, -, *, /, bool (nonzero test).  Nothing here
mutates its arguments.

``bareiss_rank``/``bareiss_det`` work fraction-free over an integral
domain given an exact-division callback, which keeps polynomial matrices
cheap (no gcds).  ``hermitian_signature`` pins the nullity exactly and
only uses floating point to split the nonzero spectrum by sign.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = [
    "matrix_rank",
    "solve_system",
    "kernel_basis",
    "in_column_span",
    "solve_linear",
    "bareiss_rank",
    "bareiss_det",
    "hermitian_signature",
    "smith_invariants",
]


def _clone(matrix):
    return [list(row) for row in matrix]


def _echelonize(m):
    """Reduced row echelon form in place; returns the list of pivot columns."""
    if not m:
        return []
    ncols = len(m[0])
    pivots = []
    rank = 0
    for col in range(ncols):
        pivot_row = None
        for r in range(rank, len(m)):
            if m[r][col]:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        m[rank], m[pivot_row] = m[pivot_row], m[rank]
        inv = m[rank][col]
        m[rank] = [x / inv for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col]:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        pivots.append(col)
        rank += 1
        if rank == len(m):
            break
    return pivots


def matrix_rank(matrix) -> int:
    """Rank of a matrix over the entries' field."""
    m = _clone(matrix)
    return len(_echelonize(m))


def solve_system(matrix, rhs):
    """One solution x of matrix @ x = rhs, or None when inconsistent.

    Free coordinates are set to zero, so when a coordinate of the solution
    is forced (its column is independent of the others), the returned value
    in that slot is the forced one.
    """
    if not matrix:
        return None if any(bool(v) for v in rhs) else []
    ncols = len(matrix[0])
    aug = [list(row) + [val] for row, val in zip(matrix, rhs)]
    pivots = _echelonize(aug)
    if ncols in pivots:
        return None
    zero = _zero_of(matrix, rhs)
    solution = [zero] * ncols
    for r, col in enumerate(pivots):
        solution[col] = aug[r][ncols]
    return solution


def kernel_basis(matrix):
    """A basis of the right kernel (list of column vectors)."""
    if not matrix:
        return []
    ncols = len(matrix[0])
    m = _clone(matrix)
    pivots = _echelonize(m)
    pivot_set = set(pivots)
    free_cols = [c for c in range(ncols) if c not in pivot_set]
    zero = _zero_of(matrix, None)
    one = _one_of(matrix)
    basis = []
    for free in free_cols:
        vec = [zero] * ncols
        vec[free] = one
        for r, col in enumerate(pivots):
            vec[col] = zero - m[r][free]
        basis.append(vec)
    return basis


def in_column_span(matrix, vector) -> bool:
    """Whether ``vector`` lies in the span of the matrix columns."""
    return solve_system(matrix, vector) is not None


def solve_linear(matrix, rhs):
    """Full linear-system report: (in_image, solution_or_None, kernel_basis)."""
    solution = solve_system(matrix, rhs)
    return solution is not None, solution, kernel_basis(matrix)


def _zero_of(matrix, rhs):
    for row in matrix:
        for x in row:
            return x - x
    if rhs is not None:
        for x in rhs:
            return x - x
    return Fraction(0)


def _one_of(matrix):
    for row in matrix:
        for x in row:
            if x:
                return x / x
    return Fraction(1)


# -- fraction-free elimination ------------------------------------------------


def _default_divide(a, b):
    return a / b


def bareiss_rank(matrix, divide=None) -> int:
    """Rank via fraction-free Gaussian elimination.

    ``divide(a, b)`` must implement exact division in the entry domain;
    rational-style true division is the default.
    """
    if not matrix:
        return 0
    divide = divide or _default_divide
    m = _clone(matrix)
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = None
    for col in range(ncols):
        pivot_row = None
        for r in range(rank, nrows):
            if m[r][col]:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        m[rank], m[pivot_row] = m[pivot_row], m[rank]
        pivot = m[rank][col]
        for r in range(rank + 1, nrows):
            for c in range(ncols):
                if c == col:
                    continue
                value = m[r][c] * pivot - m[r][col] * m[rank][c]
                if prev is not None and value:
                    value = divide(value, prev)
                elif prev is not None:
                    value = value - value
                m[r][c] = value
            m[r][col] = m[r][col] - m[r][col]
        prev = pivot
        rank += 1
        if rank == nrows:
            break
    return rank


def bareiss_det(matrix, divide=None):
    """Determinant of a square matrix by the Bareiss one-step method."""
    n = len(matrix)
    if n == 0:
        return Fraction(1)
    if any(len(row) != n for row in matrix):
        raise ValueError("determinant of a non-square matrix")
    divide = divide or _default_divide
    m = _clone(matrix)
    sign = 1
    prev = None
    for k in range(n - 1):
        if not m[k][k]:
            swap = None
            for r in range(k + 1, n):
                if m[r][k]:
                    swap = r
                    break
            if swap is None:
                return m[k][k] - m[k][k]
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                value = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                if prev is not None and value:
                    value = divide(value, prev)
                elif prev is not None:
                    value = value - value
                m[i][j] = value
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign > 0 else -det


# -- hermitian signature -------------------------------------------------------


def hermitian_signature(matrix, tol: float = 1e-9):
    """Signature and nullity of a hermitian matrix with exact entries.

    Entries may be ints, Fractions or cyclotomic elements.  The nullity is
    computed by exact elimination; eigenvalues only decide the sign split
    of the provably-nonzero part, and the two computations must agree on
    how many eigenvalues vanish (otherwise the tolerance is unusable and a
    ValueError is raised).

    Returns a pair (signature, nullity).
    """
    import numpy as np

    n = len(matrix)
    if n == 0:
        return 0, 0
    if any(len(row) != n for row in matrix):
        raise ValueError("signature of a non-square matrix")
    exact_rank = matrix_rank(matrix)
    nullity = n - exact_rank
    numeric = np.empty((n, n), dtype=complex)
    for i in range(n):
        for j in range(n):
            numeric[i, j] = _to_complex(matrix[i][j])
    if np.max(np.abs(numeric - numeric.conj().T)) > tol:
        raise ValueError("matrix is not hermitian within tolerance")
    eigs = np.linalg.eigvalsh(numeric)
    pos = int(np.sum(eigs > tol))
    neg = int(np.sum(eigs < -tol))
    if pos + neg != exact_rank:
        raise ValueError(
            f"numeric spectrum ({pos} positive, {neg} negative) disagrees with "
            f"the exact rank {exact_rank}; tolerance {tol} is not separating"
        )
    return pos - neg, nullity


def _to_complex(x) -> complex:
    if isinstance(x, (int, float, Fraction)):
        return complex(float(x))
    if isinstance(x, complex):
        return x
    return x.to_complex()


# -- integer normal form --------------------------------------------------------


def smith_invariants(matrix) -> list[int]:
    """Nonzero invariant factors of an integer matrix (divisibility chain).

    Classic pivot-reduction Smith algorithm; fine for the small matrices
    seen here.  Returns nonnegative integers d_1 | d_2 | ... with zeros
    stripped (the count of zeros is recoverable from the rank).
    """
    m = [[int(x) for x in row] for row in matrix]
    if not m or not m[0]:
        return []
    rows, cols = len(m), len(m[0])
    invariants = []
    top = 0
    while top < min(rows, cols):
        # find a nonzero entry to pivot at (top, top)
        best = None
        for i in range(top, rows):
            for j in range(top, cols):
                if m[i][j] and (best is None or abs(m[i][j]) < abs(m[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        m[top], m[i] = m[i], m[top]
        for row in m:
            row[top], row[j] = row[j], row[top]
        while True:
            # clear the pivot column
            dirty = False
            for i in range(top + 1, rows):
                if m[i][top]:
                    q = m[i][top] // m[top][top]
                    for c in range(top, cols):
                        m[i][c] -= q * m[top][c]
                    if m[i][top]:
                        m[top], m[i] = m[i], m[top]
                        dirty = True
            # clear the pivot row
            for j in range(top + 1, cols):
                if m[top][j]:
                    q = m[top][j] // m[top][top]
                    for r in range(top, rows):
                        m[r][j] -= q * m[r][top]
                    if m[top][j]:
                        for row in m:
                            row[top], row[j] = row[j], row[top]
                        dirty = True
            if not dirty:
                break
        # enforce divisibility of the remaining block by the pivot
        pivot = abs(m[top][top])
        offender = None
        for i in range(top + 1, rows):
            for j in range(top + 1, cols):
                if m[i][j] % pivot:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            for c in range(top, cols):
                m[top][c] += m[offender][c]
            continue
        invariants.append(pivot)
        top += 1
    return invariants
