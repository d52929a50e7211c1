"""Fraction-free Gaussian elimination over the Laurent-polynomial ring.

One-step Bareiss elimination keeps every intermediate entry inside the ring
(each is a minor of the original matrix); back substitution divides exactly
whenever the solution is itself polynomial, which is guaranteed here by
unimodular determinants.
"""

from __future__ import annotations

from .algebra import InvariantError, LaurentPolynomial, exact_divide


class SingularMatrix(InvariantError):
    pass


def _forward(aug, n):
    """Bareiss forward pass on an augmented matrix; returns the sign of row swaps."""
    sign = 1
    prev = None
    for k in range(n):
        if aug[k][k].is_zero:
            for r in range(k + 1, n):
                if not aug[r][k].is_zero:
                    aug[k], aug[r] = aug[r], aug[k]
                    sign = -sign
                    break
            else:
                raise SingularMatrix("zero pivot column during elimination")
        pivot = aug[k][k]
        for i in range(k + 1, n):
            head = aug[i][k]
            if head.is_zero and prev is None:
                continue
            for j in range(k + 1, len(aug[i])):
                num = pivot * aug[i][j] - head * aug[k][j]
                aug[i][j] = num if prev is None else exact_divide(num, prev)
            aug[i][k] = LaurentPolynomial.zero(pivot.table)
        prev = pivot
    return sign


def bareiss_determinant(matrix) -> LaurentPolynomial:
    """Exact determinant of a square matrix of Laurent polynomials."""
    n = len(matrix)
    if n == 0:
        raise ValueError("empty matrix")
    aug = [list(row) for row in matrix]
    try:
        sign = _forward(aug, n)
    except SingularMatrix:
        return LaurentPolynomial.zero(matrix[0][0].table)
    det = aug[n - 1][n - 1]
    return det if sign == 1 else -det


def bareiss_solve(matrix, rhs):
    """Solve matrix * x = rhs exactly; returns (determinant, [x_i]).

    Raises NotDivisible if the solution is not a Laurent-polynomial vector
    and SingularMatrix if the matrix is singular.
    """
    n = len(matrix)
    if n == 0 or len(rhs) != n:
        raise ValueError("shape mismatch")
    aug = [list(row) + [rhs[i]] for i, row in enumerate(matrix)]
    sign = _forward(aug, n)
    det = aug[n - 1][n - 1]
    if det.is_zero:
        raise SingularMatrix("zero determinant")
    solution = [None] * n
    for i in range(n - 1, -1, -1):
        acc = aug[i][n]
        for j in range(i + 1, n):
            acc = acc - aug[i][j] * solution[j]
        solution[i] = exact_divide(acc, aug[i][i])
    return (det if sign == 1 else -det), solution
