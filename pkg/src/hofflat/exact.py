"""Exact linear algebra over the rationals and the integers.

Every threshold decision in hofflat (smallest eigenvalue at least -m, lattice
discriminants, shortest vectors) goes through this module, so no floating
comparison ever decides a verdict.
"""

from fractions import Fraction
from typing import List, NamedTuple, Sequence, Tuple, Union

from sympy import Matrix, Rational
from typing_extensions import TypeAlias

Number: TypeAlias = Union[int, Fraction]
MatrixLike: TypeAlias = Sequence[Sequence[Number]]
FractionMatrix: TypeAlias = List[List[Fraction]]


class LDLT(NamedTuple):
    """Result of a rational LDL^T factorization.

    ``order`` lists the pivot indices in elimination order and ``pivots`` the
    matching entries of D. ``lower[i][k]`` is the multiplier of row ``i`` in
    step ``k`` (1 on the pivot itself, 0 for rows eliminated earlier), so that
    ``A[i][j] == sum(lower[i][k] * lower[j][k] * pivots[k])`` whenever the
    matrix is positive semidefinite.
    """

    order: Tuple[int, ...]
    pivots: Tuple[Fraction, ...]
    lower: Tuple[Tuple[Fraction, ...], ...]
    is_psd: bool

    @property
    def rank(self) -> int:
        return len(self.pivots)


def to_fractions(matrix: MatrixLike) -> FractionMatrix:
    """Copy a square matrix into fresh Fraction rows"""
    return [[Fraction(value) for value in row] for row in matrix]


def rational_ldlt(matrix: MatrixLike, pivoting: bool = True) -> LDLT:
    """Factor a symmetric matrix as L D L^T with exact arithmetic.

    With ``pivoting`` the largest remaining diagonal entry is eliminated first.
    The factorization stops at the first sign of indefiniteness: a negative
    remaining diagonal, or a zero remaining diagonal above a nonzero residual
    row. Without pivoting the elimination runs in index order and stops at the
    first nonpositive pivot; this is meant for Gram matrices of a basis.
    """
    a = to_fractions(matrix)
    n = len(a)
    remaining = list(range(n))
    order: List[int] = []
    pivots: List[Fraction] = []
    columns: List[List[Fraction]] = []

    while remaining:
        if pivoting:
            p = max(remaining, key=lambda i: (a[i][i], -i))
        else:
            p = remaining[0]
        d = a[p][p]
        if d <= 0:
            residual_zero = all(a[i][j] == 0 for i in remaining for j in remaining)
            return LDLT(
                tuple(order),
                tuple(pivots),
                _transpose(columns, n),
                d == 0 and residual_zero,
            )
        remaining.remove(p)
        column = [Fraction(0)] * n
        column[p] = Fraction(1)
        for i in remaining:
            column[i] = a[i][p] / d
        for i in remaining:
            li = column[i]
            if li == 0:
                continue
            row_i = a[i]
            row_p = a[p]
            for j in remaining:
                row_i[j] -= li * row_p[j]
        order.append(p)
        pivots.append(d)
        columns.append(column)

    return LDLT(tuple(order), tuple(pivots), _transpose(columns, n), True)


def _transpose(columns: List[List[Fraction]], n: int) -> Tuple[Tuple[Fraction, ...], ...]:
    return tuple(tuple(column[i] for column in columns) for i in range(n))


def is_positive_semidefinite(matrix: MatrixLike) -> bool:
    """Exact PSD test of a symmetric rational matrix"""
    return rational_ldlt(matrix).is_psd


def _sympy_matrix(matrix: MatrixLike) -> Matrix:
    a = to_fractions(matrix)
    return Matrix(
        len(a), len(a), [Rational(x.numerator, x.denominator) for row in a for x in row]
    )


def _from_rational(value: Rational) -> Fraction:
    return Fraction(int(value.p), int(value.q))


def determinant(matrix: MatrixLike) -> Fraction:
    """Determinant computed by sympy over the rationals"""
    if not matrix:
        return Fraction(1)
    return _from_rational(Rational(_sympy_matrix(matrix).det(method="bareiss")))


def inverse(matrix: MatrixLike) -> FractionMatrix:
    """Rational inverse; raises ZeroDivisionError if singular"""
    if not matrix:
        return []
    m = _sympy_matrix(matrix)
    if m.det(method="bareiss") == 0:
        raise ZeroDivisionError("matrix is singular")
    inv = m.inv()
    return [[_from_rational(Rational(inv[i, j])) for j in range(m.cols)] for i in range(m.rows)]


def hermite_basis(vectors: Sequence[Sequence[int]]) -> List[List[int]]:
    """Integer row echelon form of the lattice spanned by ``vectors``.

    Rows are combined with unimodular operations only (swap, negate, add an
    integer multiple), so the returned rows are a basis of the lattice the
    input generates. Zero rows are dropped.
    """
    rows = [[int(x) for x in v] for v in vectors]
    if not rows:
        return []
    width = len(rows[0])
    top = 0
    for col in range(width):
        while True:
            live = [r for r in range(top, len(rows)) if rows[r][col] != 0]
            if not live:
                break
            best = min(live, key=lambda r: abs(rows[r][col]))
            rows[top], rows[best] = rows[best], rows[top]
            if rows[top][col] < 0:
                rows[top] = [-x for x in rows[top]]
            pivot = rows[top][col]
            done = True
            for r in range(top + 1, len(rows)):
                q = rows[r][col] // pivot
                if q:
                    rows[r] = [x - q * y for x, y in zip(rows[r], rows[top])]
                if rows[r][col] != 0:
                    done = False
            if done:
                top += 1
                break
        if top == len(rows):
            break
    return [row for row in rows[:top] if any(row)]


def gram(vectors: Sequence[Sequence[int]]) -> List[List[int]]:
    """Integer Gram matrix of integer row vectors"""
    return [[sum(x * y for x, y in zip(u, v)) for v in vectors] for u in vectors]
