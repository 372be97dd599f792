"""
src.algebra.linalg

================================================================================
Exact Linear Algebra over the Rationals
================================================================================

Overview
--------
Gauss-Jordan elimination on `Fraction` matrices, plus the coefficient-space
view of polynomials it is mostly used for: a list of polynomials becomes a
matrix whose columns are monomials in decreasing graded-lex order, so the
reduced row echelon form of that matrix is a canonical basis of the span
with leading monomials as large as possible.

Used by orbit-vertex canonicalisation (type-2 spans, type-3 bucket keys)
and the solve-then-verify equality test of type-3 vertices.
"""

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from src.algebra import monomials
from src.algebra.monomials import Monomial
from src.algebra.polynomial import GroundPoly
from src.exceptions.custom_exceptions import AlgebraError

Matrix = List[List[Fraction]]


def to_matrix(rows: Sequence[Sequence[object]]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def transpose(m: Sequence[Sequence[Fraction]]) -> Matrix:
    return [list(col) for col in zip(*m)]


def matmul(a: Sequence[Sequence[Fraction]], b: Sequence[Sequence[Fraction]]) -> Matrix:
    if a and len(a[0]) != len(b):
        raise AlgebraError("Matrix shapes do not match", details={"left_cols": len(a[0]), "right_rows": len(b)})
    cols = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in cols] for row in a]


def rref(rows: Sequence[Sequence[object]]) -> Tuple[Matrix, List[int]]:
    """
    Reduced row echelon form by Gauss-Jordan elimination.

    :param rows: Matrix rows (any values accepted by `Fraction`).
    :type rows: Sequence[Sequence[object]]
    :return: The non-zero rows of the reduced form and their pivot columns.
    :rtype: Tuple[Matrix, List[int]]
    """
    m = to_matrix(rows)
    if not m:
        return [], []
    n_cols = len(m[0])
    pivots: List[int] = []
    r = 0
    for col in range(n_cols):
        pivot_row = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        lead = m[r][col]
        m[r] = [x / lead for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                factor = m[i][col]
                m[i] = [x - factor * y for x, y in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence[object]]) -> int:
    return len(rref(rows)[1])


def solve_unique(coefficients: Sequence[Sequence[object]], rhs: Sequence[object]) -> Optional[List[Fraction]]:
    """
    Solve ``coefficients · x = rhs`` when the solution is unique.

    :param coefficients: m×n matrix of full column rank.
    :type coefficients: Sequence[Sequence[object]]
    :param rhs: Right-hand side of length m.
    :type rhs: Sequence[object]
    :raises AlgebraError: If the columns are dependent (solution not unique).
    :return: The solution, or None if the system is inconsistent.
    :rtype: Optional[List[Fraction]]
    """
    if len(coefficients) != len(rhs):
        raise AlgebraError("Right-hand side length does not match", details={"rows": len(coefficients)})
    n = len(coefficients[0]) if coefficients else 0
    augmented = [list(row) + [b] for row, b in zip(coefficients, rhs)]
    reduced, pivots = rref(augmented)
    if n in pivots:
        return None
    if len(pivots) < n:
        raise AlgebraError("Linear system has no unique solution", details={"rank": len(pivots), "unknowns": n})
    return [row[n] for row in reduced]


def monomial_columns(polys: Sequence[GroundPoly]) -> List[Monomial]:
    support = set()
    for p in polys:
        support.update(p.support())
    return sorted(support, key=monomials.grlex_key, reverse=True)


def coefficient_rows(polys: Sequence[GroundPoly], columns: Sequence[Monomial]) -> Matrix:
    return [[p.coefficient_of(m) for m in columns] for p in polys]


def span_basis(polys: Sequence[GroundPoly]) -> Tuple[GroundPoly, ...]:
    """
    Canonical basis of the linear span of ``polys``.

    Rows of the reduced echelon form over graded-lex-descending monomial
    columns; equal spans give equal tuples.

    :param polys: Rational polynomials.
    :type polys: Sequence[GroundPoly]
    :return: The basis polynomials, leading monomials strictly decreasing.
    :rtype: Tuple[GroundPoly, ...]
    """
    columns = monomial_columns(polys)
    if not columns:
        return ()
    reduced, _ = rref(coefficient_rows(polys, columns))
    return tuple(GroundPoly(dict(zip(columns, row))) for row in reduced)


def poly_rank(polys: Sequence[GroundPoly]) -> int:
    columns = monomial_columns(polys)
    if not columns:
        return 0
    return rank(coefficient_rows(polys, columns))
