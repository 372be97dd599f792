"""
src.models.generator

================================================================================
Generators of the Tame Group
================================================================================

Overview
--------
The tame group is generated by two kinds of polynomial automorphisms of
4-space:

- Orthogonal: a linear map whose 4x4 rational matrix M preserves the
  quadratic form q = x1*x4 - x2*x3, i.e. MᵀQM = Q
- Elementary: (x1, x2 + x1*P, x3, x4 + x3*P) with P a polynomial in x1 and
  x3 only

Both kinds are invertible by construction: M⁻¹ = A·Mᵀ·A with A = 2Q (an
involution), and the elementary map with -P is the inverse of the one with P.

The constructors here are trusting; validation lives in
`src.services.tame_group_service.make_generator`.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Optional, Tuple

from src.algebra.linalg import matmul, transpose
from src.algebra.polymap import PolyMap4, linear_map
from src.algebra.polynomial import GroundPoly
from src.config.constants import Q_GRAM

MatrixRows = Tuple[Tuple[Fraction, ...], ...]

# 2Q: swaps x1<->x4 and x2<->x3 with a sign on the middle pair.
Q_INVOLUTION: MatrixRows = tuple(tuple(2 * x for x in row) for row in Q_GRAM)


@dataclass(frozen=True)
class Generator:
    """
    One tame generator.

    :param kind: ``"orthogonal"`` or ``"elementary"``.
    :type kind: str
    :param name: Short name used when rendering words.
    :type name: str
    :param matrix: The 4x4 matrix of an orthogonal generator.
    :type matrix: Optional[MatrixRows]
    :param polynomial: The polynomial P of an elementary generator.
    :type polynomial: Optional[GroundPoly]
    """

    kind: str
    name: str
    matrix: Optional[MatrixRows] = None
    polynomial: Optional[GroundPoly] = field(default=None)

    @cached_property
    def forward(self) -> PolyMap4:
        if self.kind == "orthogonal":
            return linear_map(self.matrix)
        x1, x2, x3, x4 = GroundPoly.variables()
        p = self.polynomial
        return PolyMap4((x1, x2 + x1 * p, x3, x4 + x3 * p))

    @cached_property
    def inverse(self) -> PolyMap4:
        if self.kind == "orthogonal":
            return linear_map(inverse_orthogonal(self.matrix))
        x1, x2, x3, x4 = GroundPoly.variables()
        p = self.polynomial
        return PolyMap4((x1, x2 - x1 * p, x3, x4 - x3 * p))

    def map_for(self, sign: int) -> PolyMap4:
        return self.forward if sign > 0 else self.inverse

    def render(self, sign: int = 1) -> str:
        return self.name if sign > 0 else f"{self.name}^-1"


def inverse_orthogonal(matrix: MatrixRows) -> MatrixRows:
    """
    Inverse of a q-orthogonal matrix, A·Mᵀ·A with A = 2Q.

    :param matrix: A matrix satisfying MᵀQM = Q.
    :type matrix: MatrixRows
    :return: Its inverse.
    :rtype: MatrixRows
    """
    product = matmul(matmul(Q_INVOLUTION, transpose(matrix)), Q_INVOLUTION)
    return tuple(tuple(row) for row in product)
