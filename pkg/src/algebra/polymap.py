"""
src.algebra.polymap

================================================================================
Polynomial 4-Maps
================================================================================

Overview
--------
`PolyMap4` is an ordered 4-tuple of polynomials over one coefficient ring,
read as the map (x1, x2, x3, x4) -> (m1, m2, m3, m4). Composition follows
the usual convention: ``outer.compose(inner)`` is outer∘inner, i.e. xj in
every component of ``outer`` is replaced by component j of ``inner``.

Functions
---------
- `poly_compose(outer, inner)`
- `quadratic_form_pullback(m)`: m1*m4 - m2*m3
- `coefficient_of(p, mono)`
- `q_polynomial(ring)`: the quadratic form x1*x4 - x2*x3
- `linear_map(matrix)` / `combine(matrix, components)`: linear 4-maps and
  linear recombination of component tuples
"""

from fractions import Fraction
from typing import Iterator, List, Mapping, Sequence, Tuple, Type

from src.algebra.polynomial import GroundPoly, ParamPoly, SparsePoly, compose_all
from src.algebra.param_coeff import Scalar
from src.exceptions.custom_exceptions import AlgebraError


class PolyMap4:
    """
    Immutable 4-tuple of polynomials over a single ring.

    :param components: Exactly four polynomials of the same class.
    :type components: Sequence[SparsePoly]
    :raises AlgebraError: On wrong length or mixed rings.
    """

    __slots__ = ("_components",)

    def __init__(self, components: Sequence[SparsePoly]):
        components = tuple(components)
        if len(components) != 4:
            raise AlgebraError("A 4-map needs exactly 4 components", details={"received": len(components)})
        ring = type(components[0])
        if not isinstance(components[0], SparsePoly) or any(type(c) is not ring for c in components):
            raise AlgebraError(
                "4-map components must share one coefficient ring",
                details={"rings": [type(c).__name__ for c in components]},
            )
        self._components: Tuple[SparsePoly, ...] = components

    @classmethod
    def identity(cls, ring: Type[SparsePoly] = GroundPoly) -> "PolyMap4":
        return cls(ring.variables())

    @property
    def components(self) -> Tuple[SparsePoly, ...]:
        return self._components

    @property
    def ring(self) -> Type[SparsePoly]:
        return type(self._components[0])

    def __getitem__(self, index: int) -> SparsePoly:
        return self._components[index]

    def __iter__(self) -> Iterator[SparsePoly]:
        return iter(self._components)

    def __len__(self) -> int:
        return 4

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolyMap4):
            return NotImplemented
        return self._components == other._components

    def __hash__(self) -> int:
        return hash(self._components)

    def is_identity(self) -> bool:
        return self == PolyMap4.identity(self.ring)

    def compose(self, inner: "PolyMap4") -> "PolyMap4":
        """
        Return self∘inner.

        :param inner: Map applied first.
        :type inner: PolyMap4
        :raises AlgebraError: If the rings differ.
        :return: The composite map.
        :rtype: PolyMap4
        """
        return PolyMap4(compose_all(self._components, inner._components))

    def evaluate(self, point: Sequence[Scalar]) -> Tuple[Fraction, ...]:
        if self.ring is not GroundPoly:
            raise AlgebraError("Only rational maps can be evaluated; specialise parameters first")
        return tuple(c.evaluate(point) for c in self._components)  # type: ignore[attr-defined]

    def to_param(self) -> "PolyMap4":
        if self.ring is ParamPoly:
            return self
        return PolyMap4([c.to_param() for c in self._components])  # type: ignore[attr-defined]

    def specialize(self, values: Mapping[str, Scalar]) -> "PolyMap4":
        if self.ring is not ParamPoly:
            return self
        return PolyMap4([c.specialize(values) for c in self._components])  # type: ignore[attr-defined]

    def render(self) -> List[str]:
        return [c.render() for c in self._components]

    def __str__(self) -> str:
        return "(" + ", ".join(self.render()) + ")"

    def __repr__(self) -> str:
        return f"PolyMap4{self}"


def poly_compose(outer: PolyMap4, inner: PolyMap4) -> PolyMap4:
    return outer.compose(inner)


def q_polynomial(ring: Type[SparsePoly] = GroundPoly) -> SparsePoly:
    x1, x2, x3, x4 = ring.variables()
    return x1 * x4 - x2 * x3


def quadratic_form_pullback(m: PolyMap4) -> SparsePoly:
    """
    Pull the quadratic form q = x1*x4 - x2*x3 back along ``m``.

    :param m: Any 4-map.
    :type m: PolyMap4
    :return: ``m1*m4 - m2*m3``.
    :rtype: SparsePoly
    """
    return m[0] * m[3] - m[1] * m[2]


def coefficient_of(p: SparsePoly, mono: Sequence[int]):
    return p.coefficient_of(mono)


def combine(matrix: Sequence[Sequence[Scalar]], components: Sequence[SparsePoly]) -> Tuple[SparsePoly, ...]:
    """
    Linear recombination: entry i of the result is sum_j matrix[i][j] * components[j].

    :param matrix: Square matrix of rationals.
    :type matrix: Sequence[Sequence[Scalar]]
    :param components: Polynomials over one ring.
    :type components: Sequence[SparsePoly]
    :return: The recombined tuple.
    :rtype: Tuple[SparsePoly, ...]
    """
    ring = type(components[0])
    result = []
    for row in matrix:
        if len(row) != len(components):
            raise AlgebraError("Matrix width does not match tuple length", details={"width": len(row)})
        acc = ring.zero()
        for entry, poly in zip(row, components):
            if entry != 0:
                acc = acc + poly * Fraction(entry)
        result.append(acc)
    return tuple(result)


def linear_map(matrix: Sequence[Sequence[Scalar]], ring: Type[SparsePoly] = GroundPoly) -> PolyMap4:
    return PolyMap4(combine(matrix, ring.variables()))
