"""
src.models.orbit_vertex

================================================================================
Orbit Vertices of the Tame Square Complex
================================================================================

Overview
--------
Vertices of the square complex are orbits of component tuples of tame
automorphisms:

- type 1: [f1], the orbit of f1 under nonzero scalars
- type 2: [f1, f2], the orbit of (f1, f2) under GL2, i.e. the span
- type 3: [f1, f2, f3, f4], the orbit of the full tuple under O(q) acting
  by linear recombination

Types 1 and 2 have canonical forms (monic representative, reduced echelon
basis of the span). Type 3 equality is decided by solving for the unique
matrix M with v = M·u and checking MᵀQM = Q. Its hash is the reduced
echelon basis of the full span (the span key), which every O(q)-equivalent
tuple shares; it renders as the span key together with q pulled back to it,
so equal vertices print identically whichever representative was stored.

Responsibilities
----------------
- Canonicalise and compare vertices of each type
- Reject degenerate input (dependent components) with `DegenerateTuple`
- Precompose components with a 4-map (the group action)
- Render canonical polynomial strings for reports and JSON dumps
"""

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from src.algebra import monomials
from src.algebra.linalg import matmul, monomial_columns, poly_rank, solve_unique, span_basis, transpose
from src.algebra.param_coeff import render_terms
from src.algebra.polymap import PolyMap4
from src.algebra.polynomial import GroundPoly, compose_all
from src.config.constants import Q_GRAM
from src.exceptions.custom_exceptions import DegenerateTuple

SPAN_KEY_NAMES = ("e1", "e2", "e3", "e4")


class Type1Vertex:
    """
    The scalar class [f].

    :param f: Nonzero polynomial; stored monic (graded-lex leading coefficient 1).
    :type f: GroundPoly
    :raises DegenerateTuple: If ``f`` is zero.
    """

    kind = 1
    __slots__ = ("representative",)

    def __init__(self, f: GroundPoly):
        if f.is_zero():
            raise DegenerateTuple("Type-1 vertex needs a nonzero polynomial")
        self.representative: GroundPoly = f.monic()

    @property
    def components(self) -> Tuple[GroundPoly, ...]:
        return (self.representative,)

    def act(self, inverse_map: PolyMap4) -> "Type1Vertex":
        return Type1Vertex(self.representative.compose(inverse_map.components))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Type1Vertex):
            return NotImplemented
        return self.representative == other.representative

    def __hash__(self) -> int:
        return hash((1, self.representative))

    def render(self) -> str:
        return f"[{self.representative.render()}]"

    def __repr__(self) -> str:
        return f"Type1Vertex{self.render()}"


class Type2Vertex:
    """
    The span class [f1, f2], stored as its reduced echelon basis.

    :raises DegenerateTuple: If the two polynomials are dependent.
    """

    kind = 2
    __slots__ = ("basis",)

    def __init__(self, f1: GroundPoly, f2: GroundPoly):
        basis = span_basis([f1, f2])
        if len(basis) != 2:
            raise DegenerateTuple(
                "Type-2 vertex needs two independent polynomials",
                details={"f1": f1.render(), "f2": f2.render()},
            )
        self.basis: Tuple[GroundPoly, GroundPoly] = (basis[0], basis[1])

    @property
    def components(self) -> Tuple[GroundPoly, ...]:
        return self.basis

    def act(self, inverse_map: PolyMap4) -> "Type2Vertex":
        f1, f2 = compose_all(self.basis, inverse_map.components)
        return Type2Vertex(f1, f2)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Type2Vertex):
            return NotImplemented
        return self.basis == other.basis

    def __hash__(self) -> int:
        return hash((2, self.basis))

    def render(self) -> str:
        return "[" + ", ".join(p.render() for p in self.basis) + "]"

    def __repr__(self) -> str:
        return f"Type2Vertex{self.render()}"


class Type3Vertex:
    """
    The O(q)-class of a full component tuple.

    :param representative: The tuple (f1, f2, f3, f4).
    :type representative: Union[PolyMap4, Sequence[GroundPoly]]
    :raises DegenerateTuple: If the components are linearly dependent.
    """

    kind = 3
    __slots__ = ("representative", "span_key")

    def __init__(self, representative: Union[PolyMap4, Sequence[GroundPoly]]):
        tuple_ = representative if isinstance(representative, PolyMap4) else PolyMap4(representative)
        key = span_basis(tuple_.components)
        if len(key) != 4:
            raise DegenerateTuple(
                "Type-3 vertex needs four independent components",
                details={"components": tuple_.render()},
            )
        self.representative: PolyMap4 = tuple_
        self.span_key: Tuple[GroundPoly, ...] = key

    @property
    def components(self) -> Tuple[GroundPoly, ...]:
        return self.representative.components  # type: ignore[return-value]

    def act(self, inverse_map: PolyMap4) -> "Type3Vertex":
        return Type3Vertex(self.representative.compose(inverse_map))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Type3Vertex):
            return NotImplemented
        if self.span_key != other.span_key:
            return False
        return type3_equal(self, other)

    def __hash__(self) -> int:
        return hash((3, self.span_key))

    @property
    def form(self) -> Tuple[Tuple[Fraction, ...], ...]:
        """
        Gram matrix of q pulled back to the span key.

        Writing the representative as M·(b1, b2, b3, b4) over the span key,
        this is MᵀQM. Two tuples with the same span key are O(q)-equivalent
        iff their forms agree, so (span key, form) is a canonical form.

        :return: Symmetric 4x4 rational matrix.
        :rtype: Tuple[Tuple[Fraction, ...], ...]
        """
        matrix = solve_recombination(self.span_key, self.components)
        gram = [list(row) for row in Q_GRAM]
        return tuple(tuple(row) for row in matmul(matmul(transpose(matrix), gram), matrix))  # type: ignore[arg-type]

    def render_form(self) -> str:
        """The pulled-back form as a quadratic polynomial in e1..e4, e.g. ``e1*e4 - e2*e3``."""
        gram = self.form
        terms = []
        for i in range(4):
            for j in range(i, 4):
                coeff = gram[i][j] if i == j else 2 * gram[i][j]
                if coeff:
                    exps = [0, 0, 0, 0]
                    exps[i] += 1
                    exps[j] += 1
                    terms.append((tuple(exps), coeff))
        terms.sort(key=lambda term: monomials.grlex_key(term[0]), reverse=True)
        return render_terms(terms, SPAN_KEY_NAMES)

    def render(self) -> str:
        basis = ", ".join(p.render() for p in self.span_key)
        return f"[{basis} | {self.render_form()}]"

    def __repr__(self) -> str:
        return f"Type3Vertex{self.render()}"


OrbitVertex = Union[Type1Vertex, Type2Vertex, Type3Vertex]


def type1_equal(u: Union[Type1Vertex, GroundPoly], v: Union[Type1Vertex, GroundPoly]) -> bool:
    u = u if isinstance(u, Type1Vertex) else Type1Vertex(u)
    v = v if isinstance(v, Type1Vertex) else Type1Vertex(v)
    return u == v


def type2_equal(u: Union[Type2Vertex, Sequence[GroundPoly]], v: Union[Type2Vertex, Sequence[GroundPoly]]) -> bool:
    u = u if isinstance(u, Type2Vertex) else Type2Vertex(*u)
    v = v if isinstance(v, Type2Vertex) else Type2Vertex(*v)
    return u == v


def solve_recombination(u: Sequence[GroundPoly], v: Sequence[GroundPoly]) -> Optional[List[List[Fraction]]]:
    """
    The unique matrix M with v_i = sum_j M[i][j] * u_j, if any.

    :param u: Linearly independent polynomials.
    :type u: Sequence[GroundPoly]
    :param v: Polynomials to express in terms of ``u``.
    :type v: Sequence[GroundPoly]
    :raises DegenerateTuple: If ``u`` is dependent.
    :return: The matrix, or None when some v_i is outside the span of ``u``.
    :rtype: Optional[List[List[Fraction]]]
    """
    if poly_rank(u) != len(u):
        raise DegenerateTuple("Components are linearly dependent", details={"components": [p.render() for p in u]})
    columns = monomial_columns(list(u) + list(v))
    system = [[p.coefficient_of(m) for p in u] for m in columns]
    rows = []
    for target in v:
        solution = solve_unique(system, [target.coefficient_of(m) for m in columns])
        if solution is None:
            return None
        rows.append(solution)
    return rows


def is_q_orthogonal(matrix: Sequence[Sequence[Fraction]]) -> bool:
    gram = [list(row) for row in Q_GRAM]
    return matmul(matmul(transpose(matrix), gram), matrix) == gram


def type3_equal(u: Union[Type3Vertex, Sequence[GroundPoly]], v: Union[Type3Vertex, Sequence[GroundPoly]]) -> bool:
    """
    Solve-then-verify O(q)-equivalence of two component tuples.

    :param u: First tuple or vertex.
    :param v: Second tuple or vertex.
    :raises DegenerateTuple: If either tuple has dependent components.
    :return: True iff v = M·u for some M with MᵀQM = Q.
    :rtype: bool
    """
    u_parts = u.components if isinstance(u, Type3Vertex) else tuple(u)
    v_parts = v.components if isinstance(v, Type3Vertex) else tuple(v)
    if poly_rank(v_parts) != 4:
        raise DegenerateTuple("Components are linearly dependent", details={"components": [p.render() for p in v_parts]})
    matrix = solve_recombination(u_parts, v_parts)
    return matrix is not None and is_q_orthogonal(matrix)
