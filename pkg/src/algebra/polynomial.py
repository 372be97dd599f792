"""
src.algebra.polynomial

================================================================================
Sparse Multivariate Polynomials in x1..x4
================================================================================

Overview
--------
Immutable sparse polynomials stored as ``{exponent tuple: coefficient}``
maps with no zero coefficients. Two coefficient rings are provided:

- `GroundPoly`: rational coefficients (`fractions.Fraction`)
- `ParamPoly`: Laurent coefficients in the stabiliser parameters
  (`ParamCoeff`)

Both share `SparsePoly`, which implements the ring arithmetic, substitution
of the variables by other polynomials (composition), coefficient lookup and
canonical graded-lex rendering (``x1^2*x3 + 2*x2``). Mixing rings in one
operation raises `AlgebraError`; convert explicitly with
`GroundPoly.to_param` or `ParamPoly.specialize`.

Key Characteristics
-------------------
- Exact: no floating point anywhere
- Normalised on construction: equality is term-map equality
- Composition caches powers of the inner components, which keeps the
  expansion of words of tame generators cheap
"""

from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Type, TypeVar

from src.algebra import monomials
from src.algebra.monomials import Monomial
from src.algebra.param_coeff import ParamCoeff, Scalar, render_terms
from src.config.constants import PARAMETER_NAMES, VARIABLE_NAMES
from src.exceptions.custom_exceptions import AlgebraError

P = TypeVar("P", bound="SparsePoly")


class SparsePoly:
    """
    Shared implementation of both polynomial rings.

    Subclasses define `_coerce` (turn a scalar into a ring coefficient) and
    `_zero_coeff`.

    :param terms: Mapping from 4-long exponent tuples to coefficients.
    :type terms: Optional[Mapping[Monomial, object]]
    :raises AlgebraError: On malformed exponents or coefficients.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[Sequence[int], object]] = None):
        normalized: Dict[Monomial, object] = {}
        for exps, coeff in (terms or {}).items():
            mono = monomials.make_monomial(exps)
            value = self._coerce(coeff)
            if value != 0:
                normalized[mono] = value
        self._terms = normalized
        self._hash: Optional[int] = None

    # ------------------------------------------------------------------
    # ring hooks
    # ------------------------------------------------------------------
    @classmethod
    def _coerce(cls, value):  # pragma: no cover - overridden
        raise NotImplementedError

    @classmethod
    def _zero_coeff(cls):  # pragma: no cover - overridden
        raise NotImplementedError

    # ------------------------------------------------------------------
    # constructors
    # ------------------------------------------------------------------
    @classmethod
    def _raw(cls: Type[P], terms: Dict[Monomial, object]) -> P:
        obj = cls.__new__(cls)
        obj._terms = {k: v for k, v in terms.items() if v != 0}
        obj._hash = None
        return obj

    @classmethod
    def zero(cls: Type[P]) -> P:
        return cls._raw({})

    @classmethod
    def constant(cls: Type[P], value) -> P:
        return cls._raw({monomials.unit(): cls._coerce(value)})

    @classmethod
    def one(cls: Type[P]) -> P:
        return cls.constant(1)

    @classmethod
    def variable(cls: Type[P], index: int, power: int = 1) -> P:
        """
        The polynomial ``x{index+1}^power``.

        :param index: Zero-based variable index (0 for x1).
        :type index: int
        :param power: Non-negative exponent.
        :type power: int
        :return: A single-term polynomial.
        :rtype: SparsePoly
        """
        if not 0 <= index < monomials.ARITY:
            raise AlgebraError("Variable index out of range", details={"index": index})
        return cls._raw({monomials.variable(index, power): cls._coerce(1)})

    @classmethod
    def variables(cls: Type[P]) -> Tuple[P, P, P, P]:
        return tuple(cls.variable(i) for i in range(monomials.ARITY))  # type: ignore[return-value]

    # ------------------------------------------------------------------
    # inspection
    # ------------------------------------------------------------------
    @property
    def terms(self) -> Dict[Monomial, object]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def support(self) -> List[Monomial]:
        return sorted(self._terms, key=monomials.grlex_key, reverse=True)

    def sorted_terms(self) -> List[Tuple[Monomial, object]]:
        return [(m, self._terms[m]) for m in self.support()]

    def leading_monomial(self) -> Monomial:
        if not self._terms:
            raise AlgebraError("The zero polynomial has no leading monomial")
        return max(self._terms, key=monomials.grlex_key)

    def leading_coefficient(self):
        return self._terms[self.leading_monomial()]

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=-1)

    def variables_used(self) -> frozenset:
        used = set()
        for mono in self._terms:
            used.update(i for i, e in enumerate(mono) if e)
        return frozenset(used)

    def coefficient_of(self, mono: Sequence[int]):
        return self._terms.get(monomials.make_monomial(mono), self._zero_coeff())

    # ------------------------------------------------------------------
    # arithmetic
    # ------------------------------------------------------------------
    def _check_ring(self, other: "SparsePoly") -> None:
        if type(other) is not type(self):
            raise AlgebraError(
                "Operands are over different coefficient rings",
                details={"left": type(self).__name__, "right": type(other).__name__},
            )

    def _as_poly(self: P, other) -> P:
        if isinstance(other, SparsePoly):
            self._check_ring(other)
            return other  # type: ignore[return-value]
        return type(self).constant(other)

    def __add__(self: P, other) -> P:
        other = self._as_poly(other)
        terms = dict(self._terms)
        for mono, coeff in other._terms.items():
            terms[mono] = terms[mono] + coeff if mono in terms else coeff
        return type(self)._raw(terms)

    def __radd__(self: P, other) -> P:
        return self + other

    def __neg__(self: P) -> P:
        return type(self)._raw({k: -v for k, v in self._terms.items()})

    def __sub__(self: P, other) -> P:
        return self + (-self._as_poly(other))

    def __rsub__(self: P, other) -> P:
        return self._as_poly(other) - self

    def __mul__(self: P, other) -> P:
        if not isinstance(other, SparsePoly):
            factor = self._coerce(other)
            return type(self)._raw({k: v * factor for k, v in self._terms.items()})
        self._check_ring(other)
        terms: Dict[Monomial, object] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mono = monomials.multiply(m1, m2)
                product = c1 * c2
                terms[mono] = terms[mono] + product if mono in terms else product
        return type(self)._raw(terms)

    def __rmul__(self: P, other) -> P:
        return self * other

    def __pow__(self: P, power: int) -> P:
        if power < 0:
            raise AlgebraError("Polynomials only have non-negative powers", details={"power": power})
        result = type(self).one()
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SparsePoly):
            return type(other) is type(self) and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == type(self).constant(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self._terms.items())))
        return self._hash

    # ------------------------------------------------------------------
    # composition
    # ------------------------------------------------------------------
    def compose(self: P, inner: Sequence[P]) -> P:
        """
        Substitute ``x_j`` by ``inner[j]``.

        :param inner: Four polynomials over the same ring.
        :type inner: Sequence[SparsePoly]
        :return: The composite polynomial.
        :rtype: SparsePoly
        """
        return compose_all([self], inner)[0]

    # ------------------------------------------------------------------
    # rendering
    # ------------------------------------------------------------------
    def render(self) -> str:
        raise NotImplementedError  # pragma: no cover

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.render()!r})"


class GroundPoly(SparsePoly):
    """Polynomial in x1..x4 with rational coefficients."""

    __slots__ = ()

    @classmethod
    def _coerce(cls, value) -> Fraction:
        if isinstance(value, ParamCoeff) or isinstance(value, bool):
            raise AlgebraError("Rational polynomial needs rational coefficients", details={"value": str(value)})
        try:
            return Fraction(value)
        except (TypeError, ValueError) as exc:
            raise AlgebraError("Invalid rational coefficient", details={"value": str(value)}) from exc

    @classmethod
    def _zero_coeff(cls) -> Fraction:
        return Fraction(0)

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        """
        Exact value at a rational point.

        :param point: Four rational coordinates.
        :type point: Sequence[Scalar]
        :return: The value.
        :rtype: Fraction
        """
        if len(point) != monomials.ARITY:
            raise AlgebraError("Evaluation point must have 4 coordinates", details={"received": len(point)})
        coords = [Fraction(x) for x in point]
        total = Fraction(0)
        for mono, coeff in self._terms.items():
            term = coeff
            for x, e in zip(coords, mono):
                if e:
                    term *= x**e
            total += term
        return total

    def monic(self) -> "GroundPoly":
        """Scale so the graded-lex leading coefficient is 1."""
        if self.is_zero():
            raise AlgebraError("The zero polynomial cannot be made monic")
        lead = self.leading_coefficient()
        return GroundPoly._raw({k: v / lead for k, v in self._terms.items()})

    def to_param(self) -> "ParamPoly":
        return ParamPoly._raw({k: ParamCoeff.constant(v) for k, v in self._terms.items()})

    def render(self) -> str:
        return render_terms(self.sorted_terms(), VARIABLE_NAMES)


class ParamPoly(SparsePoly):
    """Polynomial in x1..x4 whose coefficients are Laurent polynomials in the stabiliser parameters."""

    __slots__ = ()

    @classmethod
    def _coerce(cls, value) -> ParamCoeff:
        return ParamCoeff.coerce(value)

    @classmethod
    def _zero_coeff(cls) -> ParamCoeff:
        return ParamCoeff.zero()

    def specialize(self, values: Mapping[str, Scalar]) -> GroundPoly:
        """
        Substitute rationals for every parameter.

        :param values: Value per parameter name.
        :type values: Mapping[str, Scalar]
        :raises AlgebraError: If a parameter occurring in a coefficient has no value.
        :return: The specialised rational polynomial.
        :rtype: GroundPoly
        """
        return GroundPoly._raw({k: v.specialize(values) for k, v in self._terms.items()})

    def render(self) -> str:
        pieces = []
        for mono, coeff in self.sorted_terms():
            body = monomials.render(mono)
            if coeff.is_monomial():
                rendered = render_terms(coeff.sorted_terms(), PARAMETER_NAMES)
                if not body:
                    pieces.append(rendered)
                elif rendered in ("1", "-1"):
                    pieces.append(("-" if rendered == "-1" else "") + body)
                else:
                    pieces.append(f"{rendered}*{body}")
            else:
                coeff_text = f"({coeff.render()})"
                pieces.append(f"{coeff_text}*{body}" if body else coeff_text)
        if not pieces:
            return "0"
        text = pieces[0]
        for piece in pieces[1:]:
            text += f" - {piece[1:]}" if piece.startswith("-") else f" + {piece}"
        return text


def compose_all(outer: Iterable[P], inner: Sequence[P]) -> List[P]:
    """
    Compose several outer polynomials with the same inner 4-tuple.

    Powers ``inner[j]^e`` are computed once and shared between all outer
    polynomials.

    :param outer: Polynomials to substitute into.
    :type outer: Iterable[SparsePoly]
    :param inner: Replacement for x1..x4, all over the ring of ``outer``.
    :type inner: Sequence[SparsePoly]
    :raises AlgebraError: On arity or ring mismatch.
    :return: One composite per outer polynomial.
    :rtype: List[SparsePoly]
    """
    outer = list(outer)
    if len(inner) != monomials.ARITY:
        raise AlgebraError("Composition needs 4 inner components", details={"received": len(inner)})
    if not outer:
        return []
    ring = type(outer[0])
    for poly in list(outer) + list(inner):
        if type(poly) is not ring:
            raise AlgebraError(
                "Composition operands are over different coefficient rings",
                details={"expected": ring.__name__, "received": type(poly).__name__},
            )

    powers: Dict[Tuple[int, int], SparsePoly] = {}

    def power(j: int, e: int) -> SparsePoly:
        if e == 0:
            return ring.one()
        key = (j, e)
        if key not in powers:
            powers[key] = power(j, e - 1) * inner[j]
        return powers[key]

    results = []
    for poly in outer:
        acc: Dict[Monomial, object] = {}
        for mono, coeff in poly._terms.items():
            term = ring._raw({monomials.unit(): coeff})
            for j, e in enumerate(mono):
                if e:
                    term = term * power(j, e)
            for m, c in term._terms.items():
                acc[m] = acc[m] + c if m in acc else c
        results.append(ring._raw(acc))
    return results
