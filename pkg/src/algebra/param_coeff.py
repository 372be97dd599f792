"""
src.algebra.param_coeff

================================================================================
Laurent Coefficients in the Stabiliser Parameters
================================================================================

Overview
--------
`ParamCoeff` is an exact Laurent polynomial in the eight stabiliser
parameters (a, b, c, d, a', b', c', d') with rational coefficients. Only
a, b, a', b' may carry negative exponents: they are the invertible
parameters of the square-stabiliser family ``ab != 0``.

Instances are immutable; every operation returns a new normalised value
without zero terms.

Responsibilities
----------------
- Ring arithmetic (add, subtract, multiply, negate, integer powers)
- Laurent inversion of monomials
- Substitution of a parameter by another coefficient, and of all
  parameters by rationals (`specialize`)
- Normalisation helpers used by the successive-isolation summary:
  clearing Laurent denominators, monic scaling, stripping unit factors
- Canonical graded-lex text rendering (``a^6 - 1``)
"""

from fractions import Fraction
from typing import Dict, Iterable, Mapping, Optional, Tuple, Union

from src.algebra import monomials
from src.config.constants import LAURENT_PARAMETERS, PARAMETER_NAMES
from src.exceptions.custom_exceptions import AlgebraError

PARAM_ARITY = len(PARAMETER_NAMES)

Exponents = Tuple[int, ...]
Scalar = Union[int, Fraction]


def parameter_index(name: Union[str, int]) -> int:
    """
    Resolve a parameter name (``"a'"``) or position to its index.

    :param name: Parameter name or index.
    :type name: Union[str, int]
    :raises AlgebraError: If the name is unknown.
    :return: Position in the exponent vector.
    :rtype: int
    """
    if isinstance(name, int):
        if 0 <= name < PARAM_ARITY:
            return name
    elif name in PARAMETER_NAMES:
        return PARAMETER_NAMES.index(name)
    raise AlgebraError("Unknown stabiliser parameter", details={"parameter": name})


class ParamCoeff:
    """
    Laurent polynomial in the stabiliser parameters over the rationals.

    :param terms: Mapping from 8-long exponent vectors to rational coefficients.
    :type terms: Optional[Mapping[Exponents, Scalar]]
    :raises AlgebraError: On wrong arity or a negative exponent on c, d, c', d'.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[Exponents, Scalar]] = None):
        normalized: Dict[Exponents, Fraction] = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != PARAM_ARITY:
                raise AlgebraError(
                    "Parameter exponent vector has wrong arity",
                    details={"expected": PARAM_ARITY, "received": len(exps)},
                )
            for index, exp in enumerate(exps):
                if exp < 0 and index not in LAURENT_PARAMETERS:
                    raise AlgebraError(
                        "Negative exponent on a non-invertible parameter",
                        details={"parameter": PARAMETER_NAMES[index], "exponent": exp},
                    )
            value = Fraction(coeff)
            if value != 0:
                normalized[exps] = value
        self._terms = normalized
        self._hash: Optional[int] = None

    # ------------------------------------------------------------------
    # constructors
    # ------------------------------------------------------------------
    @classmethod
    def _raw(cls, terms: Dict[Exponents, Fraction]) -> "ParamCoeff":
        obj = cls.__new__(cls)
        obj._terms = {k: v for k, v in terms.items() if v != 0}
        obj._hash = None
        return obj

    @classmethod
    def zero(cls) -> "ParamCoeff":
        return cls._raw({})

    @classmethod
    def one(cls) -> "ParamCoeff":
        return cls.constant(1)

    @classmethod
    def constant(cls, value: Scalar) -> "ParamCoeff":
        return cls._raw({monomials.unit(PARAM_ARITY): Fraction(value)})

    @classmethod
    def parameter(cls, name: Union[str, int], power: int = 1) -> "ParamCoeff":
        """
        The coefficient ``name^power``; negative powers only for a, b, a', b'.

        :param name: Parameter name or index.
        :type name: Union[str, int]
        :param power: Exponent.
        :type power: int
        :return: A single-term coefficient.
        :rtype: ParamCoeff
        """
        index = parameter_index(name)
        exps = [0] * PARAM_ARITY
        exps[index] = power
        return cls({tuple(exps): 1})

    @classmethod
    def coerce(cls, value: Union["ParamCoeff", Scalar]) -> "ParamCoeff":
        if isinstance(value, ParamCoeff):
            return value
        if isinstance(value, (int, Fraction)):
            return cls.constant(value)
        raise AlgebraError(
            "Cannot use value as a parameter coefficient",
            details={"type": type(value).__name__},
        )

    # ------------------------------------------------------------------
    # inspection
    # ------------------------------------------------------------------
    @property
    def terms(self) -> Dict[Exponents, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def parameters_used(self) -> frozenset:
        used = set()
        for exps in self._terms:
            used.update(i for i, e in enumerate(exps) if e != 0)
        return frozenset(used)

    def sorted_terms(self) -> Iterable[Tuple[Exponents, Fraction]]:
        return sorted(self._terms.items(), key=lambda item: monomials.grlex_key(item[0]), reverse=True)

    # ------------------------------------------------------------------
    # arithmetic
    # ------------------------------------------------------------------
    def __add__(self, other: Union["ParamCoeff", Scalar]) -> "ParamCoeff":
        other = ParamCoeff.coerce(other)
        terms = dict(self._terms)
        for exps, coeff in other._terms.items():
            terms[exps] = terms.get(exps, Fraction(0)) + coeff
        return ParamCoeff._raw(terms)

    __radd__ = __add__

    def __neg__(self) -> "ParamCoeff":
        return ParamCoeff._raw({k: -v for k, v in self._terms.items()})

    def __sub__(self, other: Union["ParamCoeff", Scalar]) -> "ParamCoeff":
        return self + (-ParamCoeff.coerce(other))

    def __rsub__(self, other: Scalar) -> "ParamCoeff":
        return ParamCoeff.coerce(other) - self

    def __mul__(self, other: Union["ParamCoeff", Scalar]) -> "ParamCoeff":
        other = ParamCoeff.coerce(other)
        terms: Dict[Exponents, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exps = monomials.multiply(e1, e2)
                terms[exps] = terms.get(exps, Fraction(0)) + c1 * c2
        return ParamCoeff._raw(terms)

    __rmul__ = __mul__

    def __pow__(self, power: int) -> "ParamCoeff":
        if power < 0:
            return self.inverse() ** (-power)
        result = ParamCoeff.one()
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def inverse(self) -> "ParamCoeff":
        """
        Laurent inverse of a single-term coefficient.

        :raises AlgebraError: If the value is not a monomial in a, b, a', b'.
        :return: The inverse coefficient.
        :rtype: ParamCoeff
        """
        if not self.is_monomial():
            raise AlgebraError("Only single-term coefficients are invertible", details={"value": self.render()})
        ((exps, coeff),) = self._terms.items()
        return ParamCoeff({tuple(-e for e in exps): 1 / coeff})

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = ParamCoeff.constant(other)
        if not isinstance(other, ParamCoeff):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # ------------------------------------------------------------------
    # substitution
    # ------------------------------------------------------------------
    def substitute(self, name: Union[str, int], value: "ParamCoeff") -> "ParamCoeff":
        """
        Replace one parameter by a coefficient.

        Negative powers of the replaced parameter require ``value`` to be a
        monomial (so that it is invertible).

        :param name: Parameter to eliminate.
        :type name: Union[str, int]
        :param value: Replacement.
        :type value: ParamCoeff
        :return: The substituted coefficient.
        :rtype: ParamCoeff
        """
        index = parameter_index(name)
        result = ParamCoeff.zero()
        for exps, coeff in self._terms.items():
            rest = list(exps)
            power = rest[index]
            rest[index] = 0
            result = result + ParamCoeff._raw({tuple(rest): coeff}) * (value**power)
        return result

    def specialize(self, values: Mapping[str, Scalar]) -> Fraction:
        """
        Evaluate at rational parameter values.

        :param values: Value per parameter name; every parameter occurring must be present.
        :type values: Mapping[str, Scalar]
        :raises AlgebraError: If a value is missing or an inverted parameter is zero.
        :return: The exact value.
        :rtype: Fraction
        """
        total = Fraction(0)
        for exps, coeff in self._terms.items():
            term = coeff
            for index, exp in enumerate(exps):
                if exp == 0:
                    continue
                name = PARAMETER_NAMES[index]
                if name not in values:
                    raise AlgebraError("Missing parameter value", details={"parameter": name})
                base = Fraction(values[name])
                if exp < 0 and base == 0:
                    raise AlgebraError("Inverted parameter specialised to zero", details={"parameter": name})
                term *= base**exp
            total += term
        return total

    # ------------------------------------------------------------------
    # normalisation helpers
    # ------------------------------------------------------------------
    def clear_denominators(self) -> "ParamCoeff":
        """
        Multiply by the monomial that makes every exponent non-negative with
        minimal shift, then scale so the graded-lex leading coefficient is 1.

        :return: The normalised associate (zero stays zero).
        :rtype: ParamCoeff
        """
        if self.is_zero():
            return self
        shift = [0] * PARAM_ARITY
        for exps in self._terms:
            for index, exp in enumerate(exps):
                shift[index] = min(shift[index], exp)
        terms = {tuple(e - s for e, s in zip(exps, shift)): c for exps, c in self._terms.items()}
        shifted = ParamCoeff._raw(terms)
        return shifted.monic()

    def monic(self) -> "ParamCoeff":
        if self.is_zero():
            return self
        _, lead = next(iter(self.sorted_terms()))
        return ParamCoeff._raw({k: v / lead for k, v in self._terms.items()})

    def strip_units(self) -> "ParamCoeff":
        """
        Drop the invertible factor of a single-term coefficient.

        ``a^-1*c`` becomes ``c``; a pure unit becomes ``1``.

        :raises AlgebraError: If the value has more than one term.
        :return: The non-unit part with coefficient 1.
        :rtype: ParamCoeff
        """
        if not self.is_monomial():
            raise AlgebraError("Only single-term coefficients have a unit part", details={"value": self.render()})
        ((exps, _),) = self._terms.items()
        kept = tuple(0 if i in LAURENT_PARAMETERS else e for i, e in enumerate(exps))
        return ParamCoeff._raw({kept: Fraction(1)})

    def reduce_power(self, name: Union[str, int], modulus: int) -> "ParamCoeff":
        """
        Reduce exponents of a parameter modulo ``modulus``, i.e. work modulo
        ``name^modulus - 1``.

        :param name: An invertible parameter.
        :type name: Union[str, int]
        :param modulus: Positive order.
        :type modulus: int
        :return: The reduced coefficient.
        :rtype: ParamCoeff
        """
        index = parameter_index(name)
        if index not in LAURENT_PARAMETERS:
            raise AlgebraError("Only invertible parameters can be reduced", details={"parameter": name})
        terms: Dict[Exponents, Fraction] = {}
        for exps, coeff in self._terms.items():
            reduced = list(exps)
            reduced[index] = reduced[index] % modulus
            key = tuple(reduced)
            terms[key] = terms.get(key, Fraction(0)) + coeff
        return ParamCoeff._raw(terms)

    # ------------------------------------------------------------------
    # rendering
    # ------------------------------------------------------------------
    def render(self) -> str:
        """
        Canonical graded-lex rendering, e.g. ``a^6 - 1`` or ``-a'*b + a^2``.

        :return: Text form; ``0`` for the zero coefficient.
        :rtype: str
        """
        return render_terms(self.sorted_terms(), PARAMETER_NAMES)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"ParamCoeff({self.render()!r})"


def format_scalar(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def render_terms(terms: Iterable[Tuple[Tuple[int, ...], Fraction]], names) -> str:
    """
    Shared term renderer for coefficients and polynomials.

    Unit coefficients are omitted in front of non-constant monomials, and
    signs are folded into `` + `` / `` - `` separators.

    :param terms: Ordered (exponents, coefficient) pairs.
    :param names: Variable names per position.
    :return: Text form; ``0`` if empty.
    :rtype: str
    """
    pieces = []
    for exps, coeff in terms:
        mono = monomials.render(exps, names)
        magnitude = abs(coeff)
        if not mono:
            body = format_scalar(magnitude)
        elif magnitude == 1:
            body = mono
        else:
            body = f"{format_scalar(magnitude)}*{mono}"
        negative = coeff < 0
        if not pieces:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f" - {body}" if negative else f" + {body}")
    return "".join(pieces) if pieces else "0"
