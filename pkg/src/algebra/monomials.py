"""
src.algebra.monomials

================================================================================
Exponent Vectors and the Graded-Lexicographic Order
================================================================================

Overview
--------
Monomials are dense exponent tuples of fixed arity: 4 for the variables
x1..x4, 8 for the stabiliser parameters a, b, c, d, a', b', c', d'. This
module holds the tuple arithmetic and the single monomial order used for
normalisation and canonical printing: graded lexicographic with
x1 > x2 > x3 > x4 (resp. a > b > ... > d').
"""

from typing import Sequence, Tuple

from src.config.constants import VARIABLE_NAMES
from src.exceptions.custom_exceptions import AlgebraError

Monomial = Tuple[int, ...]

ARITY = 4


def make_monomial(exponents: Sequence[int], arity: int = ARITY) -> Monomial:
    """
    Validate and freeze an exponent vector of the given arity.

    Negative exponents are rejected here; Laurent exponents are validated by
    the parameter-coefficient ring itself.

    :param exponents: Exponents, one per variable.
    :type exponents: Sequence[int]
    :param arity: Expected length.
    :type arity: int
    :raises AlgebraError: On wrong length or negative entries.
    :return: The exponent tuple.
    :rtype: Monomial
    """
    mono = tuple(int(e) for e in exponents)
    if len(mono) != arity:
        raise AlgebraError(
            "Monomial has wrong arity",
            details={"expected": arity, "received": len(mono)},
        )
    if any(e < 0 for e in mono):
        raise AlgebraError("Monomial exponents must be non-negative", details={"exponents": mono})
    return mono


def unit(arity: int = ARITY) -> Monomial:
    return (0,) * arity


def variable(index: int, power: int = 1, arity: int = ARITY) -> Monomial:
    exps = [0] * arity
    exps[index] = power
    return tuple(exps)


def multiply(m: Monomial, n: Monomial) -> Monomial:
    return tuple(a + b for a, b in zip(m, n))


def degree(m: Monomial) -> int:
    return sum(m)


def grlex_key(m: Monomial) -> Tuple[int, Monomial]:
    """
    Sort key realising the graded-lexicographic order.

    Larger keys are larger monomials: total degree first, then the exponent
    of the first variable, and so on.

    :param m: Exponent tuple.
    :type m: Monomial
    :return: Comparable key.
    :rtype: Tuple[int, Monomial]
    """
    return (sum(m), m)


def render(m: Monomial, names: Sequence[str] = VARIABLE_NAMES) -> str:
    """
    Render a monomial as ``x1^2*x3``; the unit monomial renders as ``""``.

    :param m: Exponent tuple.
    :type m: Monomial
    :param names: Variable names, one per position.
    :type names: Sequence[str]
    :return: Text form with explicit ``^`` powers.
    :rtype: str
    """
    factors = []
    for name, exp in zip(names, m):
        if exp == 0:
            continue
        factors.append(name if exp == 1 else f"{name}^{exp}")
    return "*".join(factors)
