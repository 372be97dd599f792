"""
src.services.tame_group_service

================================================================================
Tame Group Operations
================================================================================

Overview
--------
Builds tame automorphisms of 4-space preserving q = x1*x4 - x2*x3 as words
in validated generators, acts on orbit vertices, and runs the symbolic
common-stabiliser computation for the hyperbolic element

    g = (x4 + x3*x1^2 + x2*x1^2 + x1^5, x2 + x1^3, x3 + x1^3, x1)

Responsibilities
----------------
- `make_generator`: validated orthogonal and elementary generators
- Named O(q) elements (`swap_23`, `reversal`, `swap_14`, corner swaps) and
  `elementary(P)`
- `element_from_word`, `explicit_g`, `act_on_vertex`
- `stabilizer_family` / `stabilizer_element`: the square-stabiliser family
- `derive_common_stabilizer_constraints`: coefficient equations of
  g∘f - f'∘g and the successive monomial-isolation summary
- `check_parameters`: evaluate every equation at rational parameter values
- `q_check`: q-invariance and inverse identities of random words

Key Characteristics
--------------------
- Exact rational and Laurent-polynomial arithmetic throughout
- Roots of unity are never instantiated: relations are delivered as
  polynomials (``a^6 - 1``)
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from src.algebra import monomials
from src.algebra.linalg import matmul, transpose
from src.algebra.param_coeff import ParamCoeff, Scalar, parameter_index
from src.algebra.polymap import PolyMap4, q_polynomial, quadratic_form_pullback
from src.algebra.polynomial import GroundPoly, ParamPoly
from src.config.constants import PARAMETER_NAMES, Q_GRAM
from src.exceptions.custom_exceptions import AlgebraError, BadVariables, NotOrthogonal
from src.models.generator import Generator, MatrixRows
from src.models.orbit_vertex import OrbitVertex, type1_equal, type2_equal, type3_equal
from src.models.tame_element import Letter, TameElement
from src.schemas.reports import (
    ConstraintEquation,
    ParameterCheck,
    QCheckReport,
    QCheckRow,
    StabilizerReport,
    SummaryStep,
)
from src.utils.logger_util import log_info

# x1 and x3 are the only variables an elementary polynomial may use.
ELEMENTARY_VARIABLES = frozenset({0, 2})


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------


def _as_matrix(matrix: Sequence[Sequence[Scalar]]) -> MatrixRows:
    rows = tuple(tuple(Fraction(x) for x in row) for row in matrix)
    if len(rows) != 4 or any(len(row) != 4 for row in rows):
        raise NotOrthogonal("Orthogonal generator needs a 4x4 matrix", details={"rows": [len(r) for r in rows]})
    return rows


def make_generator(
    matrix: Optional[Sequence[Sequence[Scalar]]] = None,
    polynomial: Optional[GroundPoly] = None,
    name: Optional[str] = None,
) -> Generator:
    """
    Validate and build a generator from exactly one of ``matrix`` or ``polynomial``.

    :param matrix: Rows of a 4x4 rational matrix; the map sends x to M·x.
    :type matrix: Optional[Sequence[Sequence[Scalar]]]
    :param polynomial: The polynomial P of the elementary map
        (x1, x2 + x1*P, x3, x4 + x3*P).
    :type polynomial: Optional[GroundPoly]
    :param name: Display name; defaults to ``"O"`` or ``"e[P]"``.
    :type name: Optional[str]
    :raises NotOrthogonal: If MᵀQM != Q or the matrix is not 4x4.
    :raises BadVariables: If P mentions x2 or x4.
    :raises AlgebraError: If both or neither argument is given.
    :return: The generator.
    :rtype: Generator
    """
    if (matrix is None) == (polynomial is None):
        raise AlgebraError("Give exactly one of a matrix or a polynomial")
    if matrix is not None:
        rows = _as_matrix(matrix)
        gram = [list(row) for row in Q_GRAM]
        if matmul(matmul(transpose(rows), gram), rows) != gram:
            raise NotOrthogonal(
                "Matrix does not preserve the quadratic form",
                details={"matrix": [[str(x) for x in row] for row in rows]},
            )
        return Generator(kind="orthogonal", name=name or "O", matrix=rows)
    if not isinstance(polynomial, GroundPoly):
        raise AlgebraError("Elementary polynomial must have rational coefficients")
    stray = polynomial.variables_used() - ELEMENTARY_VARIABLES
    if stray:
        raise BadVariables(
            "Elementary polynomial may only use x1 and x3",
            details={"polynomial": polynomial.render(), "variables": [f"x{i + 1}" for i in sorted(stray)]},
        )
    return Generator(kind="elementary", name=name or f"e[{polynomial.render()}]", polynomial=polynomial)


def _permutation(images: Sequence[Tuple[int, int]], name: str) -> Generator:
    """Signed permutation: component i of the map is sign * x_j for ``images[i] = (j, sign)``."""
    rows = [[0] * 4 for _ in range(4)]
    for i, (j, sign) in enumerate(images):
        rows[i][j] = sign
    return make_generator(matrix=rows, name=name)


@lru_cache(maxsize=None)
def swap_23() -> Generator:
    return _permutation([(0, 1), (2, 1), (1, 1), (3, 1)], "tau")


@lru_cache(maxsize=None)
def reversal() -> Generator:
    return _permutation([(3, 1), (2, 1), (1, 1), (0, 1)], "rho")


@lru_cache(maxsize=None)
def swap_14() -> Generator:
    return _permutation([(3, 1), (1, 1), (2, 1), (0, 1)], "sigma")


@lru_cache(maxsize=None)
def corner_swap_2() -> Generator:
    """(x2, x1, -x4, -x3)."""
    return _permutation([(1, 1), (0, 1), (3, -1), (2, -1)], "pi2")


@lru_cache(maxsize=None)
def corner_swap_3() -> Generator:
    """(x3, x1, -x4, -x2)."""
    return _permutation([(2, 1), (0, 1), (3, -1), (1, -1)], "pi3")


def elementary(polynomial: GroundPoly, name: Optional[str] = None) -> Generator:
    return make_generator(polynomial=polynomial, name=name)


@lru_cache(maxsize=None)
def elementary_x1_squared() -> Generator:
    x1 = GroundPoly.variable(0)
    return elementary(x1**2, name="e")


# ---------------------------------------------------------------------------
# Elements and the action on vertices
# ---------------------------------------------------------------------------


def element_from_word(word: Sequence[Letter]) -> TameElement:
    """
    Expand a word [w1, ..., wn] into the element w1∘...∘wn and check its invariants.

    :param word: Letters (generator, sign) with sign +1 or -1.
    :type word: Sequence[Letter]
    :raises AlgebraError: If an invariant fails (indicates a broken generator).
    :return: The element.
    :rtype: TameElement
    """
    element = TameElement.from_word(word)
    element.check_invariants()
    return element


def explicit_g_formula() -> Tuple[PolyMap4, PolyMap4]:
    """The displayed forward map of g and its inverse."""
    x1, x2, x3, x4 = GroundPoly.variables()
    forward = PolyMap4((x4 + x3 * x1**2 + x2 * x1**2 + x1**5, x2 + x1**3, x3 + x1**3, x1))
    inverse = PolyMap4((x4, x2 - x4**3, x3 - x4**3, x1 - x2 * x4**2 - x3 * x4**2 + x4**5))
    return forward, inverse


@lru_cache(maxsize=None)
def explicit_g() -> TameElement:
    """
    The hyperbolic element g as the word rho * e * tau * e.

    :raises AlgebraError: If the word does not expand to the displayed formula.
    :return: g with both maps stored.
    :rtype: TameElement
    """
    e, tau, rho = elementary_x1_squared(), swap_23(), reversal()
    element = element_from_word([(rho, 1), (e, 1), (tau, 1), (e, 1)])
    forward, inverse = explicit_g_formula()
    if element.forward != forward or element.inverse != inverse:
        raise AlgebraError(
            "Generator word for g does not expand to its formula",
            details={"forward": element.forward.render(), "expected": forward.render()},
        )
    return element


def act_on_vertex(t: TameElement, v: OrbitVertex) -> OrbitVertex:
    """
    t·v: precompose the components of ``v`` with t⁻¹ and canonicalise.

    :param t: Tame element.
    :type t: TameElement
    :param v: Vertex of any type.
    :type v: OrbitVertex
    :return: A vertex of the same type.
    :rtype: OrbitVertex
    """
    return v.act(t.inverse)


# ---------------------------------------------------------------------------
# Square stabilisers
# ---------------------------------------------------------------------------


def stabilizer_family(primed: bool = False) -> PolyMap4:
    """
    (a*x1, b*(x2 + c*x1), b⁻¹*(x3 + d*x1), a⁻¹*(x4 + c*x3 + d*x2)).

    :param primed: Use the parameters a', b', c', d' instead.
    :type primed: bool
    :return: The family as a parametric 4-map.
    :rtype: PolyMap4
    """
    suffix = "'" if primed else ""
    a, b, c, d = (ParamCoeff.parameter(name + suffix) for name in "abcd")
    a_inv, b_inv = ParamCoeff.parameter("a" + suffix, -1), ParamCoeff.parameter("b" + suffix, -1)
    x1, x2, x3, x4 = ParamPoly.variables()
    return PolyMap4(
        (
            x1 * a,
            (x2 + x1 * c) * b,
            (x3 + x1 * d) * b_inv,
            (x4 + x3 * c + x2 * d) * a_inv,
        )
    )


def stabilizer_element(a: Scalar, b: Scalar, c: Scalar = 0, d: Scalar = 0) -> TameElement:
    """
    A member of the square-stabiliser family as a tame element.

    The family preserves q exactly when c*d = 0; the element is then the word
    (scaling by a, b) * (shear by c) * (shear by d), with the shears
    elementary maps conjugated by O(q) swaps.

    :raises AlgebraError: If a or b is zero, or c*d != 0.
    :return: The element, its forward map equal to the specialised family.
    :rtype: TameElement
    """
    a, b, c, d = Fraction(a), Fraction(b), Fraction(c), Fraction(d)
    if a == 0 or b == 0:
        raise AlgebraError("Stabiliser parameters a and b must be nonzero", details={"a": str(a), "b": str(b)})
    if c * d != 0:
        raise AlgebraError(
            "Stabiliser family preserves q only when c*d = 0", details={"c": str(c), "d": str(d)}
        )
    scaling = make_generator(
        matrix=[[a, 0, 0, 0], [0, b, 0, 0], [0, 0, 1 / b, 0], [0, 0, 0, 1 / a]],
        name=f"diag({a},{b})",
    )
    word: List[Letter] = [(scaling, 1)]
    tau = swap_23()
    if c != 0:
        # e[c] = (x1, x2 + c*x1, x3, x4 + c*x3)
        word.append((elementary(GroundPoly.constant(c)), 1))
    if d != 0:
        # tau∘e[d]∘tau = (x1, x2, x3 + d*x1, x4 + d*x2)
        word += [(tau, 1), (elementary(GroundPoly.constant(d)), 1), (tau, 1)]
    element = element_from_word(word)
    values = {"a": a, "b": b, "c": c, "d": d}
    if element.forward != stabilizer_family().specialize(values):
        raise AlgebraError("Stabiliser word does not match the family", details={"values": {k: str(v) for k, v in values.items()}})
    return element


# ---------------------------------------------------------------------------
# Common stabiliser of C and gC
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IsolationStep:
    """
    One scripted step of the monomial isolation.

    ``kind`` is ``solve`` (coefficient linear in ``target``; record
    target := solution), ``normalise`` (clear Laurent denominators),
    ``strip units`` (drop invertible factors), or ``power`` (check
    ``target^order - 1`` modulo the relation on ``modulus_parameter``).
    """

    component: int
    monomial: Tuple[int, int, int, int]
    kind: str
    using: Tuple[str, ...] = ()
    target: Optional[str] = None
    role: Optional[str] = None
    order: int = 6
    modulus_parameter: str = "a"


ISOLATION_STEPS: Tuple[IsolationStep, ...] = (
    IsolationStep(1, (5, 0, 0, 0), "solve", target="a'", role="mirror"),
    IsolationStep(1, (2, 1, 0, 0), "solve", using=("a'",), target="b"),
    IsolationStep(1, (2, 0, 1, 0), "normalise", using=("a'", "b"), role="summary"),
    IsolationStep(1, (2, 1, 0, 0), "power", using=("b",), target="b", role="summary"),
    IsolationStep(1, (0, 0, 0, 1), "normalise", using=("a'",)),
    IsolationStep(1, (0, 0, 1, 0), "strip units", role="summary"),
    IsolationStep(1, (0, 1, 0, 0), "strip units", role="summary"),
    IsolationStep(2, (0, 1, 0, 0), "solve", target="b'", role="mirror"),
    IsolationStep(2, (0, 0, 0, 1), "strip units", role="mirror"),
    IsolationStep(3, (0, 0, 0, 1), "strip units", role="mirror"),
)


@lru_cache(maxsize=None)
def commutator_difference() -> PolyMap4:
    """g∘f(a,b,c,d) - f(a',b',c',d')∘g as a parametric 4-map."""
    g = explicit_g().forward.to_param()
    left = g.compose(stabilizer_family())
    right = stabilizer_family(primed=True).compose(g)
    return PolyMap4([l - r for l, r in zip(left, right)])


def constraint_equations() -> List[Tuple[int, Tuple[int, ...], ParamCoeff]]:
    """Every nonzero coefficient of the difference, by component then descending graded-lex monomial."""
    equations = []
    for index, component in enumerate(commutator_difference(), start=1):
        for mono, coeff in component.sorted_terms():
            equations.append((index, mono, coeff))
    return equations


def _solve_linear(coeff: ParamCoeff, name: str) -> ParamCoeff:
    """Solve u*p + rest = 0 for the parameter p, u a single term."""
    index = parameter_index(name)
    linear: Dict[Tuple[int, ...], Fraction] = {}
    rest: Dict[Tuple[int, ...], Fraction] = {}
    for exps, value in coeff.terms.items():
        if exps[index] == 1:
            reduced = list(exps)
            reduced[index] = 0
            linear[tuple(reduced)] = value
        elif exps[index] == 0:
            rest[exps] = value
        else:
            raise AlgebraError("Coefficient is not linear in the parameter", details={"coefficient": coeff.render(), "parameter": name})
    unit = ParamCoeff(linear)
    if not unit.is_monomial():
        raise AlgebraError("Parameter does not carry a unit factor", details={"coefficient": coeff.render(), "parameter": name})
    return -ParamCoeff(rest) * unit.inverse()


def _total_degree(coeff: ParamCoeff) -> int:
    return max((sum(exps) for exps, _ in coeff.sorted_terms()), default=0)


def derive_common_stabilizer_constraints() -> StabilizerReport:
    """
    Equations forcing f' = g f g⁻¹ inside the square-stabiliser family, reduced by monomial isolation.

    The full equation list holds every nonzero coefficient of
    g∘f - f'∘g. The summary follows the isolation order: the x1^5, x1^2*x2
    and x1^2*x3 coefficients of the first component, then the linear
    monomials. Relations are made monic in graded-lex order.

    :return: Equations, the step-by-step summary, the reduced relations
        ``a^6 - 1``, ``b^6 - 1``, ``c``, ``d`` and the mirror relations on
        the primed parameters.
    :rtype: StabilizerReport
    """
    equations = constraint_equations()
    lookup = {(component, mono): coeff for component, mono, coeff in equations}
    known: Dict[str, ParamCoeff] = {}
    relations: List[ParamCoeff] = []
    steps: List[SummaryStep] = []
    summary: List[str] = []
    mirror: List[str] = []
    solutions = 1

    for step in ISOLATION_STEPS:
        if step.kind == "power":
            target = ParamCoeff.parameter(step.target)
            raw = target ** step.order - 1
        else:
            raw = lookup[(step.component, step.monomial)]
        reduced = raw
        for name in step.using:
            reduced = reduced.substitute(name, known[name])

        if step.kind == "solve":
            value = _solve_linear(reduced, step.target)
            known[step.target] = value
            relation = (value - ParamCoeff.parameter(step.target)).monic()
        elif step.kind == "normalise":
            relation = reduced.clear_denominators()
        elif step.kind == "strip units":
            relation = reduced.strip_units()
        elif step.kind == "power":
            reduced = reduced.reduce_power(step.modulus_parameter, step.order)
            if not reduced.is_zero():
                raise AlgebraError("Power relation does not follow", details={"reduced": reduced.render()})
            relation = raw.monic()
        else:
            raise AlgebraError("Unknown isolation step", details={"kind": step.kind})

        consistent = step.kind == "power" or relation in relations
        relations.append(relation)
        steps.append(
            SummaryStep(
                component=step.component,
                monomial=monomials.render(step.monomial),
                kind=step.kind,
                raw=raw.render(),
                reduced=reduced.render(),
                relation=relation.render(),
                consistent=consistent,
            )
        )
        if step.role == "summary":
            summary.append(relation.render())
            solutions *= _total_degree(relation)
        elif step.role == "mirror":
            mirror.append(relation.render())

    log_info(
        "Common stabiliser constraints derived",
        function_name="derive_common_stabilizer_constraints",
        context={"equations": len(equations), "summary": summary},
    )
    return StabilizerReport(
        equations=[
            ConstraintEquation(component=component, monomial=monomials.render(mono), coefficient=coeff.render())
            for component, mono, coeff in equations
        ],
        steps=steps,
        summary=summary,
        mirror=mirror,
        conclusion=(
            "a^6 = 1, b^6 = 1 and c = d = 0, with a', b', c', d' determined: "
            f"the intersection of the stabilisers is finite (at most {solutions} parameter pairs)"
        ),
        solution_count=solutions,
    )


def identity_parameters() -> Dict[str, Fraction]:
    return {name: Fraction(1 if name.rstrip("'") in ("a", "b") else 0) for name in PARAMETER_NAMES}


def check_parameters(values: Mapping[str, Scalar]) -> ParameterCheck:
    """
    Evaluate every constraint equation at rational parameter values.

    Parameters not given keep their identity values (a = b = 1, c = d = 0,
    and likewise for the primed ones).

    :param values: Overrides per parameter name.
    :type values: Mapping[str, Scalar]
    :raises AlgebraError: On an unknown parameter or a zero value for a, b, a', b'.
    :return: Whether all equations vanish, with the violated ones listed.
    :rtype: ParameterCheck
    """
    point = identity_parameters()
    for name, value in values.items():
        parameter_index(name)
        point[name] = Fraction(value)
    violated = [
        ConstraintEquation(component=component, monomial=monomials.render(mono), coefficient=coeff.render())
        for component, mono, coeff in constraint_equations()
        if coeff.specialize(point) != 0
    ]
    return ParameterCheck(
        values={name: str(value) for name, value in point.items()},
        satisfied=not violated,
        violated=violated,
    )


# ---------------------------------------------------------------------------
# q-invariance spot checks
# ---------------------------------------------------------------------------


def random_word(rng: random.Random, max_length: int) -> List[Letter]:
    x1, _, x3, _ = GroundPoly.variables()
    pool = [
        swap_23(),
        reversal(),
        swap_14(),
        corner_swap_2(),
        corner_swap_3(),
        elementary_x1_squared(),
        elementary(x1 + x3, name="e[x1 + x3]"),
        elementary(x1 * x3 - 2, name="e[x1*x3 - 2]"),
    ]
    length = rng.randint(1, max_length)
    return [(rng.choice(pool), rng.choice((1, -1))) for _ in range(length)]


def q_check(count: int = 20, max_length: int = 4, seed: int = 0) -> QCheckReport:
    """
    Check q-invariance and forward∘inverse = id on ``count`` random words, plus g itself.

    :param count: Number of random words.
    :type count: int
    :param max_length: Longest word.
    :type max_length: int
    :param seed: Seed of the word generator.
    :type seed: int
    :return: One row per element.
    :rtype: QCheckReport
    """
    rng = random.Random(seed)
    q = q_polynomial()
    elements = [explicit_g()] + [TameElement.from_word(random_word(rng, max_length)) for _ in range(count)]
    rows = []
    for element in elements:
        rows.append(
            QCheckRow(
                word=element.render_word(),
                forward_preserves_q=quadratic_form_pullback(element.forward) == q,
                inverse_preserves_q=quadratic_form_pullback(element.inverse) == q,
                inverse_is_identity=element.forward.compose(element.inverse).is_identity()
                and element.inverse.compose(element.forward).is_identity(),
            )
        )
    passed = all(r.forward_preserves_q and r.inverse_preserves_q and r.inverse_is_identity for r in rows)
    log_info("q-invariance check finished", function_name="q_check", context={"words": len(rows), "passed": passed})
    return QCheckReport(passed=passed, rows=rows)


__all__ = [
    "act_on_vertex",
    "check_parameters",
    "corner_swap_2",
    "corner_swap_3",
    "derive_common_stabilizer_constraints",
    "element_from_word",
    "elementary",
    "explicit_g",
    "make_generator",
    "q_check",
    "reversal",
    "stabilizer_element",
    "stabilizer_family",
    "swap_14",
    "swap_23",
    "type1_equal",
    "type2_equal",
    "type3_equal",
]
