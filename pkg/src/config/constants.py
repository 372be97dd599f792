"""
src.config.constants

================================================================================
Global Toolkit Constants
================================================================================

Overview
--------
This module defines fixed, hard-coded constants used throughout the toolkit.
These values are *not* environment-configurable and are intended to remain
stable across runs, because golden outputs and exit-status contracts depend
on them.

Includes:
- CLI exit-status contract
- Variable and parameter names used for canonical rendering
- Gram matrix of the quadratic form q = x1*x4 - x2*x3
- Output formats accepted by the CLI
"""

from fractions import Fraction

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_USAGE = 2

VARIABLE_NAMES = ("x1", "x2", "x3", "x4")

# Stabiliser parameters; a, b, a', b' are Laurent (invertible).
PARAMETER_NAMES = ("a", "b", "c", "d", "a'", "b'", "c'", "d'")
LAURENT_PARAMETERS = frozenset({0, 1, 4, 5})

_HALF = Fraction(1, 2)
Q_GRAM = (
    (Fraction(0), Fraction(0), Fraction(0), _HALF),
    (Fraction(0), Fraction(0), -_HALF, Fraction(0)),
    (Fraction(0), -_HALF, Fraction(0), Fraction(0)),
    (_HALF, Fraction(0), Fraction(0), Fraction(0)),
)

OUTPUT_FORMATS = ("json", "text", "dot")

INFINITY_LABEL = "inf"
