"""
src.models.tame_element

================================================================================
Tame Elements
================================================================================

Overview
--------
A `TameElement` is a word in the generators together with its expanded
forward and inverse polynomial 4-maps. The word [w1, ..., wn] denotes the
composite w1∘w2∘...∘wn (w1 applied last), so multiplication is
concatenation of words and composition of maps:

    (s * t).forward = s.forward ∘ t.forward
    (s * t).inverse = t.inverse ∘ s.inverse

Words are not canonical; equality of elements is equality of forward maps.
"""

from dataclasses import dataclass
from typing import Iterable, Tuple

from src.algebra.polymap import PolyMap4, quadratic_form_pullback, q_polynomial
from src.exceptions.custom_exceptions import AlgebraError
from src.models.generator import Generator

Letter = Tuple[Generator, int]


@dataclass(frozen=True, eq=False)
class TameElement:
    word: Tuple[Letter, ...]
    forward: PolyMap4
    inverse: PolyMap4

    @classmethod
    def identity(cls) -> "TameElement":
        ident = PolyMap4.identity()
        return cls((), ident, ident)

    @classmethod
    def from_word(cls, word: Iterable[Letter]) -> "TameElement":
        """
        Expand a word of (generator, sign) letters.

        :param word: Letters, sign +1 or -1.
        :type word: Iterable[Letter]
        :return: The element with both maps composed.
        :rtype: TameElement
        """
        element = cls.identity()
        for generator, sign in word:
            element = element * cls.letter(generator, sign)
        return element

    @classmethod
    def letter(cls, generator: Generator, sign: int = 1) -> "TameElement":
        if sign not in (1, -1):
            raise AlgebraError("Letter sign must be +1 or -1", details={"sign": sign})
        return cls(((generator, sign),), generator.map_for(sign), generator.map_for(-sign))

    def __mul__(self, other: "TameElement") -> "TameElement":
        if not isinstance(other, TameElement):
            return NotImplemented
        if not other.word:
            return self
        if not self.word:
            return other
        return TameElement(
            self.word + other.word,
            self.forward.compose(other.forward),
            other.inverse.compose(self.inverse),
        )

    def inverted(self) -> "TameElement":
        word = tuple((g, -s) for g, s in reversed(self.word))
        return TameElement(word, self.inverse, self.forward)

    def __pow__(self, power: int) -> "TameElement":
        base = self if power >= 0 else self.inverted()
        result = TameElement.identity()
        for _ in range(abs(power)):
            result = result * base
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TameElement):
            return NotImplemented
        return self.forward == other.forward

    def __hash__(self) -> int:
        return hash(self.forward)

    def render_word(self) -> str:
        if not self.word:
            return "id"
        return " * ".join(g.render(s) for g, s in self.word)

    def check_invariants(self) -> None:
        """
        Verify forward∘inverse = inverse∘forward = id and q-invariance.

        :raises AlgebraError: If any identity fails.
        """
        if not self.forward.compose(self.inverse).is_identity() or not self.inverse.compose(self.forward).is_identity():
            raise AlgebraError("Forward and inverse maps are not mutually inverse", details={"word": self.render_word()})
        q = q_polynomial()
        if quadratic_form_pullback(self.forward) != q or quadratic_form_pullback(self.inverse) != q:
            raise AlgebraError("Element does not preserve the quadratic form", details={"word": self.render_word()})
