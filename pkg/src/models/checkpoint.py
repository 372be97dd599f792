"""
src.models.checkpoint

================================================================================
Checkpoint Systems
================================================================================

Overview
--------
A checkpoint system is the data that certifies über-contraction of an
isometry h along a quasi-line Λ: finite vertex sets S_i (in the tested
instances, translates h^i S), an index map i playing the role of the
quasi-isometry Λ -> ℝ, and an error constant L >= 0.

Λ is the union of the checkpoints; the index of a vertex of Λ is the index
of the checkpoint that contains it.
"""

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Mapping, Optional, Sequence, Tuple

from src.exceptions.custom_exceptions import InputError

VertexMap = Mapping[int, int]


@dataclass(frozen=True)
class CheckpointSystem:
    """
    Ordered checkpoints with strictly increasing indices.

    :param checkpoints: Finite vertex sets S_i.
    :type checkpoints: Tuple[FrozenSet[int], ...]
    :param indices: Index of each checkpoint.
    :type indices: Tuple[int, ...]
    :param error_constant: The constant L.
    :type error_constant: int
    :raises InputError: On mismatched lengths, non-increasing indices, L < 0,
        empty or overlapping checkpoints.
    """

    checkpoints: Tuple[FrozenSet[int], ...]
    indices: Tuple[int, ...]
    error_constant: int = 0

    def __post_init__(self):
        if len(self.checkpoints) != len(self.indices):
            raise InputError(
                "Checkpoint and index counts differ",
                details={"checkpoints": len(self.checkpoints), "indices": len(self.indices)},
            )
        if any(b <= a for a, b in zip(self.indices, self.indices[1:])):
            raise InputError("Checkpoint indices must be strictly increasing", details={"indices": self.indices})
        if self.error_constant < 0:
            raise InputError("Error constant must be non-negative", details={"L": self.error_constant})
        seen: set = set()
        for s in self.checkpoints:
            if not s:
                raise InputError("Checkpoints must be non-empty")
            if seen & s:
                raise InputError("Checkpoints must be pairwise disjoint", details={"overlap": seen & s})
            seen |= s

    @classmethod
    def from_sets(cls, sets: Iterable[Iterable[int]], indices: Optional[Sequence[int]] = None, error_constant: int = 0):
        frozen = tuple(frozenset(s) for s in sets)
        return cls(frozen, tuple(indices) if indices is not None else tuple(range(len(frozen))), error_constant)

    @classmethod
    def from_translates(
        cls,
        h: VertexMap,
        seed: Iterable[int],
        backward: int,
        forward: int,
        error_constant: int = 0,
    ) -> "CheckpointSystem":
        """
        The translates h^i S for -backward <= i <= forward that exist in the region.

        Translates are followed until h (or its inverse) is undefined on some
        vertex of the current set.

        :param h: Partial vertex bijection.
        :param seed: The set S.
        :param backward: Largest negative power tried.
        :param forward: Largest positive power tried.
        :param error_constant: The constant L.
        :return: The system indexed by the power of h.
        :rtype: CheckpointSystem
        """
        inverse = {w: v for v, w in h.items()}
        base = frozenset(seed)
        sets: Dict[int, FrozenSet[int]] = {0: base}
        current = base
        for i in range(1, forward + 1):
            if not all(v in h for v in current):
                break
            current = frozenset(h[v] for v in current)
            sets[i] = current
        current = base
        for i in range(1, backward + 1):
            if not all(v in inverse for v in current):
                break
            current = frozenset(inverse[v] for v in current)
            sets[-i] = current
        order = sorted(sets)
        return cls(tuple(sets[i] for i in order), tuple(order), error_constant)

    @property
    def line(self) -> FrozenSet[int]:
        return frozenset().union(*self.checkpoints)

    @property
    def index_map(self) -> Dict[int, int]:
        return {v: i for s, i in zip(self.checkpoints, self.indices) for v in s}
