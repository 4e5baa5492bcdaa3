"""Common result record returned by every solver."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class SolveResult:
    """An observer set with its total weight and provenance.

    ``optimal`` is True only when the producing algorithm is exact for the
    instance; ``metadata`` carries ratio bounds, routing notes, timings.
    """

    set: frozenset[int]
    weight: float
    algorithm: str
    optimal: bool
    metadata: dict = field(default_factory=dict)

    def sorted_set(self) -> list[int]:
        return sorted(self.set)
