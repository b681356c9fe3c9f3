"""Finitely supported degree -> dimension maps."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class GradedDims:
    """Graded vector space dimensions; zero values are never stored.

    Convention: a deformation of negative weight -e is recorded at
    degree -e, so deformation-variable weights are the negated keys.
    """

    entries: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(
            self, "entries", {d: n for d, n in self.entries.items() if n}
        )

    @property
    def total(self) -> int:
        return sum(self.entries.values())

    def positive_part(self) -> int:
        return sum(n for d, n in self.entries.items() if d > 0)

    def negative_part(self) -> int:
        return sum(n for d, n in self.entries.items() if d < 0)

    def degree_zero(self) -> int:
        return self.entries.get(0, 0)

    def __getitem__(self, d: int) -> int:
        return self.entries.get(d, 0)

    def __iter__(self):
        return iter(sorted(self.entries.items()))

    def to_json(self) -> dict:
        return {str(d): n for d, n in sorted(self.entries.items())}

    def __str__(self):
        inner = ", ".join(f"{d}: {n}" for d, n in sorted(self.entries.items()))
        return "{" + inner + "}"
