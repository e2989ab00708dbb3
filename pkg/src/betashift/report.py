"""Count results shared by the formula and oracle paths."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field


class Status(str, enum.Enum):
    EXACT = "exact"
    LOWER_BOUND = "lower_bound"
    UPPER_BOUND = "upper_bound"


@dataclass(frozen=True)
class CountReport:
    """An integer count together with how far it can be trusted.

    ``params`` records what produced the value: ``horizon`` (``None`` for
    exact kneading data), ``depth`` for oracle runs, and
    ``aperiodic_assumed`` whenever an aperiodicity assertion was relied on.
    """

    n: int
    value: int
    status: Status
    provenance: str = "formula"
    params: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "value": self.value,
            "status": self.status.value,
            "provenance": self.provenance,
            "params": dict(sorted(self.params.items())),
        }
