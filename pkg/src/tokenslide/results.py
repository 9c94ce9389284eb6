"""Shared solver result and error types."""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Move


class SolverInputError(ValueError):
    """Input violates a solver precondition (wrong class, twins, ...).

    Distinct from a NO answer: a NO means the reconfiguration provably
    does not exist, an input error means the question was ill-posed.
    """

    def __init__(self, kind: str, message: str, details: tuple = ()):
        super().__init__(message)
        self.kind = kind
        self.details = details


@dataclass(frozen=True)
class SolveResult:
    """Outcome of a solver run.

    ``moves`` is None when solving in decision-only mode; a NO answer
    carries a machine-readable reason and the witnessing vertices.
    """

    status: str  # "YES" | "NO"
    moves: tuple[Move, ...] | None = None
    reason: str | None = None
    witness: tuple[int, ...] = ()

    @property
    def yes(self) -> bool:
        return self.status == "YES"

    @property
    def move_count(self) -> int | None:
        return None if self.moves is None else len(self.moves)


def no_result(reason: str, witness: tuple[int, ...] = ()) -> SolveResult:
    return SolveResult("NO", None, reason, witness)


def yes_result(moves) -> SolveResult:
    return SolveResult("YES", tuple(moves))
