"""Interval representations given as endpoint strings.

A representation of n intervals is a whitespace-separated string of 2n
tokens ``L<id>`` and ``R<id>``, one left and one right endpoint per
interval, with ids covering 1..n.  Token positions define integer ranks
1..2n for the endpoints, and intervals are closed, so two intervals
intersect iff neither ends before the other begins.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property


class GraphClass(Enum):
    PROPER = "PROPER"
    TRIVIALLY_PERFECT = "TRIVIALLY_PERFECT"
    NEITHER = "NEITHER"


class RepresentationError(ValueError):
    """Malformed endpoint string; ``position`` is the 1-based token index."""

    def __init__(self, message: str, position: int):
        super().__init__(f"token {position}: {message}")
        self.position = position


@dataclass(frozen=True)
class IntervalRepresentation:
    """An endpoint string, stored as a tuple of ("L"|"R", vertex id) events."""

    events: tuple[tuple[str, int], ...]

    @cached_property
    def n(self) -> int:
        return len(self.events) // 2

    @cached_property
    def left_rank(self) -> list[int]:
        """1-based rank of each vertex's left endpoint, indexed by vertex id."""
        ranks = [0] * (self.n + 1)
        for rank, (side, vid) in enumerate(self.events, start=1):
            if side == "L":
                ranks[vid] = rank
        return ranks

    @cached_property
    def right_rank(self) -> list[int]:
        ranks = [0] * (self.n + 1)
        for rank, (side, vid) in enumerate(self.events, start=1):
            if side == "R":
                ranks[vid] = rank
        return ranks

    def left_order(self) -> list[int]:
        """Vertex ids sorted by left endpoint rank."""
        return [vid for side, vid in self.events if side == "L"]

    def right_order(self) -> list[int]:
        return [vid for side, vid in self.events if side == "R"]

    def serialize(self) -> str:
        return " ".join(f"{side}{vid}" for side, vid in self.events)

    def classify(self) -> GraphClass:
        """Classify the represented graph.

        PROPER iff left and right endpoints appear in the same vertex
        order.  TRIVIALLY_PERFECT iff no two intervals partially overlap
        (every pair is disjoint or nested).  A representation satisfying
        both reports PROPER.
        """
        if self.left_order() == self.right_order():
            return GraphClass.PROPER
        stack: list[int] = []
        for side, vid in self.events:
            if side == "L":
                stack.append(vid)
            elif stack and stack[-1] == vid:
                stack.pop()
            else:
                return GraphClass.NEITHER
        return GraphClass.TRIVIALLY_PERFECT

    def component_segments(self) -> list[list[int]]:
        """Vertex ids of each connected component, split where the count
        of open intervals returns to zero; components in left-to-right
        order, vertices in left-rank order within each."""
        components: list[list[int]] = []
        current: list[int] = []
        open_count = 0
        for side, vid in self.events:
            if side == "L":
                current.append(vid)
                open_count += 1
            else:
                open_count -= 1
                if open_count == 0:
                    components.append(current)
                    current = []
        return components

    def intersection_edges(self) -> list[tuple[int, int]]:
        """Edges of the intersection graph via a left-to-right sweep."""
        edges: list[tuple[int, int]] = []
        active: set[int] = set()
        for side, vid in self.events:
            if side == "L":
                edges.extend((other, vid) if other < vid else (vid, other) for other in active)
                active.add(vid)
            else:
                active.discard(vid)
        return edges


def parse_representation(text: str) -> IntervalRepresentation:
    """Parse an endpoint string, reporting the offending token position on error."""
    tokens = text.split()
    events: list[tuple[str, int]] = []
    for pos, tok in enumerate(tokens, start=1):
        side, digits = tok[:1], tok[1:]
        if side not in ("L", "R") or not digits.isdigit() or int(digits) < 1:
            raise RepresentationError(f"malformed endpoint token {tok!r}", pos)
        events.append((side, int(digits)))

    seen_left: dict[int, int] = {}
    seen_right: dict[int, int] = {}
    for pos, (side, vid) in enumerate(events, start=1):
        if side == "L":
            if vid in seen_left:
                raise RepresentationError(f"duplicate LEFT endpoint for vertex {vid}", pos)
            seen_left[vid] = pos
        else:
            if vid in seen_right:
                raise RepresentationError(f"duplicate RIGHT endpoint for vertex {vid}", pos)
            if vid not in seen_left:
                raise RepresentationError(f"RIGHT endpoint before LEFT for vertex {vid}", pos)
            seen_right[vid] = pos
    for vid, pos in seen_left.items():
        if vid not in seen_right:
            raise RepresentationError(f"missing RIGHT endpoint for vertex {vid}", pos)

    n = len(seen_left)
    if any(vid > n for vid in seen_left):
        pos, bad = min((seen_left[vid], vid) for vid in seen_left if vid > n)
        raise RepresentationError(f"vertex ids must cover 1..{n}, found {bad}", pos)
    return IntervalRepresentation(tuple(events))
