"""Graphs, token sets, moves, and structural recognizers."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .intervals import IntervalRepresentation


class Move(NamedTuple):
    src: int
    dst: int


@dataclass(frozen=True)
class IndependentSet:
    vertices: tuple[int, ...]

    @classmethod
    def of(cls, vertices: Iterable[int]) -> "IndependentSet":
        return cls(tuple(sorted(set(vertices))))

    @property
    def k(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class ReconfigSequence:
    """A slide sequence: the initial token set and one move per step."""

    initial: tuple[int, ...]
    moves: tuple[Move, ...]

    @property
    def move_count(self) -> int:
        return len(self.moves)

    @property
    def length_in_sets(self) -> int:
        return len(self.moves) + 1

    def sets(self) -> list[tuple[int, ...]]:
        """Every token set along the sequence, without legality checks."""
        current = set(self.initial)
        out = [tuple(sorted(current))]
        for src, dst in self.moves:
            current.discard(src)
            current.add(dst)
            out.append(tuple(sorted(current)))
        return out

    def final(self) -> tuple[int, ...]:
        return self.sets()[-1]


class Graph:
    """Undirected simple graph on vertices 1..n with immutable adjacency."""

    __slots__ = ("n", "adj", "_edges", "_components")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        adj: list[list[int]] = [[] for _ in range(n + 1)]
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge ({u}, {v}) out of range 1..{n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                continue
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
        self.n = n
        self.adj = tuple(tuple(sorted(neighbors)) for neighbors in adj)
        self._edges = tuple(sorted(seen))
        self._components: list[list[int]] | None = None

    @classmethod
    def from_representation(cls, rep: IntervalRepresentation) -> "Graph":
        return cls(rep.n, rep.intersection_edges())

    @property
    def m(self) -> int:
        return len(self._edges)

    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def components(self) -> list[list[int]]:
        if self._components is None:
            seen = [False] * (self.n + 1)
            comps: list[list[int]] = []
            for start in range(1, self.n + 1):
                if seen[start]:
                    continue
                seen[start] = True
                comp = [start]
                queue = deque([start])
                while queue:
                    u = queue.popleft()
                    for w in self.adj[u]:
                        if not seen[w]:
                            seen[w] = True
                            comp.append(w)
                            queue.append(w)
                comps.append(sorted(comp))
            self._components = comps
        return self._components

    @property
    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def is_independent(self, vertices: Iterable[int]) -> bool:
        vs = set(vertices)
        return all(w not in vs for v in vs for w in self.adj[v])

    def bfs_distances(self, source: int) -> list[int]:
        """Distance from source to every vertex; -1 for unreachable.  Index 0 unused."""
        dist = [-1] * (self.n + 1)
        dist[source] = 0
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for w in self.adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        dist[0] = 0
        return dist

    def distance(self, u: int, v: int) -> int:
        return self.bfs_distances(u)[v]


def intersection_graph(rep: IntervalRepresentation) -> Graph:
    return Graph.from_representation(rep)


def find_strong_twins(g: Graph) -> list[tuple[int, int]]:
    """All pairs with identical closed neighborhoods, sorted."""
    groups: dict[tuple[int, ...], list[int]] = {}
    for v in range(1, g.n + 1):
        key = tuple(sorted((*g.adj[v], v)))
        groups.setdefault(key, []).append(v)
    twins = []
    for members in groups.values():
        for i in range(len(members)):
            for j in range(i + 1, len(members)):
                twins.append((members[i], members[j]))
    return sorted(twins)


@dataclass(frozen=True)
class ValidationResult:
    ok: bool
    step: int | None = None
    reason: str | None = None


def validate_sequence(
    g: Graph,
    blue: Iterable[int],
    red: Iterable[int],
    seq,
) -> ValidationResult:
    """Replay a sequence move by move.

    ``seq`` is a ReconfigSequence or a bare iterable of (src, dst) moves
    starting from blue.  Checks that the sequence starts at blue, ends at
    red, and that every step slides one token along an edge into an
    unoccupied vertex while keeping the set independent.  The step index
    of the first violation is 1-based; step 0 flags a wrong initial set.
    """
    blue_set = set(blue)
    red_set = set(red)
    if isinstance(seq, ReconfigSequence):
        initial, moves = seq.initial, seq.moves
    else:
        initial, moves = tuple(blue_set), tuple(seq)
    if set(initial) != blue_set:
        return ValidationResult(False, 0, "WRONG_INITIAL_SET")
    if not g.is_independent(blue_set):
        return ValidationResult(False, 0, "NOT_INDEPENDENT")
    current = set(blue_set)
    for step, (src, dst) in enumerate(moves, start=1):
        if src not in current:
            return ValidationResult(False, step, "SOURCE_NOT_OCCUPIED")
        if dst in current:
            return ValidationResult(False, step, "TARGET_OCCUPIED")
        if dst not in g.adj[src]:
            return ValidationResult(False, step, "NOT_AN_EDGE")
        current.discard(src)
        if any(w in current for w in g.adj[dst]):
            current.add(src)
            return ValidationResult(False, step, "NOT_INDEPENDENT")
        current.add(dst)
    if current != red_set:
        return ValidationResult(False, len(moves), "WRONG_FINAL_SET")
    return ValidationResult(True)


class CaterpillarError(ValueError):
    def __init__(self, kind: str, message: str):
        super().__init__(message)
        self.kind = kind


@dataclass(frozen=True)
class CaterpillarStructure:
    """Spine order plus the leaves hanging off each spine vertex.

    ``leaves[i]`` lists the leaf vertices of ``spine[i]``.  Graphs with
    fewer than three vertices have an empty spine and are handled as
    degenerate cases by callers.  A bare path contributes its endpoints
    as the leaves of the first and last spine vertex.
    """

    spine: tuple[int, ...]
    leaves: tuple[tuple[int, ...], ...]

    def locate(self) -> dict[int, tuple[int, str]]:
        """vertex -> (spine index, "S" for spine or "L" for leaf)."""
        where: dict[int, tuple[int, str]] = {}
        for i, s in enumerate(self.spine):
            where[s] = (i, "S")
            for leaf in self.leaves[i]:
                where[leaf] = (i, "L")
        return where


def recognize_caterpillar(g: Graph) -> CaterpillarStructure:
    """Check that g is a caterpillar tree and extract its spine.

    The spine is the path left after removing degree-1 vertices; it is
    oriented to start at its lower-numbered end.  Raises CaterpillarError
    with kind DISCONNECTED, CYCLIC, or NOT_CATERPILLAR.
    """
    if not g.is_connected:
        raise CaterpillarError("DISCONNECTED", "graph is not connected")
    if g.m != g.n - 1:
        raise CaterpillarError("CYCLIC", "graph contains a cycle")
    if g.n <= 2:
        return CaterpillarStructure((), ())

    core = [v for v in range(1, g.n + 1) if g.degree(v) >= 2]
    core_set = set(core)
    core_deg = {v: sum(1 for u in g.adj[v] if u in core_set) for v in core}
    if any(d > 2 for d in core_deg.values()):
        raise CaterpillarError("NOT_CATERPILLAR", "spine of the tree is not a path")

    if len(core) == 1:
        spine = list(core)
    else:
        ends = sorted(v for v in core if core_deg[v] <= 1)
        start = ends[0]
        spine = [start]
        prev = 0
        while True:
            nxt = [u for u in g.adj[spine[-1]] if u in core_set and u != prev]
            if not nxt:
                break
            prev = spine[-1]
            spine.append(nxt[0])
    leaves = tuple(
        tuple(sorted(u for u in g.adj[s] if u not in core_set)) for s in spine
    )
    return CaterpillarStructure(tuple(spine), leaves)
