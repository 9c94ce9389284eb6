"""Instance and sequence file formats.

Instance files::

    # comments and blank lines are ignored
    n 5
    rep L1 L2 R1 L3 R2 L4 R3 L5 R4 R5     # exactly one of "rep" / "edges"
    blue 1 2
    red 4 5

or with an explicit edge list::

    n 4
    edges 3
    1 2
    2 3
    3 4
    blue 1
    red 4

Sequence files::

    MOVES 2
    1 2
    2 3
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .graphs import Graph, Move, ReconfigSequence
from .intervals import IntervalRepresentation, parse_representation


class InstanceFormatError(ValueError):
    pass


@dataclass(frozen=True)
class Instance:
    n: int
    rep: IntervalRepresentation | None
    edge_list: tuple[tuple[int, int], ...] | None
    blue: tuple[int, ...]
    red: tuple[int, ...]

    @cached_property
    def graph(self) -> Graph:
        if self.rep is not None:
            return Graph.from_representation(self.rep)
        return Graph(self.n, self.edge_list or ())


def _meaningful_lines(text: str) -> list[str]:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    return lines


def _parse_vertex_list(parts: list[str], n: int, label: str) -> tuple[int, ...]:
    try:
        ids = [int(p) for p in parts]
    except ValueError:
        raise InstanceFormatError(f"non-integer vertex id in {label} line") from None
    for vid in ids:
        if not 1 <= vid <= n:
            raise InstanceFormatError(f"{label} vertex {vid} out of range 1..{n}")
    if len(set(ids)) != len(ids):
        raise InstanceFormatError(f"duplicate vertex in {label} line")
    return tuple(sorted(ids))


def parse_instance(text: str) -> Instance:
    lines = _meaningful_lines(text)
    if not lines:
        raise InstanceFormatError("empty instance file")

    n: int | None = None
    rep: IntervalRepresentation | None = None
    edge_list: list[tuple[int, int]] | None = None
    blue: tuple[int, ...] | None = None
    red: tuple[int, ...] | None = None

    i = 0
    while i < len(lines):
        parts = lines[i].split()
        key = parts[0]
        if key == "n":
            if n is not None:
                raise InstanceFormatError("duplicate n line")
            if len(parts) != 2 or not parts[1].isdigit() or int(parts[1]) < 1:
                raise InstanceFormatError("n line must be 'n <positive integer>'")
            n = int(parts[1])
        elif key == "rep":
            if n is None:
                raise InstanceFormatError("rep line before n line")
            if rep is not None or edge_list is not None:
                raise InstanceFormatError("multiple rep/edges sections")
            rep = parse_representation(" ".join(parts[1:]))
            if rep.n != n:
                raise InstanceFormatError(f"rep has {rep.n} intervals, expected n={n}")
        elif key == "edges":
            if n is None:
                raise InstanceFormatError("edges line before n line")
            if rep is not None or edge_list is not None:
                raise InstanceFormatError("multiple rep/edges sections")
            if len(parts) != 2 or not parts[1].isdigit():
                raise InstanceFormatError("edges line must be 'edges <count>'")
            m = int(parts[1])
            if m > len(lines) - i - 1:
                raise InstanceFormatError(f"expected {m} edge lines")
            edge_list = []
            for j in range(1, m + 1):
                edge_parts = lines[i + j].split()
                try:
                    u, v = int(edge_parts[0]), int(edge_parts[1])
                except (ValueError, IndexError):
                    raise InstanceFormatError(f"bad edge line: {lines[i + j]!r}") from None
                if len(edge_parts) != 2:
                    raise InstanceFormatError(f"bad edge line: {lines[i + j]!r}")
                if not (1 <= u <= n and 1 <= v <= n) or u == v:
                    raise InstanceFormatError(f"bad edge ({u}, {v}) for n={n}")
                edge_list.append((u, v))
            i += m
        elif key == "blue":
            if n is None:
                raise InstanceFormatError("blue line before n line")
            if blue is not None:
                raise InstanceFormatError("duplicate blue line")
            blue = _parse_vertex_list(parts[1:], n, "blue")
        elif key == "red":
            if n is None:
                raise InstanceFormatError("red line before n line")
            if red is not None:
                raise InstanceFormatError("duplicate red line")
            red = _parse_vertex_list(parts[1:], n, "red")
        else:
            raise InstanceFormatError(f"unknown line: {lines[i]!r}")
        i += 1

    if n is None:
        raise InstanceFormatError("missing n line")
    if rep is None and edge_list is None:
        raise InstanceFormatError("missing rep or edges section")
    if blue is None or red is None:
        raise InstanceFormatError("missing blue or red line")
    return Instance(n, rep, tuple(edge_list) if edge_list is not None else None, blue, red)


def serialize_instance(inst: Instance) -> str:
    out = [f"n {inst.n}"]
    if inst.rep is not None:
        out.append(f"rep {inst.rep.serialize()}")
    else:
        edges = inst.edge_list or ()
        out.append(f"edges {len(edges)}")
        out.extend(f"{u} {v}" for u, v in edges)
    out.append("blue " + " ".join(map(str, inst.blue)))
    out.append("red " + " ".join(map(str, inst.red)))
    return "\n".join(out) + "\n"


def parse_sequence(text: str, initial: tuple[int, ...]) -> ReconfigSequence:
    lines = _meaningful_lines(text)
    if not lines:
        raise InstanceFormatError("empty sequence file")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "MOVES" or not head[1].isdigit():
        raise InstanceFormatError("sequence file must start with 'MOVES <count>'")
    count = int(head[1])
    if len(lines) - 1 != count:
        raise InstanceFormatError(f"expected {count} move lines, found {len(lines) - 1}")
    moves = []
    for line in lines[1:]:
        parts = line.split()
        try:
            src, dst = int(parts[0]), int(parts[1])
        except (ValueError, IndexError):
            raise InstanceFormatError(f"bad move line: {line!r}") from None
        if len(parts) != 2:
            raise InstanceFormatError(f"bad move line: {line!r}")
        moves.append(Move(src, dst))
    return ReconfigSequence(tuple(sorted(initial)), tuple(moves))


def serialize_sequence(seq: ReconfigSequence) -> str:
    out = [f"MOVES {len(seq.moves)}"]
    out.extend(f"{src} {dst}" for src, dst in seq.moves)
    return "\n".join(out) + "\n"
