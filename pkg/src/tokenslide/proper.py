"""Shortest sliding-token schedules on connected proper interval graphs.

Vertices are renumbered by left-endpoint order; each blue token is paired
with the red target of equal rank.  Pairs are interleaved into a colored
string whose height profile (+1 blue, -1 red) cuts it into blocks at the
zero crossings.  Tokens inside a block all travel the same way and every
token follows its shortest path, so the schedule meets the lower bound
of summed pairwise distances.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .graphs import Move
from .intervals import GraphClass, IntervalRepresentation
from .results import SolveResult, SolverInputError, no_result, yes_result


@dataclass(frozen=True)
class ColoredString:
    """Token endpoints in canonical position order, blue before red when
    a vertex carries both colors."""

    entries: tuple[tuple[int, str], ...]

    @property
    def k(self) -> int:
        return len(self.entries) // 2


@dataclass(frozen=True)
class Block:
    """Maximal run of the colored string between height-zero crossings.

    ``span`` and ``tokens`` are 1-based inclusive ranges of string entries
    and token indices; ``start_color`` decides the travel direction.
    """

    index: int
    span: tuple[int, int]
    tokens: tuple[int, int]
    start_color: str


def canonical_order(rep: IntervalRepresentation) -> tuple[int, ...]:
    """Vertices sorted by left endpoint; the right endpoints close in the
    same order, so position in this tuple acts as a linear layout."""
    cls = rep.classify()
    if cls is not GraphClass.PROPER:
        raise SolverInputError(
            "NOT_PROPER",
            "left and right endpoints close in different orders",
        )
    if len(rep.component_segments()) > 1:
        raise SolverInputError(
            "DISCONNECTED",
            "representation splits into several components",
        )
    return tuple(rep.left_order())


def _reach(rep: IntervalRepresentation, order: tuple[int, ...]):
    """Per-canonical-position closed neighborhood bounds.

    hi[i] counts left endpoints before interval i closes, lo[i] mirrors
    it from the right; N[i] is exactly the positions lo[i]..hi[i].
    """
    n = len(order)
    pos = {v: i for i, v in enumerate(order, start=1)}
    hi = [0] * (n + 1)
    lo = [0] * (n + 1)
    lefts = 0
    for side, vid in rep.events:
        if side == "L":
            lefts += 1
        else:
            hi[pos[vid]] = lefts
    rights = 0
    for side, vid in reversed(rep.events):
        if side == "R":
            rights += 1
        else:
            lo[pos[vid]] = n + 1 - rights
    return pos, hi, lo


def _strong_twin_pairs(order, hi, lo) -> tuple[tuple[int, int], ...]:
    # equal neighborhood ranges only happen at consecutive positions
    pairs = []
    for i in range(1, len(order)):
        if hi[i] == hi[i + 1] and lo[i] == lo[i + 1]:
            a, b = order[i - 1], order[i]
            pairs.append((a, b) if a < b else (b, a))
    return tuple(pairs)


def _check_tokens(label: str, tokens, order, pos, hi) -> None:
    seen = set()
    for v in tokens:
        if v not in pos:
            raise SolverInputError(
                "UNKNOWN_VERTEX", f"{label} token {v} is not a vertex", (v,)
            )
        if v in seen:
            raise SolverInputError(
                "NOT_INDEPENDENT", f"{label} lists vertex {v} twice", (v, v)
            )
        seen.add(v)
    by_pos = sorted(pos[v] for v in tokens)
    for a, b in zip(by_pos, by_pos[1:]):
        if b <= hi[a]:
            raise SolverInputError(
                "NOT_INDEPENDENT",
                f"{label} tokens touch each other",
                (order[a - 1], order[b - 1]),
            )


def build_string(order: tuple[int, ...], blue, red) -> ColoredString:
    """Interleave blue starts and red targets by canonical position."""
    blue = tuple(blue)
    red = tuple(red)
    if len(blue) != len(red):
        raise ValueError(
            f"cardinality mismatch: {len(blue)} blue vs {len(red)} red"
        )
    pos = {v: i for i, v in enumerate(order, start=1)}
    for v in (*blue, *red):
        if v not in pos:
            raise ValueError(f"token {v} is not a vertex of the representation")
    keyed = sorted(
        [(pos[v], 0, v) for v in blue] + [(pos[v], 1, v) for v in red]
    )
    return ColoredString(
        tuple((v, "B" if c == 0 else "R") for _, c, v in keyed)
    )


def compute_heights(s: ColoredString) -> tuple[int, ...]:
    """Prefix balance of the string: +1 per blue entry, -1 per red."""
    h = [0]
    for _, color in s.entries:
        h.append(h[-1] + (1 if color == "B" else -1))
    return tuple(h)


def partition_blocks(s: ColoredString, heights) -> tuple[Block, ...]:
    """Cut the string at every return to height zero."""
    if heights[-1] != 0:
        raise ValueError("unbalanced colored string")
    blocks: list[Block] = []
    start = 1
    for i in range(1, len(s.entries) + 1):
        if heights[i] == 0:
            blocks.append(
                Block(
                    index=len(blocks),
                    span=(start, i),
                    tokens=(start // 2 + 1, i // 2),
                    start_color=s.entries[start - 1][1],
                )
            )
            start = i + 1
    return tuple(blocks)


def block_order(blocks: tuple[Block, ...], s: ColoredString) -> tuple[int, ...]:
    """Processing order of blocks.

    A red target followed by a blue start across a boundary means the
    right block must vacate first; the mirrored boundary forces the left
    block first.  Same-colored boundaries are free because each color is
    an independent set.  Ties break toward the lowest block index.
    """
    k = len(blocks)
    succs: list[list[int]] = [[] for _ in range(k)]
    indeg = [0] * k
    for i in range(k - 1):
        left_color = s.entries[blocks[i].span[1] - 1][1]
        right_color = s.entries[blocks[i + 1].span[0] - 1][1]
        if left_color == "R" and right_color == "B":
            succs[i + 1].append(i)
            indeg[i] += 1
        elif left_color == "B" and right_color == "R":
            succs[i].append(i + 1)
            indeg[i + 1] += 1
    heap = [i for i in range(k) if indeg[i] == 0]
    heapq.heapify(heap)
    out: list[int] = []
    while heap:
        i = heapq.heappop(heap)
        out.append(i)
        for j in succs[i]:
            indeg[j] -= 1
            if indeg[j] == 0:
                heapq.heappush(heap, j)
    assert len(out) == k, "boundary constraints formed a cycle"
    return tuple(out)


def _walk(pos, hi, lo, order, frm: int, to: int) -> tuple[int, ...]:
    if frm == to:
        return ()
    path = [frm]
    cur, tgt = pos[frm], pos[to]
    while cur != tgt:
        cur = min(hi[cur], tgt) if tgt > cur else max(lo[cur], tgt)
        path.append(order[cur - 1])
    return tuple(path)


def token_path(rep: IntervalRepresentation, frm: int, to: int) -> tuple[int, ...]:
    """Shortest vertex path between two vertices, empty when they match.

    Each hop jumps to the farthest neighbor toward the target, which is
    optimal because neighborhoods are consecutive in canonical order.
    """
    order = canonical_order(rep)
    pos, hi, lo = _reach(rep, order)
    return _walk(pos, hi, lo, order, frm, to)


def _paired_tokens(pos, blue, red):
    bl = sorted(blue, key=pos.__getitem__)
    rd = sorted(red, key=pos.__getitem__)
    return bl, rd


def _block_token_sequence(blocks, seq):
    """Token indices in emission order: rightmost first in blue-start
    blocks, leftmost first in red-start blocks."""
    for bi in seq:
        first, last = blocks[bi].tokens
        if blocks[bi].start_color == "B":
            yield from range(last, first - 1, -1)
        else:
            yield from range(first, last + 1)


def token_schedule(rep: IntervalRepresentation, blue, red):
    """Emission order as (token index, direction) pairs; direction is
    R or L by canonical position, C for tokens already in place."""
    order = canonical_order(rep)
    pos, hi, lo = _reach(rep, order)
    s = build_string(order, blue, red)
    blocks = partition_blocks(s, compute_heights(s))
    seq = block_order(blocks, s)
    bl, rd = _paired_tokens(pos, blue, red)
    out = []
    for t in _block_token_sequence(blocks, seq):
        b, r = bl[t - 1], rd[t - 1]
        if b == r:
            direction = "C"
        else:
            direction = "R" if pos[r] > pos[b] else "L"
        out.append((t, direction))
    return tuple(out)


def solve_proper(
    rep: IntervalRepresentation, blue, red, decide: bool = False
) -> SolveResult:
    """Minimum-length slide schedule moving blue onto red.

    Connected twin-free proper interval graphs always admit one when the
    two sets have equal size, and every emitted schedule has exactly the
    summed pairwise shortest-path length.  With ``decide`` the answer
    comes without a schedule, skipping the quadratic move expansion.
    """
    order = canonical_order(rep)
    pos, hi, lo = _reach(rep, order)
    twins = _strong_twin_pairs(order, hi, lo)
    if twins:
        raise SolverInputError(
            "STRONG_TWINS",
            "vertices with identical closed neighborhoods present",
            twins,
        )
    _check_tokens("blue", blue, order, pos, hi)
    _check_tokens("red", red, order, pos, hi)
    if len(tuple(blue)) != len(tuple(red)):
        return no_result("CARDINALITY_MISMATCH", (len(tuple(blue)), len(tuple(red))))
    if decide:
        return SolveResult("YES")
    s = build_string(order, blue, red)
    blocks = partition_blocks(s, compute_heights(s))
    seq = block_order(blocks, s)
    bl, rd = _paired_tokens(pos, blue, red)
    moves: list[Move] = []
    for t in _block_token_sequence(blocks, seq):
        path = _walk(pos, hi, lo, order, bl[t - 1], rd[t - 1])
        moves.extend(Move(a, b) for a, b in zip(path, path[1:]))
    return yes_result(moves)


def _sub_representation(rep: IntervalRepresentation, segment):
    """Events restricted to one component, ids remapped to 1..m in
    left-endpoint order; returns the new-to-old id map alongside."""
    keep = set(segment)
    fwd: dict[int, int] = {}
    events = []
    for side, vid in rep.events:
        if vid in keep:
            if side == "L":
                fwd[vid] = len(fwd) + 1
            events.append((side, fwd[vid]))
    back = {new: old for old, new in fwd.items()}
    return IntervalRepresentation(tuple(events)), back


def solve_proper_components(rep: IntervalRepresentation, blue, red) -> SolveResult:
    """Like solve_proper but tolerant of disconnected representations.

    Tokens cannot cross components, so each component is solved on its
    own and the schedules are concatenated; a component holding unequal
    numbers of blue and red tokens makes the whole instance a NO.
    """
    segments = rep.component_segments()
    if len(segments) == 1:
        return solve_proper(rep, blue, red)
    blue = tuple(blue)
    red = tuple(red)
    if len(blue) != len(red):
        return no_result("CARDINALITY_MISMATCH", (len(blue), len(red)))
    moves: list[Move] = []
    for segment in segments:
        keep = set(segment)
        sub, back = _sub_representation(rep, segment)
        into = {old: new for new, old in back.items()}
        b = tuple(sorted(into[v] for v in blue if v in keep))
        r = tuple(sorted(into[v] for v in red if v in keep))
        if len(b) != len(r):
            return no_result("COMPONENT_UNBALANCED", (min(segment),))
        res = solve_proper(sub, b, r)
        if not res.yes:
            return res
        moves.extend(Move(back[a], back[c]) for a, c in res.moves)
    return yes_result(moves)
