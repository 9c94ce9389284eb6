"""Shortest sliding-token schedules on caterpillar trees.

A caterpillar is a tree whose non-leaf vertices form a path, the
spine.  Each spine vertex together with the leaves hanging from it
forms a group; groups are the natural unit of movement because every
walk between groups runs along the spine.

The solver decides reachability through three structural obstructions
and otherwise emits a move-minimal schedule:

* A group whose leaves must hold two or more tokens can never be
  loaded or unloaded, since the last token in (or first token out)
  would pass the spine vertex while another leaf token pins it.  Such
  groups either carry the same tokens on both sides (then they are
  frozen and can be cut out of the graph) or make the instance
  infeasible (TWIN_LEAVES_BLOCKED).

* Leaf tokens can anchor walls: an alternating pattern of occupied
  spine cell, free spine cell, occupied spine cell, ... running from
  one leaf anchor to another freezes every token in between.  The
  frozen region must look identical from the blue and the red side, or
  the instance is infeasible (LOCK_MISMATCH).  Identical regions are
  cut out and the remainder is solved recursively.

* Tokens cannot change connected component, so each component (also
  after cutting) needs equally many blue and red tokens
  (COMPONENT_UNBALANCED).

Scheduling then mirrors the proper-interval solver: pair the i-th blue
with the i-th red in group order, write blue starts and red targets
into one string sorted by group, split it into blocks where the
start/target balance returns to zero, and order the blocks so that a
block settling tokens next to another block's territory runs at the
right time.  Tokens inside a rightward block move rightmost-first,
leftward blocks leftmost-first.  One ingredient has no proper-interval
counterpart: a traveler may find a standing token next to its route
and must make way for itself, parking the bystander on a leaf (or
pushing it down the spine) and letting it return afterwards.  Each
such detour costs exactly the two extra moves the distance bound
charges for it.
"""

from __future__ import annotations

from heapq import heappop, heappush

from .graphs import Graph
from .results import SolveResult, SolverInputError, no_result, yes_result

_MAKE_WAY_LIMIT = 64


class _Unreachable(Exception):
    """Internal signal that a NO answer was found while recursing."""

    def __init__(self, reason: str, witness: tuple[int, ...]):
        super().__init__(reason)
        self.reason = reason
        self.witness = witness


def _component_cells(adj, cells: set[int]) -> list[list[int]]:
    """Connected components of the subgraph induced on ``cells``."""
    remaining = set(cells)
    out: list[list[int]] = []
    while remaining:
        start = min(remaining)
        comp = [start]
        remaining.discard(start)
        frontier = [start]
        while frontier:
            v = frontier.pop()
            for w in adj[v]:
                if w in remaining:
                    remaining.discard(w)
                    comp.append(w)
                    frontier.append(w)
        out.append(sorted(comp))
    out.sort(key=lambda comp: comp[0])
    return out


def _structure(adj, cells: set[int]) -> tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]:
    """Spine (in path order, smaller end first) and per-group leaf lists.

    ``cells`` must induce a tree with at least three vertices; raises
    NOT_CATERPILLAR when the non-leaf core is not a path.
    """
    deg = {v: sum(1 for w in adj[v] if w in cells) for v in cells}
    core = sorted(v for v in cells if deg[v] >= 2)
    core_set = set(core)
    cdeg = {v: sum(1 for w in adj[v] if w in core_set) for v in core}
    if any(d > 2 for d in cdeg.values()):
        raise SolverInputError(
            "NOT_CATERPILLAR", "non-leaf vertices do not form a path"
        )
    if len(core) == 1:
        spine = core
    else:
        ends = [v for v in core if cdeg[v] <= 1]
        spine = [min(ends)]
        prev = None
        while True:
            nxt = [w for w in adj[spine[-1]] if w in core_set and w != prev]
            if not nxt:
                break
            prev = spine[-1]
            spine.append(nxt[0])
        if len(spine) != len(core):
            raise SolverInputError(
                "NOT_CATERPILLAR", "non-leaf vertices do not form a path"
            )
    leaves = tuple(
        tuple(sorted(w for w in adj[s] if w in cells and w not in core_set))
        for s in spine
    )
    return tuple(spine), leaves


def _mark(spine, leaves, tset: set[int]) -> set[int]:
    """Locked cells of one caterpillar piece under token set ``tset``.

    A group with two or more leaf tokens is locked outright.  A wall
    starts at a group with a leaf token and walks outward: at odd
    offsets the spine cell must carry a token and the group must be
    bare of leaves (a free leaf would let that token escape), at even
    offsets a leaf token seals the wall and anchors the next segment.
    Free leaves at even offsets are merely unusable and do not stop
    the wall.
    """
    m = len(spine)
    tok = [tuple(l for l in leaves[i] if l in tset) for i in range(m)]
    marked: set[int] = set()
    for i in range(m):
        if len(tok[i]) >= 2:
            marked.add(spine[i])
            marked.update(tok[i])
    for start in range(m):
        if not tok[start]:
            continue
        for d in (1, -1):
            anchor = start
            j = start + d
            offset = 1
            while 0 <= j < m:
                if offset % 2 == 1:
                    if spine[j] not in tset or leaves[j]:
                        break
                else:
                    if tok[j]:
                        lo, hi = sorted((anchor, j))
                        marked.update(spine[lo:hi + 1])
                        marked.update(tok[anchor])
                        marked.update(tok[j])
                        anchor = j
                        offset = 0
                    elif spine[j] in tset:
                        break
                j += d
                offset += 1
    return marked


def _check_shape(g: Graph, comps: list[list[int]]):
    """Validate every component and hand back its spine analysis keyed
    by smallest cell, so the solve proper does not redo the work."""
    twins = []
    structs: dict[int, tuple] = {}
    for comp in comps:
        cs = set(comp)
        within = sum(1 for v in comp for w in g.adj[v] if w in cs) // 2
        if within != len(comp) - 1:
            raise SolverInputError(
                "CYCLIC", "graph contains a cycle", (comp[0],)
            )
        if len(comp) == 2:
            twins.append((comp[0], comp[1]))
        elif len(comp) >= 3:
            structs[comp[0]] = _structure(g.adj, cs)
    if twins:
        raise SolverInputError(
            "STRONG_TWINS",
            "two-vertex components are twin pairs",
            tuple(twins),
        )
    return structs


def _check_tokens(label: str, tokens, g: Graph) -> None:
    seen = set()
    for v in tokens:
        if not 1 <= v <= g.n:
            raise SolverInputError(
                "UNKNOWN_VERTEX", f"{label} token {v} is not a vertex", (v,)
            )
        if v in seen:
            raise SolverInputError(
                "NOT_INDEPENDENT", f"{label} lists vertex {v} twice", (v, v)
            )
        seen.add(v)
    for v in seen:
        for w in g.adj[v]:
            if w in seen:
                raise SolverInputError(
                    "NOT_INDEPENDENT",
                    f"{label} tokens touch each other",
                    (min(v, w), max(v, w)),
                )


def mark_locked(g: Graph, tokens) -> frozenset[int]:
    """Vertices frozen in place by the token set, over all components.

    A token set is stuck (no legal slide exists) exactly when every
    token lies on a locked vertex.
    """
    tset = set()
    for v in tokens:
        if not 1 <= v <= g.n:
            raise SolverInputError(
                "UNKNOWN_VERTEX", f"token {v} is not a vertex", (v,)
            )
        tset.add(v)
    comps = [sorted(c) for c in g.components()]
    _check_shape(g, [c for c in comps if len(c) != 2])
    marked: set[int] = set()
    for comp in comps:
        if len(comp) == 1:
            if comp[0] in tset:
                marked.add(comp[0])
            continue
        if len(comp) == 2:
            continue
        spine, leaves = _structure(g.adj, set(comp))
        marked |= _mark(spine, leaves, tset)
    return frozenset(marked)


class _Token:
    __slots__ = ("start", "target", "current")

    def __init__(self, start: int, target: int):
        self.start = start
        self.target = target
        self.current = start


class _Scheduler:
    """Emits one piece's schedule by simulating the actual slides."""

    def __init__(self, adj, spine, leaves, pairs):
        self.adj = adj
        self.spine = spine
        self.leaves = leaves
        self.spine_set = set(spine)
        self.group = {}
        for i, s in enumerate(spine):
            self.group[s] = i
            for l in leaves[i]:
                self.group[l] = i
        self.tokens = [_Token(b, r) for b, r in pairs]
        self.occupied = {t.current: t for t in self.tokens}
        self.owner = {t.target: t for t in self.tokens}
        self.turn: dict[_Token, int] = {}
        self.turn_now = -1
        self.out: list[tuple[int, int]] = []

    # -- movement primitives ------------------------------------------

    def _emit(self, token: _Token, dst: int) -> None:
        src = token.current
        assert dst in self.adj[src] and dst not in self.occupied
        assert all(w == src or w not in self.occupied for w in self.adj[dst])
        del self.occupied[src]
        self.occupied[dst] = token
        token.current = dst
        self.out.append((src, dst))

    def _pending(self, cell: int) -> bool:
        own = self.owner.get(cell)
        return own is not None and own.current != cell

    def _free_leaves(self, gi: int):
        return [l for l in self.leaves[gi] if l not in self.occupied]

    def _push(self, token: _Token, dirn: int, clean: bool = False) -> bool:
        """Move ``token`` one spine cell along ``dirn``, shoving a
        same-direction neighbour two cells over out of the way first
        (unless ``clean`` forbids shoving anyone else).  Fails on leaf
        bystanders or at the end of the spine."""
        gi = self.group[token.current] + dirn
        if not 0 <= gi < len(self.spine):
            return False
        q = self.spine[gi]
        assert q not in self.occupied
        for w in self.adj[q]:
            if w == token.current or w not in self.occupied:
                continue
            if clean or w not in self.spine_set:
                return False
            if not self._displace(self.occupied[w], dirn):
                return False
        if any(w != token.current and w in self.occupied for w in self.adj[q]):
            return False
        self._emit(token, q)
        return True

    def _displace(self, token: _Token, dirn: int) -> bool:
        """Make ``token`` vacate its cell, trying the cheapest escapes
        first: advance it toward its own target when the shove happens
        to point that way, park on a leaf of its group, push it along
        the spine without disturbing anyone, borrow a leaf whose owner
        provably arrives later, and only then shove further tokens or
        grab any leaf left."""
        gi = self.group[token.current]
        gt = self.group[token.target]
        if gt == gi:
            tgt = token.target
            if tgt not in self.spine_set and tgt not in self.occupied:
                self._emit(token, tgt)
                return True
        elif (gt > gi) == (dirn > 0) and self._push(token, dirn):
            return True
        free = self._free_leaves(gi)
        for l in free:
            if not self._pending(l):
                self._emit(token, l)
                return True
        if self._push(token, dirn, clean=True):
            return True
        mine = self.turn.get(token)
        if mine is not None and mine > self.turn_now:
            for l in free:
                own = self.owner[l]
                theirs = self.turn.get(own)
                if theirs is not None and theirs > mine:
                    self._emit(token, l)
                    return True
        if self._push(token, dirn):
            return True
        if free:
            self._emit(token, free[0])
            return True
        return False

    def _make_way(self, traveler: _Token, nxt: int) -> None:
        """Clear the cell ``nxt`` and its neighbourhood so ``traveler``
        can slide there."""
        here = traveler.current
        blocker = self.occupied.get(nxt)
        if blocker is None:
            for w in sorted(self.adj[nxt]):
                if w != here and w in self.occupied:
                    blocker = self.occupied[w]
                    break
        assert blocker is not None
        cell = blocker.current
        assert cell in self.spine_set, "leaf bystanders cannot occur"
        if cell == nxt:
            dirn = self.group[nxt] - self.group[here]
            if dirn == 0:
                dirn = self.group[traveler.target] - self.group[nxt]
        else:
            dirn = self.group[cell] - self.group[nxt]
        dirn = 1 if dirn > 0 else -1
        moved = self._displace(blocker, dirn)
        assert moved, "no room to make way"

    def _route(self, token: _Token) -> list[int]:
        cur, tgt = token.current, token.target
        gc, gt = self.group[cur], self.group[tgt]
        cells: list[int] = []
        if cur not in self.spine_set:
            cells.append(self.spine[gc])
        step = 1 if gt >= gc else -1
        cells.extend(self.spine[g] for g in range(gc + step, gt + step, step))
        if tgt not in self.spine_set:
            cells.append(tgt)
        return cells

    def _legal(self, src: int, dst: int) -> bool:
        if dst in self.occupied:
            return False
        return all(w == src or w not in self.occupied for w in self.adj[dst])

    def _advance(self, token: _Token) -> None:
        for nxt in self._route(token):
            guard = 0
            while not self._legal(token.current, nxt):
                self._make_way(token, nxt)
                guard += 1
                assert guard < _MAKE_WAY_LIMIT, "make-way loop did not settle"
            self._emit(token, nxt)

    # -- block machinery ----------------------------------------------

    def run(self) -> list[tuple[int, int]]:
        first, string = self._classify()
        for token in first:
            self._emit(token, token.target)
        order: list[_Token] = []
        for block in self._block_order(self._blocks(string)):
            entries = block["entries"]
            members = {e[2] for e in entries}
            if entries[0][1] == 0:
                order.extend(sorted(members, key=lambda t: -self.group[t.start]))
            else:
                order.extend(sorted(members, key=lambda t: self.group[t.start]))
        self.turn = {t: i for i, t in enumerate(order)}
        for i, token in enumerate(order):
            self.turn_now = i
            self._advance(token)
        self.turn_now = len(order)
        self._sweep()
        return self.out

    def _classify(self):
        """Split tokens into leaf-drops moved first, string entries for
        the block machinery, and everything handled by the sweep."""
        first: list[_Token] = []
        string: list[tuple[int, int, _Token]] = []
        for t in self.tokens:
            if t.start == t.target:
                continue
            gb, gr = self.group[t.start], self.group[t.target]
            if gb == gr:
                if t.start == self.spine[gb]:
                    first.append(t)  # spine to own leaf: always legal now
                elif t.target == self.spine[gr]:
                    continue  # leaf to own spine: settled by the sweep
                else:
                    string.append((gb, 0, t))
                    string.append((gr, 1, t))
            else:
                string.append((gb, 0, t))
                string.append((gr, 1, t))
        string.sort(key=lambda e: (e[0], e[1]))
        return first, string

    def _blocks(self, string):
        blocks = []
        height = 0
        cur: list[tuple[int, int, _Token]] = []
        for entry in string:
            cur.append(entry)
            height += 1 if entry[1] == 0 else -1
            if height == 0:
                blocks.append({"entries": cur})
                cur = []
        assert not cur, "piece balance was checked before scheduling"
        return blocks

    def _block_order(self, blocks):
        k = len(blocks)
        after = [[] for _ in range(k)]
        indeg = [0] * k

        def edge(a: int, b: int) -> None:
            after[a].append(b)
            indeg[b] += 1

        for i in range(k - 1):
            left, right = blocks[i]["entries"], blocks[i + 1]["entries"]
            glx, clx, tlx = left[-1]
            gry, cry, try_ = right[0]
            if gry == glx:
                assert (clx, cry) == (0, 1)
                edge(i, i + 1)
            elif gry == glx + 1:
                if (clx, cry) == (1, 0):
                    edge(i + 1, i)
                elif (clx, cry) == (0, 1):
                    edge(i, i + 1)
                elif (clx, cry) == (1, 1):
                    # both blocks settle a token at the shared border;
                    # whichever target sits on the spine must wait
                    if try_.target == self.spine[gry]:
                        edge(i, i + 1)
                    elif tlx.target == self.spine[glx]:
                        edge(i + 1, i)
        self._standing_edges(blocks, edge, after)
        heap = sorted(i for i in range(k) if indeg[i] == 0)
        done = [False] * k
        out = []
        while len(out) < k:
            if not heap:
                # conflicting preferences; take the leftmost block
                i = min(j for j in range(k) if not done[j])
                indeg[i] = 0
                heap = [i]
            i = heappop(heap)
            if done[i]:
                continue
            done[i] = True
            out.append(blocks[i])
            for j in after[i]:
                indeg[j] -= 1
                if indeg[j] == 0 and not done[j]:
                    heappush(heap, j)
        return out

    def _standing_edges(self, blocks, edge, after) -> None:
        """Order blocks around a standing token on a bare spine cell.

        Such a token has no leaf to park on, so a passing traveler
        shoves it one cell toward the far side.  The block over there
        must already be settled if its targets crowd the landing spot,
        and must still be unprocessed if its travelers merely pass by
        it, so that nobody has to shove the parked token a second time.
        A token is shoved from its start while its own block still
        waits, and from its target afterwards; already-known order
        constraints tell the two situations apart.
        """
        k = len(blocks)
        if k < 2:
            return
        spans = [(b["entries"][0][0], b["entries"][-1][0]) for b in blocks]
        home: dict[_Token, int] = {}
        members: list[list[_Token]] = [[] for _ in blocks]
        start_cells: dict[int, int] = {}
        for i, b in enumerate(blocks):
            for grp, bit, tok in b["entries"]:
                if bit == 0:
                    home[tok] = i
                    members[i].append(tok)
                    start_cells[tok.start] = i
        starts = [{self.group[t.start] for t in ms} for ms in members]
        bfirst = [b["entries"][0][1] == 0 for b in blocks]
        m = len(self.spine)
        taken = {t.target for t in self.tokens} | {t.start for t in self.tokens}

        def bare(g: int) -> bool:
            return not any(l not in taken for l in self.leaves[g])

        def conflict(own, di: int, g: int, d: int) -> None:
            if d < 0:
                near = [
                    (sp[1], z)
                    for z, sp in enumerate(spans)
                    if sp[1] < g and z != own
                ]
            else:
                near = [
                    (-sp[0], z)
                    for z, sp in enumerate(spans)
                    if sp[0] > g and z != own
                ]
            zi = max(near)[1] if near else None
            if zi is None or zi == di:
                return
            gl, gla = g + d, g + 2 * d
            targets = {e[2].target for e in blocks[zi]["entries"]}
            spine_hit = targets & {
                self.spine[j] for j in (gl, gla) if 0 <= j < m
            }
            leaf_hit = any(
                c not in self.spine_set and self.group[c] == gl
                for c in targets
            )
            zlo, zhi = spans[zi]
            if spine_hit or leaf_hit:
                sitters = (
                    {start_cells[l] for l in self.leaves[gl] if l in start_cells}
                    if 0 <= gl < m
                    else set()
                )
                sitters.discard(di)
                # a standing blue on a landing-spot leaf blocks the
                # shove until its own block departs
                for w in sitters:
                    edge(w, di)
                if zi not in sitters:
                    edge(di, zi)
            elif (zhi >= gla) if d < 0 else (zlo <= gla):
                edge(zi, di)

        # fellow members shove a mate before it departs or after it
        # settles; this does not depend on how whole blocks end up ordered
        for token, own in home.items():
            if token.start in self.spine_set:
                g = self.group[token.start]
                if bare(g):
                    if bfirst[own] and g + 1 in starts[own]:
                        conflict(own, own, g, -1)
                    elif not bfirst[own] and g - 1 in starts[own]:
                        conflict(own, own, g, 1)
            tt = token.target
            if tt in self.spine_set and tt != token.start:
                gp = self.group[tt]
                if bare(gp):
                    ts = self.group[token.start]
                    for u in members[own]:
                        if u is token:
                            continue
                        us, ut = self.group[u.start], self.group[u.target]
                        if bfirst[own] and us < ts and ut == gp - 1:
                            conflict(own, own, gp, 1)
                            break
                        if not bfirst[own] and us > ts and ut == gp + 1:
                            conflict(own, own, gp, -1)
                            break

        reach = [set(a) for a in after]
        changed = True
        while changed:
            changed = False
            for i in range(k):
                grow = set()
                for j in reach[i]:
                    grow |= reach[j] - reach[i]
                if grow:
                    reach[i] |= grow
                    changed = True

        for token in self.tokens:
            own = home.get(token)
            gt_grp = self.group[token.target]
            for cell, phase in ((token.start, 0), (token.target, 1)):
                if phase == 1 and (own is None or cell == token.start):
                    continue
                if cell not in self.spine_set:
                    continue
                g = self.group[cell]
                trav = 0
                if phase == 0 and gt_grp != g:
                    trav = 1 if gt_grp > g else -1
                for s in (1, -1):
                    d = -s
                    # a shove along the travel direction happens even
                    # when a parking leaf is free, so scan regardless
                    toward = own is not None and trav == d
                    if not toward and not bare(g):
                        continue
                    for di, (lo, hi) in enumerate(spans):
                        if not lo <= g + s <= hi or di == own:
                            continue
                        if own is not None:
                            di_first = own in reach[di]
                            own_first = di in reach[own]
                            if phase == 0 and own_first and not di_first:
                                continue
                            if phase == 1 and di_first and not own_first:
                                continue
                        conflict(own, di, g, d)
                        if not toward:
                            continue
                        gl = g + d
                        for u in members[own]:
                            if u is token:
                                continue
                            ts = self.group[token.start]
                            if bfirst[own] != (self.group[u.start] > ts):
                                continue
                            ulo, uhi = sorted(
                                (self.group[u.start], self.group[u.target])
                            )
                            if ulo - 1 <= gl <= uhi + 1:
                                edge(own, di)
                                break

    def _sweep(self) -> None:
        """Walk stragglers home: leaf-to-spine finishers, parked
        bystanders, and displaced settlers, retried until stable."""
        while True:
            rest = [t for t in self.tokens if t.current != t.target]
            if not rest:
                return
            progress = False
            for token in rest:
                route = self._route(token)
                probe = token.current
                ok = True
                for nxt in route:
                    if nxt in self.occupied or any(
                        w != probe and w in self.occupied for w in self.adj[nxt]
                    ):
                        ok = False
                        break
                    probe = nxt
                if ok:
                    for nxt in route:
                        self._emit(token, nxt)
                    progress = True
            assert progress, "final sweep stalled"


def _piece_moves(adj, cells: set[int], bset: set[int], rset: set[int],
                 decide: bool, struct=None) -> list[tuple[int, int]]:
    if len(bset) != len(rset):
        raise _Unreachable("COMPONENT_UNBALANCED", (min(cells),))
    if bset == rset:
        return []
    if len(cells) == 2:
        (b,) = bset
        (r,) = rset
        return [(b, r)]
    spine, leaves = struct if struct is not None else _structure(adj, cells)

    doomed: list[int] = []
    for i, s in enumerate(spine):
        b_i = {l for l in leaves[i] if l in bset}
        r_i = {l for l in leaves[i] if l in rset}
        if len(b_i) >= 2 or len(r_i) >= 2:
            if b_i != r_i:
                raise _Unreachable("TWIN_LEAVES_BLOCKED", (s,))
            assert s not in bset and s not in rset
            doomed.append(i)
    if doomed:
        cut = set()
        for i in doomed:
            cut.add(spine[i])
            cut.update(leaves[i])
        return _recurse(adj, _component_cells(adj, cells - cut),
                        bset, rset, decide)

    locked_b = _mark(spine, leaves, bset)
    locked_r = _mark(spine, leaves, rset)
    if locked_b != locked_r:
        raise _Unreachable(
            "LOCK_MISMATCH", tuple(sorted(locked_b ^ locked_r))
        )
    if locked_b:
        assert bset & locked_b == rset & locked_b
        return _recurse(adj, _component_cells(adj, cells - locked_b),
                        bset, rset, decide)

    if decide:
        return []
    pairs = list(zip(
        sorted(bset, key=lambda v: _group_key(spine, leaves, v)),
        sorted(rset, key=lambda v: _group_key(spine, leaves, v)),
    ))
    return _Scheduler(adj, spine, leaves, pairs).run()


def _group_key(spine, leaves, v: int) -> int:
    # at most one token of a colour per group, so the group index alone
    # orders a colour class totally
    for i, s in enumerate(spine):
        if v == s or v in leaves[i]:
            return i
    raise AssertionError(f"cell {v} not in piece")


def _recurse(adj, comps: list[list[int]], bset: set[int], rset: set[int],
             decide: bool, structs=None) -> list[tuple[int, int]]:
    out: list[tuple[int, int]] = []
    for comp in comps:
        cs = set(comp)
        struct = None if structs is None else structs.get(comp[0])
        out.extend(_piece_moves(adj, cs, bset & cs, rset & cs, decide, struct))
    return out


def solve_caterpillar(g: Graph, blue, red, decide: bool = False) -> SolveResult:
    """Shortest slide sequence moving ``blue`` onto ``red`` in a
    caterpillar forest, or a NO answer with reason and witness.

    With ``decide=True`` only the YES/NO answer is computed and
    ``moves`` is None.
    """
    comps = [sorted(c) for c in g.components()]
    comps.sort(key=lambda c: c[0])
    structs = _check_shape(g, comps)
    _check_tokens("blue", blue, g)
    _check_tokens("red", red, g)
    blue = tuple(blue)
    red = tuple(red)
    if len(blue) != len(red):
        return no_result("CARDINALITY_MISMATCH", (len(blue), len(red)))
    try:
        moves = _recurse(g.adj, comps, set(blue), set(red), decide, structs)
    except _Unreachable as answer:
        return no_result(answer.reason, answer.witness)
    if decide:
        return SolveResult("YES")
    return yes_result(moves)
