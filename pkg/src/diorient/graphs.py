"""Core graph and digraph machinery.

Undirected graphs carry dense integer vertex identifiers 0..n-1 and a set of
unordered edges.  An orientation assigns exactly one direction to every edge.
Directed distances use an explicit ``UNREACHABLE`` value that compares greater
than every finite hop count, so maxima and table printing behave sensibly for
non-strong orientations.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, Optional, Sequence, Union

from .errors import ArgumentError, BridgeError


class Unreachable:
    """Distance value for vertex pairs joined by no directed path.

    Compares strictly greater than every integer and equal only to itself.
    """

    __slots__ = ()

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return isinstance(other, Unreachable)

    def __gt__(self, other):
        return not isinstance(other, Unreachable)

    def __ge__(self, other):
        return True

    def __eq__(self, other):
        return isinstance(other, Unreachable)

    def __hash__(self):
        return hash("diorient.UNREACHABLE")

    def __repr__(self):
        return "UNREACHABLE"

    def __str__(self):
        return "inf"


UNREACHABLE = Unreachable()

Distance = Union[int, Unreachable]

Edge = tuple  # unordered edge, stored as (u, v) with u < v
Arc = tuple  # directed arc (tail, head)


def normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class UndirectedGraph:
    """Simple undirected graph: no loops, no parallel edges."""

    __slots__ = ("n", "edges", "_adj", "_eset")

    def __init__(self, n: int, edges: Iterable[Sequence[int]]):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        seen = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for order {n}")
            e = normalize_edge(u, v)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
        self.n = n
        self.edges = tuple(sorted(seen))
        self._eset = frozenset(seen)
        adj = [[] for _ in range(n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        self._adj = tuple(tuple(sorted(ns)) for ns in adj)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return normalize_edge(u, v) in self._eset

    def __eq__(self, other):
        return (
            isinstance(other, UndirectedGraph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"UndirectedGraph(n={self.n}, m={self.m})"


class Orientation:
    """One direction per edge of an underlying :class:`UndirectedGraph`."""

    __slots__ = ("base", "arcs", "_direction", "_out", "_in")

    def __init__(self, base: UndirectedGraph, arcs: Iterable[Sequence[int]]):
        direction = {}
        for t, h in arcs:
            e = normalize_edge(t, h)
            if e in direction:
                raise ValueError(f"edge {e} directed twice")
            direction[e] = (t, h)
        missing = [e for e in base.edges if e not in direction]
        if missing:
            raise ValueError(f"undirected edges remain: {missing[:3]}")
        if len(direction) != base.m:
            extra = sorted(set(direction) - set(base.edges))
            raise ValueError(f"arcs not over base edges: {extra[:3]}")
        self.base = base
        self._direction = direction
        self.arcs = tuple(direction[e] for e in base.edges)
        out = [[] for _ in range(base.n)]
        into = [[] for _ in range(base.n)]
        for t, h in self.arcs:
            out[t].append(h)
            into[h].append(t)
        self._out = tuple(tuple(sorted(ns)) for ns in out)
        self._in = tuple(tuple(sorted(ns)) for ns in into)

    def out_neighbors(self, v: int) -> tuple:
        return self._out[v]

    def in_neighbors(self, v: int) -> tuple:
        return self._in[v]

    def direction_of(self, u: int, v: int) -> Arc:
        return self._direction[normalize_edge(u, v)]

    def has_arc(self, t: int, h: int) -> bool:
        e = normalize_edge(t, h)
        return self._direction.get(e) == (t, h)

    def reversed(self) -> "Orientation":
        return Orientation(self.base, [(h, t) for t, h in self.arcs])

    def __eq__(self, other):
        return (
            isinstance(other, Orientation)
            and self.base == other.base
            and self.arcs == other.arcs
        )

    def __hash__(self):
        return hash((self.base, self.arcs))

    def __repr__(self):
        return f"Orientation(n={self.base.n}, m={self.base.m})"


def arc_distances(n: int, out_adj: Sequence[Sequence[int]], source: int) -> list:
    """Directed hop distances from ``source`` over explicit out-adjacency."""
    dist = [UNREACHABLE] * n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        dv = dist[v]
        for w in out_adj[v]:
            if dist[w] is UNREACHABLE:
                dist[w] = dv + 1
                queue.append(w)
    return dist


def bfs_distances(o: Orientation, source: int) -> list:
    """Exact directed distances from ``source``; UNREACHABLE where no path exists."""
    if not (0 <= source < o.base.n):
        raise ArgumentError(f"source {source} out of range")
    return arc_distances(o.base.n, o._out, source)


def diameter(o: Orientation) -> Distance:
    """Maximum directed distance over ordered vertex pairs."""
    value, _ = diameter_with_witness_pair(o)
    return value


def diameter_with_witness_pair(o: Orientation):
    """Diameter plus an ordered pair attaining it (first in scan order)."""
    n = o.base.n
    worst = 0
    pair = None
    for s in range(n):
        dist = arc_distances(n, o._out, s)
        for t in range(n):
            d = dist[t]
            if d is UNREACHABLE:
                return UNREACHABLE, (s, t)
            if d > worst:
                worst = d
                pair = (s, t)
    return worst, pair


def is_strongly_connected(o: Orientation) -> bool:
    n = o.base.n
    if n <= 1:
        return True
    fwd = arc_distances(n, o._out, 0)
    if any(d is UNREACHABLE for d in fwd):
        return False
    bwd = arc_distances(n, o._in, 0)
    return all(d is not UNREACHABLE for d in bwd)


def is_connected(g: UndirectedGraph) -> bool:
    if g.n <= 1:
        return True
    return all(d is not UNREACHABLE for d in arc_distances(g.n, g._adj, 0))


def find_bridges(g: UndirectedGraph) -> frozenset:
    """All edges whose removal splits their connected component.

    Single-pass iterative lowpoint computation, one DFS per component.
    """
    n = g.n
    disc = [-1] * n
    low = [0] * n
    bridges = []
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, -1, iter(g.neighbors(root)))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, iter(g.neighbors(w))))
                    advanced = True
                    break
                low[v] = min(low[v], disc[w])
            if not advanced:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[v])
                    if low[v] > disc[p]:
                        bridges.append(normalize_edge(p, v))
    return frozenset(bridges)


def is_bridgeless(g: UndirectedGraph) -> bool:
    """Connected and without bridges (2-edge-connected at order >= 2)."""
    return is_connected(g) and not find_bridges(g)


def strong_orientation(g: UndirectedGraph) -> Orientation:
    """A strongly connected orientation of a bridgeless graph.

    DFS orientation: tree arcs point away from the root, every non-tree
    edge points from descendant to ancestor.  Raises :class:`BridgeError`
    when the graph is disconnected or has a bridge, in which case no
    orientation of finite diameter exists at all.
    """
    if not is_connected(g):
        raise BridgeError("graph is disconnected; no strong orientation exists")
    if find_bridges(g):
        raise BridgeError("graph has a bridge; no strong orientation exists")
    n = g.n
    disc = [-1] * n
    parent = [-1] * n
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = timer
        timer += 1
        stack = [(root, iter(g.neighbors(root)))]
        while stack:
            v, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    disc[w] = timer
                    timer += 1
                    parent[w] = v
                    stack.append((w, iter(g.neighbors(w))))
                    advanced = True
                    break
            if not advanced:
                stack.pop()
    arcs = []
    for u, v in g.edges:
        first, later = (u, v) if disc[u] < disc[v] else (v, u)
        if parent[later] == first:
            arcs.append((first, later))  # tree arc, away from root
        else:
            arcs.append((later, first))  # back arc, toward ancestor
    return Orientation(g, arcs)


class _BudgetExhausted:
    """Singleton outcome: the search budget ran out before a verdict."""

    __slots__ = ()

    def __repr__(self):
        return "BUDGET_EXHAUSTED"


BUDGET_EXHAUSTED = _BudgetExhausted()


def find_hamiltonian_cycle(g: UndirectedGraph, node_budget: Optional[int] = None):
    """Backtracking Hamiltonian cycle search with forced-edge pruning.

    Returns a vertex sequence (one full cycle, closing edge implicit), or
    ``None`` when exhaustive backtracking proves no cycle exists, or the
    :data:`BUDGET_EXHAUSTED` sentinel when ``node_budget`` search nodes were
    expanded without a verdict.  Both edges at a degree-2 vertex must lie on
    any Hamiltonian cycle; the search commits to them early.
    """
    n = g.n
    if n < 3:
        raise ArgumentError("Hamiltonian cycle search needs order >= 3")
    if any(g.degree(v) < 2 for v in range(n)):
        return None

    forced_at = [[] for _ in range(n)]
    for v in range(n):
        if g.degree(v) == 2:
            for w in g.neighbors(v):
                if v not in forced_at[w]:
                    forced_at[w].append(v)
                if w not in forced_at[v]:
                    forced_at[v].append(w)
    if any(len(ns) > 2 for ns in forced_at):
        return None
    early = _forced_subcycle(n, forced_at)
    if early is not None:
        return early if len(early) == n else None

    used = [False] * n
    used[0] = True
    path = [0]
    expanded = 0

    def extend(v):
        nonlocal expanded
        if node_budget is not None and expanded >= node_budget:
            return BUDGET_EXHAUSTED
        expanded += 1
        if len(path) == n:
            if g.has_edge(v, 0) and all(w in (path[1], v) for w in forced_at[0]):
                return list(path)
            return None
        if len(path) == 1:
            candidates = forced_at[0][:1] or [w for w in g.neighbors(0)]
        else:
            entry = path[-2]
            pending = [w for w in forced_at[v] if w != entry]
            if pending:
                if len(pending) > 1 or used[pending[0]]:
                    return None
                candidates = pending
            else:
                candidates = [w for w in g.neighbors(v) if not used[w]]
        for w in candidates:
            if used[w]:
                continue
            used[w] = True
            path.append(w)
            result = extend(w)
            if result is not None:
                return result
            path.pop()
            used[w] = False
        return None

    return extend(0)


def _forced_subcycle(n, forced_at):
    """A cycle inside the forced-edge subgraph, if one exists.

    Forced edges have maximum degree 2 here, so components are paths or
    cycles; any forced cycle shorter than n rules a Hamiltonian cycle out,
    while a spanning one settles the search immediately.
    """
    seen = [False] * n
    for start in range(n):
        if seen[start] or not forced_at[start]:
            continue
        cycle = [start]
        seen[start] = True
        prev, cur = -1, start
        while True:
            nxt = [w for w in forced_at[cur] if w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            if cur == start:
                return cycle
            if seen[cur]:
                break
            seen[cur] = True
            cycle.append(cur)
    return None


def path_graph(n: int) -> UndirectedGraph:
    return UndirectedGraph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> UndirectedGraph:
    if n < 3:
        raise ValueError("cycle needs order >= 3")
    return UndirectedGraph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> UndirectedGraph:
    return UndirectedGraph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
