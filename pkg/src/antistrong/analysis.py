"""Recognition of antistrong digraphs and trail/CAT witness machinery.

An antidirected trail alternates arc directions along its traversal; a
forward (x,y)-trail starts and ends with a forward arc.  A digraph on at
least 3 vertices is antistrong when every ordered pair of distinct
vertices is joined by a forward antidirected trail, which happens exactly
when its bipartite representation is connected.  Trails between x and y
correspond to paths in the representation between copies of x and y, with
the start/end sides determining the start/end directions:

    x' -> y''  forward trail (starts and ends forward, odd length)
    x' -> y'   even trail starting forward, ending backward
    x'' -> y'' even trail starting backward, ending forward

A closed antidirected trail (CAT) is a cycle in the representation; arc
sets whose representation edges form a forest are exactly the CAT-free
ones.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import InvalidInput, NotAntistrong, TooFewVertices
from .graphs import DSU, BipRep, Digraph, bipartite_rep


@dataclass(frozen=True)
class TrailWitness:
    """Arc-index sequence with per-arc traversal directions.

    forward[i] is True when arc arcs[i] is traversed tail->head.
    """

    x: int
    y: int
    arcs: tuple[int, ...]
    forward: tuple[bool, ...]

    def vertices(self, d: Digraph) -> tuple[int, ...]:
        """Traversal vertex sequence; raises InvalidInput on a bad chain."""
        seq = [self.x]
        for ai, fwd in zip(self.arcs, self.forward):
            t, h = d.arcs[ai]
            if fwd:
                if seq[-1] != t:
                    raise InvalidInput("forward arc does not start at current vertex")
                seq.append(h)
            else:
                if seq[-1] != h:
                    raise InvalidInput("backward arc does not start at current vertex")
                seq.append(t)
        return tuple(seq)


@dataclass(frozen=True)
class CATWitness:
    """Closed antidirected trail: even length, cyclically alternating."""

    start: int
    arcs: tuple[int, ...]
    forward: tuple[bool, ...]


def check_trail(d: Digraph, w: TrailWitness, *, require_forward_ends=False,
                require_even=False, first_forward=None) -> bool:
    """Definitional validity check for a trail witness."""
    if len(w.arcs) != len(w.forward) or not w.arcs:
        return False
    if len(set(w.arcs)) != len(w.arcs):
        return False
    if any(not (0 <= a < d.m) for a in w.arcs):
        return False
    for a, b in zip(w.forward, w.forward[1:]):
        if a == b:
            return False
    try:
        seq = w.vertices(d)
    except InvalidInput:
        return False
    if seq[-1] != w.y or seq[0] != w.x:
        return False
    if require_forward_ends and not (w.forward[0] and w.forward[-1]):
        return False
    if require_even and len(w.arcs) % 2 != 0:
        return False
    if first_forward is not None and w.forward[0] != first_forward:
        return False
    return True


def check_cat(d: Digraph, w: CATWitness) -> bool:
    if len(w.arcs) != len(w.forward):
        return False
    if len(w.arcs) < 2 or len(w.arcs) % 2 != 0:
        return False
    if len(set(w.arcs)) != len(w.arcs):
        return False
    for a, b in zip(w.forward, w.forward[1:] + w.forward[:1]):
        if a == b:
            return False
    trail = TrailWitness(w.start, w.start, w.arcs, w.forward)
    try:
        seq = trail.vertices(d)
    except InvalidInput:
        return False
    return seq[0] == seq[-1] == w.start


def is_antistrong(d: Digraph) -> bool:
    """n >= 3 and connected bipartite representation."""
    if d.n < 3:
        return False
    return bipartite_rep(d).component_count() == 1


def _bfs_path(rep: BipRep, src: int, dst: int):
    """Shortest path in the representation, expanding neighbours in
    ascending vertex order; None when disconnected."""
    g = rep.graph
    parent = {src: (-1, -1)}
    queue = deque([src])
    while queue:
        v = queue.popleft()
        if v == dst:
            break
        steps = sorted((g.other_end(ei, v), ei) for ei in g.incident[v])
        for w, ei in steps:
            if w not in parent:
                parent[w] = (v, ei)
                queue.append(w)
    if dst not in parent:
        return None
    path = []
    cur = dst
    while cur != src:
        prv, ei = parent[cur]
        path.append((prv, cur, ei))
        cur = prv
    path.reverse()
    return path


def _lift(rep: BipRep, x: int, y: int, path) -> TrailWitness:
    arcs = tuple(ei for _, _, ei in path)
    forward = tuple(rep.is_left(a) for a, _, _ in path)
    return TrailWitness(x, y, arcs, forward)


def _require_antistrong(d: Digraph):
    if d.n < 3:
        raise NotAntistrong("antistrongness needs at least 3 vertices")
    if not is_antistrong(d):
        raise NotAntistrong("bipartite representation is disconnected")


def _check_pair(d: Digraph, x: int, y: int):
    if not (0 <= x < d.n and 0 <= y < d.n):
        raise InvalidInput("vertex out of range")
    if x == y:
        raise InvalidInput("ordered pair must be distinct")


def forward_trail(d: Digraph, x: int, y: int) -> TrailWitness:
    """Forward antidirected (x,y)-trail of an antistrong digraph, via the
    shortest x'->y'' path in the representation."""
    _check_pair(d, x, y)
    _require_antistrong(d)
    rep = bipartite_rep(d)
    path = _bfs_path(rep, rep.left(x), rep.right(y))
    assert path is not None
    w = _lift(rep, x, y, path)
    assert check_trail(d, w, require_forward_ends=True)
    return w


def even_trails(d: Digraph, x: int, y: int) -> tuple[TrailWitness, TrailWitness]:
    """Even-length trails: one starting forward (x'->y' path), one starting
    backward (x''->y'' path)."""
    _check_pair(d, x, y)
    _require_antistrong(d)
    rep = bipartite_rep(d)
    fwd_path = _bfs_path(rep, rep.left(x), rep.left(y))
    bwd_path = _bfs_path(rep, rep.right(x), rep.right(y))
    assert fwd_path is not None and bwd_path is not None
    wf = _lift(rep, x, y, fwd_path)
    wb = _lift(rep, x, y, bwd_path)
    assert check_trail(d, wf, require_even=True, first_forward=True)
    assert check_trail(d, wb, require_even=True, first_forward=False)
    return wf, wb


def has_antidirected_trail(d: Digraph, x: int, y: int) -> bool:
    """Some antidirected (x,y)-trail exists, with no constraint on end
    directions: a representation component must contain copies of both."""
    _check_pair(d, x, y)
    rep = bipartite_rep(d)
    _, labels = rep.components
    xs = {labels[rep.left(x)], labels[rep.right(x)]}
    ys = {labels[rep.left(y)], labels[rep.right(y)]}
    return bool(xs & ys)


class _UnitFlow:
    """Unit-capacity max flow on an undirected graph, BFS augmenting."""

    def __init__(self, g):
        self.adj = [[] for _ in range(g.n)]
        self.cap = {}
        for u, v in g.edges:
            self.adj[u].append(v)
            self.adj[v].append(u)
            self.cap[(u, v)] = self.cap.get((u, v), 0) + 1
            self.cap[(v, u)] = self.cap.get((v, u), 0) + 1

    def max_flow(self, s: int, t: int, limit: int):
        """Augment until limit paths are found or none remains.  Returns
        (value, flow dict of positively used directed edges)."""
        flow = {}
        value = 0
        while value < limit:
            parent = {s: -1}
            queue = deque([s])
            while queue and t not in parent:
                v = queue.popleft()
                for w in self.adj[v]:
                    if w not in parent and self.cap.get((v, w), 0) > 0:
                        parent[w] = v
                        queue.append(w)
            if t not in parent:
                break
            cur = t
            while cur != s:
                prv = parent[cur]
                self.cap[(prv, cur)] -= 1
                self.cap[(cur, prv)] += 1
                if flow.get((cur, prv), 0) > 0:
                    flow[(cur, prv)] -= 1
                else:
                    flow[(prv, cur)] = flow.get((prv, cur), 0) + 1
                cur = prv
            value += 1
        return value, flow


def _edge_disjoint_paths(g, s: int, t: int, k: int):
    """Up to k edge-disjoint s-t paths (as vertex lists); None if < k."""
    fl = _UnitFlow(g)
    value, flow = fl.max_flow(s, t, k)
    if value < k:
        return None
    paths = []
    for _ in range(value):
        path = [s]
        cur = s
        while cur != t:
            nxt = None
            for w in sorted(fl.adj[cur]):
                if flow.get((cur, w), 0) > 0:
                    nxt = w
                    break
            assert nxt is not None, "flow conservation violated"
            flow[(cur, nxt)] -= 1
            path.append(nxt)
            cur = nxt
        paths.append(path)
    return paths


def k_arc_antistrong(d: Digraph, k: int) -> bool:
    """Every ordered pair admits k arc-disjoint forward trails, i.e. k
    edge-disjoint x'->y'' paths in the representation."""
    if k < 1:
        raise InvalidInput("k must be positive")
    if d.n < 3:
        return False
    rep = bipartite_rep(d)
    for x in range(d.n):
        for y in range(d.n):
            if x == y:
                continue
            fl = _UnitFlow(rep.graph)
            value, _ = fl.max_flow(rep.left(x), rep.right(y), k)
            if value < k:
                return False
    return True


def forward_trails_k(d: Digraph, x: int, y: int, k: int):
    """k arc-disjoint forward (x,y)-trails, or None if they do not exist."""
    _check_pair(d, x, y)
    if d.n < 3:
        raise TooFewVertices("antistrongness needs at least 3 vertices")
    rep = bipartite_rep(d)
    paths = _edge_disjoint_paths(rep.graph, rep.left(x), rep.right(y), k)
    if paths is None:
        return None
    pair_to_arc = {}
    for i, (u, v) in enumerate(rep.graph.edges):
        pair_to_arc[(u, v)] = i
        pair_to_arc[(v, u)] = i
    out = []
    for path in paths:
        steps = [(a, b, pair_to_arc[(a, b)]) for a, b in zip(path, path[1:])]
        w = _lift(rep, x, y, steps)
        assert check_trail(d, w, require_forward_ends=True)
        out.append(w)
    used = [a for w in out for a in w.arcs]
    assert len(set(used)) == len(used), "trails share an arc"
    return out


def find_cat(d: Digraph, arc_subset=None):
    """CATWitness hiding in the arc subset, or None when the subset is
    CAT-free (its representation edges form a forest).

    Arcs are inserted in ascending index order; the witness comes from the
    first arc that closes a representation cycle.
    """
    if arc_subset is None:
        arc_subset = range(d.m)
    idxs = sorted(set(arc_subset))
    if any(not (0 <= a < d.m) for a in idxs):
        raise InvalidInput("arc index out of range")
    rep = bipartite_rep(d)
    dsu = DSU(2 * d.n)
    inserted: list[int] = []
    closing = None
    for ai in idxs:
        u, v = rep.graph.edges[ai]
        if not dsu.union(u, v):
            closing = ai
            break
        inserted.append(ai)
    if closing is None:
        return None
    # path between the endpoints of the closing edge inside the forest
    u0, v0 = rep.graph.edges[closing]
    adj: dict[int, list[tuple[int, int]]] = {}
    for ai in inserted:
        a, b = rep.graph.edges[ai]
        adj.setdefault(a, []).append((b, ai))
        adj.setdefault(b, []).append((a, ai))
    parent = {u0: (-1, -1)}
    queue = deque([u0])
    while queue:
        v = queue.popleft()
        if v == v0:
            break
        for w, ei in adj.get(v, ()):
            if w not in parent:
                parent[w] = (v, ei)
                queue.append(w)
    steps = []
    cur = v0
    while cur != u0:
        prv, ei = parent[cur]
        steps.append((prv, cur, ei))
        cur = prv
    steps.reverse()
    steps.append((v0, u0, closing))
    # canonical rotation: start at the smallest left vertex on the cycle,
    # moving toward its smaller right neighbour
    seq = [a for a, _, _ in steps]
    L = len(steps)
    lefts = [i for i, b in enumerate(seq) if rep.is_left(b)]
    start_pos = min(lefts, key=lambda i: seq[i])
    succ = seq[(start_pos + 1) % L]
    pred = seq[(start_pos - 1) % L]
    if pred < succ:
        steps = [(b, a, ei) for a, b, ei in reversed(steps)]
        start_pos = (L - start_pos) % L
    steps = steps[start_pos:] + steps[:start_pos]
    arcs = tuple(ei for _, _, ei in steps)
    forward = tuple(rep.is_left(a) for a, _, _ in steps)
    w = CATWitness(rep.original(steps[0][0]), arcs, forward)
    assert check_cat(d, w)
    return w
