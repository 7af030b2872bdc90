"""Basic graph containers and connectivity/bipartiteness primitives.

Vertices are 0..n-1 throughout.  A digraph arc is an ordered pair (tail,
head); an undirected edge is stored as given but identified by its index,
so multigraphs (at most two parallel copies per vertex pair) keep their
edge identities.

The bipartite representation of a digraph D has one left vertex v' and one
right vertex v'' per vertex v of D, and one edge u'v'' per arc uv.  Left
vertices are numbered 0..n-1 (v' = v) and right vertices n..2n-1
(v'' = n + v).  Arc i of D is edge i of the representation, so the
arc/edge bijection is the identity on indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import InvalidInput


class DSU:
    """Union-find with path compression and union by size."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        """Merge the sets of a and b; False if already joined."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return True


class ParityDSU:
    """Union-find that tracks the parity of the path to the root.

    Supports incremental bipartiteness bookkeeping: joining two vertices
    already connected with even distance marks their component as
    containing an odd closed walk.
    """

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.rank = [0] * n
        self.parity = [0] * n  # parity of path to parent
        self.odd = [False] * n  # valid at roots: component has an odd cycle

    def find(self, x: int) -> tuple[int, int]:
        """Return (root, parity of x relative to root)."""
        path = []
        root = x
        while self.parent[root] != root:
            path.append(root)
            root = self.parent[root]
        p = 0
        for v in reversed(path):
            p ^= self.parity[v]
            self.parity[v] = p
            self.parent[v] = root
        return root, self.parity[x] if x != root else 0

    def union(self, a: int, b: int) -> bool:
        """Add an edge ab; return False if it closed an odd walk."""
        ra, pa = self.find(a)
        rb, pb = self.find(b)
        if ra == rb:
            if pa == pb:
                self.odd[ra] = True
                return False
            return True
        if self.rank[ra] < self.rank[rb]:
            ra, rb = rb, ra
            pa, pb = pb, pa
        self.parent[rb] = ra
        self.parity[rb] = pa ^ pb ^ 1
        self.odd[ra] = self.odd[ra] or self.odd[rb]
        if self.rank[ra] == self.rank[rb]:
            self.rank[ra] += 1
        return True


def _check_pairs(n, pairs, what):
    for u, v in pairs:
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidInput(f"{what} ({u},{v}) out of range for n={n}")
        if u == v:
            raise InvalidInput(f"loop {what} ({u},{v}) not allowed")


@dataclass(frozen=True)
class Digraph:
    """Simple digraph: no loops, no duplicate arcs (2-cycles are fine)."""

    n: int
    arcs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 0:
            raise InvalidInput("negative vertex count")
        object.__setattr__(self, "arcs", tuple((int(u), int(v)) for u, v in self.arcs))
        _check_pairs(self.n, self.arcs, "arc")
        if len(set(self.arcs)) != len(self.arcs):
            raise InvalidInput("duplicate arc")

    @property
    def m(self) -> int:
        return len(self.arcs)

    @cached_property
    def out_arcs(self) -> tuple[tuple[int, ...], ...]:
        """out_arcs[v] = arc indices with tail v."""
        buckets = [[] for _ in range(self.n)]
        for i, (u, _) in enumerate(self.arcs):
            buckets[u].append(i)
        return tuple(tuple(b) for b in buckets)

    @cached_property
    def in_arcs(self) -> tuple[tuple[int, ...], ...]:
        buckets = [[] for _ in range(self.n)]
        for i, (_, v) in enumerate(self.arcs):
            buckets[v].append(i)
        return tuple(tuple(b) for b in buckets)

    def with_arcs(self, extra) -> "Digraph":
        return Digraph(self.n, self.arcs + tuple(extra))

    def underlying(self) -> "UGraph":
        """Underlying simple graph (2-cycles collapse to one edge)."""
        seen = []
        have = set()
        for u, v in self.arcs:
            key = (min(u, v), max(u, v))
            if key not in have:
                have.add(key)
                seen.append(key)
        return UGraph(self.n, tuple(seen))


@dataclass(frozen=True)
class UGraph:
    """Undirected graph; parallel edges (at most two per pair) only when
    multigraph=True.  Edge identity is the index into `edges`."""

    n: int
    edges: tuple[tuple[int, int], ...]
    multigraph: bool = False

    def __post_init__(self):
        if self.n < 0:
            raise InvalidInput("negative vertex count")
        object.__setattr__(self, "edges", tuple((int(u), int(v)) for u, v in self.edges))
        _check_pairs(self.n, self.edges, "edge")
        counts = {}
        for u, v in self.edges:
            key = (min(u, v), max(u, v))
            counts[key] = counts.get(key, 0) + 1
        worst = max(counts.values(), default=0)
        if worst > 2 or (worst > 1 and not self.multigraph):
            raise InvalidInput("parallel edges need multigraph mode (max 2 copies)")

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def incident(self) -> tuple[tuple[int, ...], ...]:
        """incident[v] = edge indices touching v."""
        buckets = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            buckets[u].append(i)
            buckets[v].append(i)
        return tuple(tuple(b) for b in buckets)

    def other_end(self, edge_idx: int, v: int) -> int:
        u, w = self.edges[edge_idx]
        if v == u:
            return w
        if v == w:
            return u
        raise InvalidInput(f"vertex {v} not on edge {edge_idx}")

    def subgraph_edges(self, edge_idxs) -> "UGraph":
        """Same vertex set, only the chosen edges (indices resorted)."""
        chosen = tuple(self.edges[i] for i in sorted(edge_idxs))
        return UGraph(self.n, chosen, multigraph=self.multigraph)


@dataclass(frozen=True)
class BipRep:
    """Bipartite representation of a digraph.

    graph: UGraph on 2n vertices; edge i corresponds to arc i.
    """

    n: int
    graph: UGraph

    def left(self, v: int) -> int:
        return v

    def right(self, v: int) -> int:
        return self.n + v

    def is_left(self, b: int) -> bool:
        return b < self.n

    def original(self, b: int) -> int:
        return b if b < self.n else b - self.n

    @cached_property
    def components(self) -> tuple[int, tuple[int, ...]]:
        return connected_components(self.graph)

    def component_count(self) -> int:
        return self.components[0]


def bipartite_rep(d: Digraph) -> BipRep:
    edges = tuple((u, d.n + v) for u, v in d.arcs)
    return BipRep(d.n, UGraph(2 * d.n, edges))


def connected_components(g: UGraph) -> tuple[int, tuple[int, ...]]:
    """Count components and label each vertex by the smallest vertex id in
    its component."""
    dsu = DSU(g.n)
    for u, v in g.edges:
        dsu.union(u, v)
    best: dict[int, int] = {}
    for v in range(g.n):
        r = dsu.find(v)
        if r not in best:
            best[r] = v  # ascending scan: first hit is the minimum
    labels = tuple(best[dsu.find(v)] for v in range(g.n))
    return len(best), labels


@dataclass(frozen=True)
class Bipartition:
    """2-coloring, consistent per component: side[v] in {0, 1}."""

    side: tuple[int, ...]


@dataclass(frozen=True)
class OddCycleWitness:
    """Cyclic vertex sequence (v0, ..., v_{2k}) of an odd cycle; the edge
    v_{2k}v0 closes it."""

    vertices: tuple[int, ...]

    def __post_init__(self):
        if len(self.vertices) % 2 == 0 or len(self.vertices) < 3:
            raise InvalidInput("odd cycle witness must have odd length >= 3")


def check_odd_cycle(g: UGraph, w: OddCycleWitness) -> bool:
    """Definitional check: distinct vertices, consecutive pairs adjacent."""
    vs = w.vertices
    if len(set(vs)) != len(vs):
        return False
    adj = {(min(u, v), max(u, v)) for u, v in g.edges}
    cyc = list(zip(vs, vs[1:] + vs[:1]))
    return all((min(a, b), max(a, b)) in adj for a, b in cyc)


def bipartition_or_odd_cycle(g: UGraph):
    """BFS 2-coloring; returns a Bipartition, or an OddCycleWitness built
    from the first conflicting edge (tie-breaks: smallest start vertex,
    edges scanned in index order)."""
    side = [-1] * g.n
    parent = [-1] * g.n
    depth = [0] * g.n
    for s in range(g.n):
        if side[s] != -1:
            continue
        side[s] = 0
        queue = [s]
        while queue:
            nxt = []
            for v in queue:
                for ei in g.incident[v]:
                    w = g.other_end(ei, v)
                    if side[w] == -1:
                        side[w] = side[v] ^ 1
                        parent[w] = v
                        depth[w] = depth[v] + 1
                        nxt.append(w)
                    elif side[w] == side[v]:
                        return _odd_cycle_from_conflict(v, w, parent, depth)
            queue = nxt
    return Bipartition(tuple(side))


def _odd_cycle_from_conflict(v, w, parent, depth):
    # Walk both endpoints up to their lowest common BFS ancestor; the two
    # tree paths plus the edge vw form an odd cycle.
    pv, pw = [v], [w]
    a, b = v, w
    while depth[a] > depth[b]:
        a = parent[a]
        pv.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        pw.append(b)
    while a != b:
        a = parent[a]
        b = parent[b]
        pv.append(a)
        pw.append(b)
    cycle = pv + list(reversed(pw[:-1]))
    return OddCycleWitness(tuple(cycle))


def is_bipartite(g: UGraph) -> bool:
    return isinstance(bipartition_or_odd_cycle(g), Bipartition)


def induced_edges(g: UGraph, verts) -> list[int]:
    """Edge indices with both endpoints inside verts."""
    vs = set(verts)
    return [i for i, (u, v) in enumerate(g.edges) if u in vs and v in vs]


def biconnected_components(g: UGraph):
    """Iterative Hopcroft-Tarjan.

    Returns (blocks, cut_vertices) where each block is a list of edge
    indices.  Parallel edges land in the same block.
    """
    visited = [False] * g.n
    disc = [0] * g.n
    low = [0] * g.n
    parent_edge = [-1] * g.n
    blocks: list[list[int]] = []
    cuts: set[int] = set()
    timer = 0
    for start in range(g.n):
        if visited[start] or not g.incident[start]:
            continue
        stack = [(start, iter(g.incident[start]))]
        estack: list[int] = []
        visited[start] = True
        disc[start] = low[start] = timer
        timer += 1
        root_children = 0
        while stack:
            v, it = stack[-1]
            advanced = False
            for ei in it:
                if ei == parent_edge[v]:
                    continue
                w = g.other_end(ei, v)
                if not visited[w]:
                    estack.append(ei)
                    visited[w] = True
                    disc[w] = low[w] = timer
                    timer += 1
                    parent_edge[w] = ei
                    if v == start:
                        root_children += 1
                    stack.append((w, iter(g.incident[w])))
                    advanced = True
                    break
                elif disc[w] < disc[v]:
                    estack.append(ei)
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                u = stack[-1][0]
                low[u] = min(low[u], low[v])
                if low[v] >= disc[u]:
                    # u separates v's subtree: pop one block
                    block = []
                    while True:
                        ei = estack.pop()
                        block.append(ei)
                        if ei == parent_edge[v]:
                            break
                    blocks.append(block)
                    if u != start:
                        cuts.add(u)
        if root_children >= 2:
            cuts.add(start)
    return blocks, cuts
