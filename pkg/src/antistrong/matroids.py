"""Matroid oracles and matroid union (partitioning) machinery.

Independence oracles are black boxes over an integer ground set 0..g-1.
The union algorithm inserts elements one at a time and searches the
exchange digraph breadth-first:

    arc x -> y   (y in class i, x not):  I_i - y + x stays independent
    sink at x, matroid i:                I_i + x stays independent

Inserting along a shortest augmenting path keeps every class independent.
An element with no augmenting path is spanned by the union of the classes
and stays spanned, so it is dropped for good.  When uncovered elements
remain at the end, everything reachable from them in the final exchange
digraph forms a deficiency set witnessing the min-max equality

    rank = |ground \\ F| + sum_i r_i(F),

which is asserted at runtime.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Callable, Optional

from .errors import InvalidInput, NoBase, SizeLimit
from .graphs import DSU, Digraph, ParityDSU, UGraph


@dataclass
class MatroidOracle:
    """Ground-set size plus an independence test.

    exchange_candidates, when provided, must return a superset of the
    elements y of the given class whose removal lets x enter; each
    candidate is still verified with the independence test, so the hint
    only speeds things up.
    """

    ground_size: int
    indep: Callable[[frozenset], bool]
    name: str = "matroid"
    exchange_candidates: Optional[Callable] = None

    def rank_greedy(self, subset) -> int:
        cur: set[int] = set()
        for el in sorted(subset):
            cur.add(el)
            if not self.indep(frozenset(cur)):
                cur.discard(el)
        return len(cur)


@dataclass(frozen=True)
class UnionResult:
    ground_size: int
    classes: tuple[frozenset, ...]
    deficiency: Optional[frozenset]

    @property
    def independent(self) -> frozenset:
        out: set[int] = set()
        for c in self.classes:
            out |= c
        return frozenset(out)

    @property
    def rank(self) -> int:
        return sum(len(c) for c in self.classes)

    def color_of(self, element: int) -> Optional[int]:
        for i, c in enumerate(self.classes):
            if element in c:
                return i
        return None


# ---------------------------------------------------------------------------
# concrete oracles


def cycle_matroid_indep(g: UGraph, subset=None):
    """Forests of g; ground set = edge indices.  With a subset argument,
    answers the single independence question directly."""

    def indep(sub) -> bool:
        dsu = DSU(g.n)
        return all(dsu.union(*g.edges[i]) for i in sub)

    if subset is not None:
        return indep(subset)

    def candidates(cls, x):
        # fundamental cycle of edge x in the forest cls
        return _forest_path_edges(g.n, [(i, g.edges[i]) for i in cls], g.edges[x])

    return MatroidOracle(g.m, indep, "cycle", candidates)


def bicircular_indep(g: UGraph, subset=None):
    """At most one cycle per component, any parity (pseudoforests)."""

    def indep(sub) -> bool:
        if not sub:
            return True
        dsu = DSU(g.n)
        for i in sub:
            dsu.union(*g.edges[i])
        edge_cnt = Counter(dsu.find(g.edges[i][0]) for i in sub)
        verts = {v for i in sub for v in g.edges[i]}
        vert_cnt = Counter(dsu.find(v) for v in verts)
        return all(c <= vert_cnt[r] for r, c in edge_cnt.items())

    if subset is not None:
        return indep(subset)

    def candidates(cls, x):
        return _component_edges(g, cls, x)

    return MatroidOracle(g.m, indep, "bicircular", candidates)


def even_bicircular_indep(g: UGraph, subset=None):
    """Odd pseudoforests: every component has at most one cycle and that
    cycle is odd, i.e. per component |edges| <= |vertices| - (1 if the
    component is bipartite else 0)."""

    def indep(sub) -> bool:
        if not sub:
            return True
        pd = ParityDSU(g.n)
        for i in sub:
            pd.union(*g.edges[i])
        edge_cnt = Counter(pd.find(g.edges[i][0])[0] for i in sub)
        verts = {v for i in sub for v in g.edges[i]}
        vert_cnt = Counter(pd.find(v)[0] for v in verts)
        for r, c in edge_cnt.items():
            if c > vert_cnt[r] - (0 if pd.odd[r] else 1):
                return False
        return True

    if subset is not None:
        return indep(subset)

    def candidates(cls, x):
        return _component_edges(g, cls, x)

    return MatroidOracle(g.m, indep, "even-bicircular", candidates)


def antistrong_matroid_indep(d: Digraph, subset=None):
    """CAT-free arc sets: representation edges form a forest; ground set =
    arc indices."""
    pairs = [(u, d.n + v) for u, v in d.arcs]

    def indep(sub) -> bool:
        dsu = DSU(2 * d.n)
        return all(dsu.union(*pairs[i]) for i in sub)

    if subset is not None:
        return indep(subset)

    def candidates(cls, x):
        return _forest_path_edges(2 * d.n, [(i, pairs[i]) for i in cls], pairs[x])

    return MatroidOracle(d.m, indep, "antistrong", candidates)


def _forest_path_edges(n, indexed_edges, endpoints):
    """Edge ids on the path between the endpoints in the given forest;
    empty when disconnected."""
    adj: dict[int, list[tuple[int, int]]] = {}
    for ei, (a, b) in indexed_edges:
        adj.setdefault(a, []).append((b, ei))
        adj.setdefault(b, []).append((a, ei))
    s, t = endpoints
    parent = {s: (-1, -1)}
    queue = deque([s])
    while queue:
        v = queue.popleft()
        if v == t:
            break
        for w, ei in adj.get(v, ()):
            if w not in parent:
                parent[w] = (v, ei)
                queue.append(w)
    if t not in parent:
        return []
    out = []
    cur = t
    while cur != s:
        prv, ei = parent[cur]
        out.append(ei)
        cur = prv
    return out


def _component_edges(g: UGraph, cls, x):
    """Edges of cls in the same component as edge x within cls + x."""
    dsu = DSU(g.n)
    for i in cls:
        dsu.union(*g.edges[i])
    dsu.union(*g.edges[x])
    root = dsu.find(g.edges[x][0])
    return [i for i in cls if dsu.find(g.edges[i][0]) == root]


# ---------------------------------------------------------------------------
# union algorithm


def matroid_union_max(oracles, ground_size: int, order=None,
                      want_deficiency: bool = True) -> UnionResult:
    """Maximum set partitionable into one independent set per oracle."""
    oracles = list(oracles)
    if not oracles:
        raise InvalidInput("need at least one matroid")
    for o in oracles:
        if o.ground_size != ground_size:
            raise InvalidInput("oracle ground size mismatch")
    classes: list[set[int]] = [set() for _ in oracles]
    color: dict[int, int] = {}
    if order is None:
        order = range(ground_size)

    def try_augment(e: int) -> bool:
        parent: dict[int, tuple[int, int]] = {e: (-1, -1)}
        queue = deque([e])
        while queue:
            x = queue.popleft()
            for i, orc in enumerate(oracles):
                if color.get(x) == i:
                    continue
                cls = classes[i]
                if orc.indep(frozenset(cls | {x})):
                    _apply_path(x, i, parent)
                    return True
                if orc.exchange_candidates is not None:
                    cand = orc.exchange_candidates(cls, x)
                else:
                    cand = cls
                for y in sorted(cand):
                    if y in parent or y not in cls:
                        continue
                    if orc.indep(frozenset((cls - {y}) | {x})):
                        parent[y] = (x, i)
                        queue.append(y)
        return False

    def _apply_path(x: int, sink: int, parent):
        # walk back to the inserted element, shifting each node into the
        # class of its successor
        moves = []
        cur = x
        while parent[cur][0] != -1:
            prv, i = parent[cur]
            moves.append((prv, cur, i))  # prv replaces cur in class i
            cur = prv
        if color.get(x) is not None:
            classes[color[x]].discard(x)
        classes[sink].add(x)
        color[x] = sink
        for prv, gone, i in moves:
            classes[i].discard(gone)
            if gone != x and color.get(gone) == i:
                del color[gone]
            if color.get(prv) is not None and color[prv] != i:
                classes[color[prv]].discard(prv)
            classes[i].add(prv)
            color[prv] = i
        for i, orc in enumerate(oracles):
            assert orc.indep(frozenset(classes[i])), "augmenting path broke a class"

    for e in order:
        if not (0 <= e < ground_size):
            raise InvalidInput("element out of range")
        if e in color:
            continue
        try_augment(e)

    uncovered = [e for e in range(ground_size) if e not in color]
    deficiency = None
    if uncovered and want_deficiency:
        deficiency = _deficiency_set(oracles, classes, color, uncovered)
        rank = sum(len(c) for c in classes)
        outside = ground_size - len(deficiency)
        parts = sum(o.rank_greedy(deficiency) for o in oracles)
        assert outside + parts == rank, "deficiency min-max failed"
    return UnionResult(ground_size, tuple(frozenset(c) for c in classes),
                       deficiency)


def _deficiency_set(oracles, classes, color, uncovered):
    """Everything reachable from the uncovered elements in the final
    exchange digraph (including those elements)."""
    seen = set(uncovered)
    queue = deque(sorted(uncovered))
    while queue:
        x = queue.popleft()
        for i, orc in enumerate(oracles):
            if color.get(x) == i:
                continue
            cls = classes[i]
            assert not orc.indep(frozenset(cls | {x})), \
                "missed augmenting path"
            if orc.exchange_candidates is not None:
                cand = orc.exchange_candidates(cls, x)
            else:
                cand = cls
            for y in sorted(cand):
                if y in seen or y not in cls:
                    continue
                if orc.indep(frozenset((cls - {y}) | {x})):
                    seen.add(y)
                    queue.append(y)
    return frozenset(seen)


def union_oracle(oracles, ground_size: int) -> MatroidOracle:
    """Independence oracle of the union matroid (partitionability)."""
    oracles = list(oracles)

    def indep(subset) -> bool:
        res = matroid_union_max(oracles, ground_size,
                                order=sorted(subset), want_deficiency=False)
        return res.rank == len(set(subset))

    orc = MatroidOracle(ground_size, indep, "union")

    def deficiency_of(subset):
        sub = sorted(subset)
        res = matroid_union_max(oracles, ground_size, order=sub)
        return res.deficiency

    orc.deficiency_of = deficiency_of  # type: ignore[attr-defined]
    return orc


def min_cost_base(oracle: MatroidOracle, costs, require_size=None):
    """Greedy minimum-cost base; ties broken by element index.

    Returns (base tuple in pick order, total cost).  When require_size is
    given and the matroid rank falls short, raises NoBase carrying the
    best independent set and, if the oracle can report one, a deficiency
    set.
    """
    if len(costs) != oracle.ground_size:
        raise InvalidInput("cost vector length mismatch")
    picked: list[int] = []
    cur: set[int] = set()
    for e in sorted(range(oracle.ground_size), key=lambda i: (costs[i], i)):
        cur.add(e)
        if oracle.indep(frozenset(cur)):
            picked.append(e)
        else:
            cur.discard(e)
    total = sum(costs[e] for e in picked)
    if require_size is not None and len(picked) < require_size:
        deficiency = None
        report = getattr(oracle, "deficiency_of", None)
        if report is not None:
            deficiency = report(range(oracle.ground_size))
        raise NoBase(f"rank {len(picked)} below requested {require_size}",
                     best=tuple(picked), deficiency=deficiency)
    return tuple(picked), total


def rank_bruteforce(f, elements, limit: int = 12) -> int:
    """Exact subpartition rank formula

        min over subpartitions P of S:  |S \\ union(P)| + sum_T f(T)

    evaluated exhaustively over all subpartitions (organised as a subset
    DP; every subpartition is considered).  Test oracle only."""
    elems = sorted(set(elements))
    s = len(elems)
    if s > limit:
        raise SizeLimit(f"{s} elements exceeds brute-force cap {limit}")
    fcache: dict[int, int] = {}

    def fval(mask: int) -> int:
        got = fcache.get(mask)
        if got is None:
            members = frozenset(elems[i] for i in range(s) if mask >> i & 1)
            got = f(members)
            fcache[mask] = got
        return got

    dp = [0] * (1 << s)
    for mask in range(1, 1 << s):
        low = mask & -mask
        best = dp[mask ^ low] + 1  # lowest element left uncovered
        sub = mask
        while sub:
            if sub & low:
                cand = fval(sub) + dp[mask ^ sub]
                if cand < best:
                    best = cand
            sub = (sub - 1) & mask
        dp[mask] = best
    return dp[(1 << s) - 1]


def graph_count_f(g: UGraph):
    """f(T) = 2 nu(T) - 1 - beta(T) on edge subsets: nu counts spanned
    vertices, beta is 1 when the edge-induced subgraph is bipartite."""

    def f(edge_subset) -> int:
        if not edge_subset:
            return 0
        pd = ParityDSU(g.n)
        ok = True
        for i in edge_subset:
            ok = pd.union(*g.edges[i]) and ok
        verts = {v for i in edge_subset for v in g.edges[i]}
        return 2 * len(verts) - 1 - (1 if ok else 0)

    return f
