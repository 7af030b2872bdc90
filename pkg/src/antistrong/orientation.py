"""Orientation pipeline: forest/odd-pseudoforest decompositions, the
CAT-free orientation construction, antistrong orientations with violating
partition certificates, good 2-detachments, the exchange-based
decomposition algorithm, and anticonnected orientations.

Color conventions follow the usual red/black picture: the black edge set
is a forest (spanning tree per component after normalization) and the red
edge set is a pseudoforest.  An edge is "precious" when both endpoints
get the same color in the 2-coloring of the black forest.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional, Union

from .analysis import is_antistrong
from .errors import Disconnected, InvalidInput, NotAPartition
from .graphs import (
    DSU,
    Digraph,
    ParityDSU,
    UGraph,
    biconnected_components,
    connected_components,
    induced_edges,
    is_bipartite,
)
from .matroids import (
    bicircular_indep,
    cycle_matroid_indep,
    even_bicircular_indep,
    matroid_union_max,
)

# ---------------------------------------------------------------------------
# domain types


@dataclass(frozen=True)
class RedComponent:
    """One edge-bearing component of the red pseudoforest."""

    vertices: frozenset[int]
    edges: tuple[int, ...]
    root: int
    precious: Optional[int]  # edge index of the reserved same-side cycle edge


@dataclass(frozen=True)
class TwoDecomposition:
    """Partition of (a subset of) the edges into a black forest and a red
    odd pseudoforest, plus the data the orientation construction needs."""

    n: int
    black: tuple[int, ...]
    red: tuple[int, ...]
    side: tuple[int, ...]  # 2-coloring of the black forest, 0 = side X
    components: tuple[RedComponent, ...]


@dataclass(frozen=True)
class Orientation:
    """arcs[i] is the chosen direction of edge i."""

    n: int
    arcs: tuple[tuple[int, int], ...]

    def to_digraph(self) -> Digraph:
        return Digraph(self.n, self.arcs)


@dataclass(frozen=True)
class PartitionCertificate:
    """Vertex partition Q witnessing e(Q) < |Q| - 1 + b(Q)."""

    parts: tuple[frozenset[int], ...]


@dataclass(frozen=True)
class Detachment:
    """Vertex v splits into copies v (tail side) and n + v (head side);
    edges[i] is the placement of original edge i between the copies."""

    n: int
    edges: tuple[tuple[int, int], ...]


# ---------------------------------------------------------------------------
# small helpers on edge subsets


def _is_forest(g: UGraph, edge_set) -> bool:
    dsu = DSU(g.n)
    return all(dsu.union(*g.edges[i]) for i in edge_set)


def _two_color_forest(g: UGraph, edge_set) -> list[int]:
    """2-color the forest; in each forest component the smallest vertex
    gets side 0.  Vertices outside any edge also get side 0."""
    adj: dict[int, list[int]] = {}
    for i in edge_set:
        u, v = g.edges[i]
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] != -1:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in adj.get(v, ()):
                if side[w] == -1:
                    side[w] = side[v] ^ 1
                    queue.append(w)
    return side


def _edge_components(g: UGraph, edge_set):
    """Group an edge set into connected components; each component is a
    sorted tuple of edge indices, components ordered by smallest vertex."""
    dsu = DSU(g.n)
    for i in edge_set:
        dsu.union(*g.edges[i])
    groups: dict[int, list[int]] = {}
    for i in sorted(edge_set):
        groups.setdefault(dsu.find(g.edges[i][0]), []).append(i)
    keyed = sorted(
        groups.values(), key=lambda es: min(min(g.edges[i]) for i in es)
    )
    return [tuple(es) for es in keyed]


def _vertices_of(g: UGraph, edge_set) -> frozenset[int]:
    out = set()
    for i in edge_set:
        u, v = g.edges[i]
        out.add(u)
        out.add(v)
    return frozenset(out)


def _edges_bipartite(g: UGraph, edge_set) -> bool:
    pd = ParityDSU(g.n)
    ok = True
    for i in edge_set:
        ok = pd.union(*g.edges[i]) and ok
    return ok


def _component_cycle(g: UGraph, comp_edges):
    """Edge indices of the unique cycle in a connected <=1-cycle component
    (empty tuple for trees), plus the cycle vertex set."""
    deg: dict[int, int] = {}
    incident: dict[int, list[int]] = {}
    for i in comp_edges:
        for v in g.edges[i]:
            deg[v] = deg.get(v, 0) + 1
            incident.setdefault(v, []).append(i)
    alive = set(comp_edges)
    queue = deque(v for v, dg in deg.items() if dg <= 1)
    while queue:
        v = queue.popleft()
        for i in incident[v]:
            if i not in alive:
                continue
            alive.discard(i)
            w = g.other_end(i, v)
            deg[w] -= 1
            deg[v] -= 1
            if deg[w] == 1:
                queue.append(w)
    cycle = tuple(sorted(alive))
    return cycle, _vertices_of(g, cycle)


# ---------------------------------------------------------------------------
# decomposition construction


def two_decomposition(g: UGraph, black, red) -> TwoDecomposition:
    """Validate a black/red split and derive sides, roots and precious
    edges.  black and red must be disjoint; they need not cover E(g)."""
    black = tuple(sorted(black))
    red = tuple(sorted(red))
    if set(black) & set(red):
        raise InvalidInput("black and red edge sets overlap")
    for i in black + red:
        if not 0 <= i < len(g.edges):
            raise InvalidInput("edge index out of range")
    if not _is_forest(g, black):
        raise InvalidInput("black edge set is not a forest")
    if not even_bicircular_indep(g).indep(red):
        raise InvalidInput("red edge set is not an odd pseudoforest")
    side = _two_color_forest(g, black)
    comps = []
    for comp in _edge_components(g, red):
        verts = _vertices_of(g, comp)
        cycle, cyc_verts = _component_cycle(g, comp)
        if not cycle:
            comps.append(RedComponent(verts, comp, min(verts), None))
            continue
        assert len(cycle) % 2 == 1, "red cycle should be odd here"
        neighbours: dict[int, list[tuple[int, int]]] = {v: [] for v in cyc_verts}
        for i in cycle:
            u, v = g.edges[i]
            neighbours[u].append((v, i))
            neighbours[v].append((u, i))
        # root: cycle vertex with the most same-side cycle neighbours,
        # ties by vertex id; s: its smallest same-side cycle neighbour
        def same_side(v):
            return [(w, i) for w, i in neighbours[v] if side[w] == side[v]]

        root = max(sorted(cyc_verts), key=lambda v: (len(same_side(v)), -v))
        mates = same_side(root)
        assert mates, "odd cycle must contain a monochromatic edge"
        _, precious = min(mates)
        comps.append(RedComponent(verts, comp, root, precious))
    return TwoDecomposition(g.n, black, red, tuple(side), tuple(comps))


def _promote_black(g: UGraph, black: set[int], red: set[int]) -> None:
    """Move red edges that join distinct black components into black,
    making the black forest maximal (spanning tree per component)."""
    dsu = DSU(g.n)
    for i in black:
        dsu.union(*g.edges[i])
    for i in sorted(red):
        if dsu.union(*g.edges[i]):
            red.discard(i)
            black.add(i)


def decompose_forest_odd_pseudoforest(g: UGraph):
    """Split E(g) into a maximal forest and an odd pseudoforest.

    Returns (TwoDecomposition, None) on success and (None, deficiency)
    otherwise, where the deficiency is the edge set witnessing that the
    union of the two count matroids cannot cover E(g).
    """
    m = len(g.edges)
    res = matroid_union_max(
        [cycle_matroid_indep(g), even_bicircular_indep(g)], m
    )
    if res.rank < m:
        assert res.deficiency is not None and res.deficiency
        return None, res.deficiency
    black = set(res.classes[0])
    red = set(res.classes[1])
    _promote_black(g, black, red)
    return two_decomposition(g, black, red), None


# ---------------------------------------------------------------------------
# the CAT-free orientation construction


def _orient_decomposition(g: UGraph, decomp: TwoDecomposition) -> dict:
    """Directions for black + red edges per the tree-plus-pseudoforest
    construction; black edges point from side 1 into side 0, crossing red
    edges the other way, same-side red edges along/against the component
    root and the reserved precious edge by side."""
    side = decomp.side
    arcs: dict[int, tuple[int, int]] = {}
    for i in decomp.black:
        u, v = g.edges[i]
        assert side[u] != side[v]
        arcs[i] = (u, v) if side[u] == 1 else (v, u)
    for comp in decomp.components:
        body = [i for i in comp.edges if i != comp.precious]
        adj: dict[int, list[tuple[int, int]]] = {}
        for i in body:
            u, v = g.edges[i]
            adj.setdefault(u, []).append((v, i))
            adj.setdefault(v, []).append((u, i))
        parent: dict[int, int] = {comp.root: comp.root}
        order = deque([comp.root])
        while order:
            v = order.popleft()
            for w, _ in adj.get(v, ()):
                if w not in parent:
                    parent[w] = v
                    order.append(w)
        for i in body:
            u, v = g.edges[i]
            if side[u] != side[v]:
                arcs[i] = (u, v) if side[u] == 0 else (v, u)
                continue
            child, par = (u, v) if parent[u] == v else (v, u)
            assert parent[child] == par, "body edge must be a tree edge"
            # within side X: toward the root; within side Y: away from it
            arcs[i] = (child, par) if side[u] == 0 else (par, child)
        if comp.precious is not None:
            r, s = comp.root, g.other_end(comp.precious, comp.root)
            assert side[r] == side[s]
            arcs[comp.precious] = (r, s) if side[r] == 0 else (s, r)
    return arcs


def catfree_orient(g: UGraph, tree_edges, pseudo_edges) -> Orientation:
    """Orient the edge-disjoint union of a spanning tree and an odd
    pseudoforest so that no closed antidirected trail appears."""
    tree = set(tree_edges)
    pseudo = set(pseudo_edges)
    if tree | pseudo != set(range(len(g.edges))) or tree & pseudo:
        raise InvalidInput("tree and pseudoforest must partition the edges")
    if len(tree) != g.n - 1:
        raise InvalidInput("tree part must be a spanning tree")
    decomp = two_decomposition(g, tree, pseudo)  # validates both predicates
    arcs = _orient_decomposition(g, decomp)
    return Orientation(g.n, tuple(arcs[i] for i in range(len(g.edges))))


# ---------------------------------------------------------------------------
# partition certificates


def partition_stats(g: UGraph, parts):
    """(cross-part edge count, bipartite part count) of a partition."""
    where = {}
    for idx, part in enumerate(parts):
        for v in part:
            where[v] = idx
    e_cross = sum(1 for u, v in g.edges if where[u] != where[v])
    b_count = sum(
        1 for part in parts if _edges_bipartite(g, induced_edges(g, part))
    )
    return e_cross, b_count


def verify_certificate(g: UGraph, cert: PartitionCertificate) -> bool:
    """True iff cert.parts is a partition of V(g) strictly violating the
    orientation bound e(Q) >= |Q| - 1 + b(Q).  Recomputed from scratch."""
    parts = cert.parts
    seen: set[int] = set()
    for part in parts:
        if not part:
            raise NotAPartition("empty part")
        if part & seen:
            raise NotAPartition("overlapping parts")
        seen |= part
    if seen != set(range(g.n)):
        raise NotAPartition("parts do not cover the vertex set")
    e_cross, b_count = partition_stats(g, parts)
    return e_cross < len(parts) - 1 + b_count


def _sorted_parts(parts) -> tuple[frozenset[int], ...]:
    return tuple(sorted((frozenset(p) for p in parts), key=min))


def _singleton_certificate(g: UGraph) -> PartitionCertificate:
    return PartitionCertificate(_sorted_parts({v} for v in range(g.n)))


def _alpha(g: UGraph, blocks) -> int:
    """Value of the covering bound for disjoint edge blocks: uncovered
    edges count 1 each, a block T counts 2*nu(T) - 1 - beta(T)."""
    covered: set[int] = set()
    total = 0
    for b in blocks:
        bs = set(b)
        assert not (bs & covered)
        covered |= bs
        total += 2 * len(_vertices_of(g, bs)) - 1 - (1 if _edges_bipartite(g, bs) else 0)
    return total + (len(g.edges) - len(covered))


def _merge_intersecting(g: UGraph, blocks):
    blocks = [set(b) for b in blocks]
    changed = True
    while changed:
        changed = False
        for i in range(len(blocks)):
            if changed:
                break
            vi = _vertices_of(g, blocks[i])
            for j in range(i + 1, len(blocks)):
                if vi & _vertices_of(g, blocks[j]):
                    blocks[i] |= blocks[j]
                    del blocks[j]
                    changed = True
                    break
    return [tuple(sorted(b)) for b in blocks]


def _certificate_from_deficiency(g: UGraph, deficiency, union_rank: int):
    """Refine the deficiency edge set into a violating vertex partition:
    split into connected blocks, merge vertex-intersecting blocks, close
    each block to its vertex-induced edge set, then add singleton parts.
    The bound value never increases along the way."""
    n = g.n
    blocks = [tuple(sorted(deficiency))]
    value = _alpha(g, blocks)
    blocks = [comp for b in blocks for comp in _edge_components(g, b)]
    split_value = _alpha(g, blocks)
    assert split_value <= value
    assert split_value == union_rank, "component split must realize the rank"
    blocks = _merge_intersecting(g, blocks)
    merged_value = _alpha(g, blocks)
    assert merged_value <= split_value
    blocks = [tuple(induced_edges(g, _vertices_of(g, b))) for b in blocks]
    closed_value = _alpha(g, blocks)
    assert closed_value <= merged_value
    assert closed_value < 2 * n - 1
    parts = [_vertices_of(g, b) for b in blocks]
    covered = set().union(*parts) if parts else set()
    parts.extend({v} for v in range(n) if v not in covered)
    return PartitionCertificate(_sorted_parts(parts))


def _blob_certificate(g: UGraph) -> Optional[PartitionCertificate]:
    """Sparse-side certificate: strip non-bipartite biconnected blobs down
    to their non-cut vertices, keep the bipartite remainder's components
    as parts and the stripped vertices as singletons."""
    blocks, cuts = biconnected_components(g)
    stripped: set[int] = set()
    for blk in blocks:
        if not _edges_bipartite(g, blk):
            stripped |= _vertices_of(g, blk)
    stripped -= cuts
    if not stripped:
        return None
    rest = [v for v in range(g.n) if v not in stripped]
    dsu = DSU(g.n)
    for i in induced_edges(g, rest):
        dsu.union(*g.edges[i])
    groups: dict[int, set[int]] = {}
    for v in rest:
        groups.setdefault(dsu.find(v), set()).add(v)
    parts = list(groups.values()) + [{v} for v in sorted(stripped)]
    cert = PartitionCertificate(_sorted_parts(parts))
    return cert if verify_certificate(g, cert) else None


def antistrong_orientation(
    g: UGraph,
) -> Union[Orientation, PartitionCertificate]:
    """Orient g antistrongly, or return a partition certificate proving
    that no orientation can work.

    Success path: the cycle/even-bicircular matroid union reaches rank
    2n - 1; its forest class is then forced to be a spanning tree and the
    CAT-free construction orients those edges into a spanning tree of the
    bipartite representation.  Leftover edges are oriented low -> high
    (flipped when the arc already exists), which cannot disconnect it.
    """
    n = g.n
    m = len(g.edges)
    if n < 3:
        cert = _singleton_certificate(g)
        assert verify_certificate(g, cert)
        return cert
    res = matroid_union_max(
        [cycle_matroid_indep(g), even_bicircular_indep(g)], m
    )
    if res.rank == 2 * n - 1:
        black, red = set(res.classes[0]), set(res.classes[1])
        assert len(black) == n - 1 and len(red) == n
        decomp = two_decomposition(g, black, red)
        arcs = _orient_decomposition(g, decomp)
        used = set(arcs.values())
        for i in range(m):
            if i in arcs:
                continue
            u, v = g.edges[i]
            cand = (u, v) if u < v else (v, u)
            if cand in used:
                cand = (cand[1], cand[0])
            assert cand not in used
            arcs[i] = cand
            used.add(cand)
        orientation = Orientation(n, tuple(arcs[i] for i in range(m)))
        assert is_antistrong(orientation.to_digraph())
        return orientation

    if is_bipartite(g):
        cert = PartitionCertificate(_sorted_parts([set(range(n))]))
    elif res.deficiency:
        cert = _certificate_from_deficiency(g, res.deficiency, res.rank)
    else:
        # every edge is independent but there are too few of them
        cert = _blob_certificate(g) or _singleton_certificate(g)
    assert verify_certificate(g, cert)
    return cert


# ---------------------------------------------------------------------------
# good 2-detachments


def good_2_detachment(g: UGraph) -> Union[Detachment, PartitionCertificate]:
    """Connected bipartite 2-detachment with sides V'/V'', or the same
    partition certificate that rules out an antistrong orientation."""
    out = antistrong_orientation(g)
    if isinstance(out, PartitionCertificate):
        return out
    det = Detachment(g.n, tuple((t, g.n + h) for t, h in out.arcs))
    assert detachment_is_good(g, det)
    return det


def detachment_is_good(g: UGraph, det: Detachment) -> bool:
    """Definitional re-check: every edge realized between the two copies
    of its own endpoints, all edges cross the copy sides, connected."""
    n = g.n
    if det.n != n or len(det.edges) != len(g.edges):
        return False
    dsu = DSU(2 * n)
    merged = 0
    for (u, v), (a, b) in zip(g.edges, det.edges):
        if not (0 <= a < 2 * n and 0 <= b < 2 * n):
            return False
        if (a < n) == (b < n):
            return False  # must join the two sides
        orig = {a if a < n else a - n, b if b < n else b - n}
        if orig != {u, v}:
            return False
        if dsu.union(a, b):
            merged += 1
    return merged == 2 * n - 1


# ---------------------------------------------------------------------------
# exchange-based decomposition (graph-theoretic alternative pipeline)


def _red_component_map(g: UGraph, red):
    dsu = DSU(g.n)
    for i in red:
        dsu.union(*g.edges[i])
    return dsu


def _tree_path(g: UGraph, tree: set[int], a: int, b: int):
    """Vertex path a..b inside the black spanning tree."""
    adj: dict[int, list[tuple[int, int]]] = {}
    for i in tree:
        u, v = g.edges[i]
        adj.setdefault(u, []).append((v, i))
        adj.setdefault(v, []).append((u, i))
    parent = {a: (a, -1)}
    queue = deque([a])
    while queue:
        v = queue.popleft()
        if v == b:
            break
        for w, i in sorted(adj.get(v, ())):
            if w not in parent:
                parent[w] = (v, i)
                queue.append(w)
    assert b in parent, "tree path endpoints in different components"
    path = [b]
    while path[-1] != a:
        path.append(parent[path[-1]][0])
    path.reverse()
    return path


def _edge_between(g: UGraph, edge_set, u: int, v: int) -> int:
    for i in sorted(edge_set):
        if set(g.edges[i]) == {u, v}:
            return i
    raise AssertionError("expected an edge between the two vertices")


def _spanning_tree_ok(g: UGraph, black) -> bool:
    return len(black) == g.n - 1 and _is_forest(g, black)


def _pseudoforest_ok(g: UGraph, red) -> bool:
    return bicircular_indep(g).indep(red)


def _bad_components(g: UGraph, red, side):
    """Unicyclic red components whose cycle has no same-side edge, with
    their cores (component of the cycle after removing all same-side
    edges of the component)."""
    out = []
    for comp in _edge_components(g, red):
        cycle, cyc_verts = _component_cycle(g, comp)
        if not cycle:
            continue
        if any(side[g.edges[i][0]] == side[g.edges[i][1]] for i in cycle):
            continue
        keep = [
            i for i in comp if side[g.edges[i][0]] != side[g.edges[i][1]]
        ]
        pieces = _edge_components(g, keep)
        core = next(p for p in pieces if set(cycle) <= set(p))
        out.append((comp, cycle, cyc_verts, core, _vertices_of(g, core)))
    return out


def _one_orientation(g: UGraph, core, cycle):
    """out-neighbour map of the core: cycle oriented consistently starting
    at its smallest vertex toward its smaller neighbour, the hanging trees
    toward the cycle."""
    nxt: dict[int, tuple[int, int]] = {}
    cyc_adj: dict[int, list[tuple[int, int]]] = {}
    for i in cycle:
        u, v = g.edges[i]
        cyc_adj.setdefault(u, []).append((v, i))
        cyc_adj.setdefault(v, []).append((u, i))
    start = min(cyc_adj)
    # walk by edges so two-edge cycles (parallel copies) work too
    w0, e0 = min(cyc_adj[start])
    nxt[start] = (w0, e0)
    prev_edge, cur = e0, w0
    while cur != start:
        w, e = next(
            (w, e) for w, e in sorted(cyc_adj[cur]) if e != prev_edge
        )
        nxt[cur] = (w, e)
        prev_edge, cur = e, w
    adj: dict[int, list[tuple[int, int]]] = {}
    for i in core:
        u, v = g.edges[i]
        adj.setdefault(u, []).append((v, i))
        adj.setdefault(v, []).append((u, i))
    queue = deque(cyc_adj)
    seen = set(cyc_adj)
    while queue:
        v = queue.popleft()
        for w, i in adj.get(v, ()):
            if w not in seen:
                seen.add(w)
                nxt[w] = (v, i)  # hang toward the cycle
                queue.append(w)
    return nxt


def _fix_bad_components(g: UGraph, black: set[int], red: set[int]):
    """Phase: restore niceness.  Repeatedly swap one black and one red
    edge around the bad component with the smallest core; the measure
    (#bad components, smallest core size) strictly decreases.  Returns
    False when a core is black-connected, which certifies infeasibility."""
    n = g.n
    guard = 4 * len(g.edges) * max(n, 1) + 64
    prev_measure = None
    while True:
        guard -= 1
        assert guard > 0, "bad-component elimination failed to terminate"
        side = _two_color_forest(g, black)
        bad = _bad_components(g, red, side)
        if not bad:
            return True
        measure = (len(bad), min(len(core_v) for *_, core_v in bad))
        if prev_measure is not None:
            assert measure < prev_measure
        prev_measure = measure
        comp, cycle, cyc_verts, core, core_verts = min(
            bad, key=lambda item: (len(item[4]), min(item[4]))
        )
        # black components of the core
        dsu = DSU(n)
        core_black = [
            i
            for i in black
            if g.edges[i][0] in core_verts and g.edges[i][1] in core_verts
        ]
        for i in core_black:
            dsu.union(*g.edges[i])
        x_parts: dict[int, set[int]] = {}
        for v in core_verts:
            x_parts.setdefault(dsu.find(v), set()).add(v)
        if len(x_parts) == 1:
            return False  # core is black-connected: dense bipartite block
        part_of = {v: root for root, vs in x_parts.items() for v in vs}
        # contracted tree on X-parts and outside black components
        out_dsu = DSU(n)
        for i in black:
            u, v = g.edges[i]
            if u not in core_verts and v not in core_verts:
                out_dsu.union(u, v)
        t_adj: dict = {}
        crossing: dict = {}
        for i in black:
            u, v = g.edges[i]
            if (u in core_verts) == (v in core_verts):
                continue
            cu, wv = (u, v) if u in core_verts else (v, u)
            a = ("x", part_of[cu])
            b = ("w", out_dsu.find(wv))
            t_adj.setdefault(a, set()).add(b)
            t_adj.setdefault(b, set()).add(a)
            crossing[(a, b)] = crossing[(b, a)] = (cu, wv, i)
        for root in x_parts:
            t_adj.setdefault(("x", root), set())
        # minimal subtree containing the X-parts: prune W-leaves
        degree = {node: len(nb) for node, nb in t_adj.items()}
        alive = set(t_adj)
        queue = deque(
            node for node in alive if node[0] == "w" and degree[node] <= 1
        )
        while queue:
            node = queue.popleft()
            if node not in alive:
                continue
            alive.discard(node)
            for nb in t_adj[node]:
                if nb in alive:
                    degree[nb] -= 1
                    if nb[0] == "w" and degree[nb] <= 1:
                        queue.append(nb)
        leaves = sorted(
            (
                node
                for node in alive
                if node[0] == "x" and degree[node] <= 1
            ),
            key=lambda nd: min(x_parts[nd[1]]),
        )
        assert len([nd for nd in alive if nd[0] == "x"]) >= 2
        chosen = None
        for node in leaves:
            if not cyc_verts <= x_parts[node[1]]:
                chosen = node
                break
        assert chosen is not None, "some leaf part must miss the cycle"
        neighbour = next(nb for nb in t_adj[chosen] if nb in alive)
        u, v, black_edge = crossing[(chosen, neighbour)]
        # follow the core's 1-orientation from u while staying in the part
        nxt = _one_orientation(g, core, cycle)
        part = x_parts[chosen[1]]
        cur = u
        hops = 0
        while True:
            hops += 1
            assert hops <= 2 * n + 2
            y, red_edge = nxt[cur]
            if y not in part:
                x = cur
                break
            cur = y
        assert y in core_verts and y not in part
        black.discard(black_edge)
        black.add(red_edge)
        red.discard(red_edge)
        red.add(black_edge)
        assert _spanning_tree_ok(g, black)
        assert _pseudoforest_ok(g, red)


def _even_cycle_data(g: UGraph, red, side):
    """(component edges, cycle, precious edge, endpoints) for every red
    component whose cycle is even; precious = smallest same-side cycle
    edge.  Requires the decomposition to be nice."""
    out = []
    for comp in _edge_components(g, red):
        cycle, _ = _component_cycle(g, comp)
        if not cycle or len(cycle) % 2 == 1:
            continue
        same = [
            i for i in cycle if side[g.edges[i][0]] == side[g.edges[i][1]]
        ]
        assert same, "even red cycle without a same-side edge: not nice"
        e_i = min(same)
        out.append((comp, cycle, e_i, g.edges[e_i]))
    return out


def _black_subtree_nodes(g: UGraph, black: set[int], marks: set[int]):
    """Minimal subtree of the black tree containing the marked vertices,
    as (vertex set, adjacency within the subtree)."""
    adj: dict[int, list[int]] = {}
    for i in black:
        u, v = g.edges[i]
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    deg = {v: len(nb) for v, nb in adj.items()}
    alive = set(adj)
    queue = deque(v for v in alive if deg[v] == 1 and v not in marks)
    while queue:
        v = queue.popleft()
        if v not in alive or v in marks or deg[v] > 1:
            continue
        alive.discard(v)
        for w in adj[v]:
            if w in alive:
                deg[w] -= 1
                if deg[w] == 1 and w not in marks:
                    queue.append(w)
    sub_adj = {
        v: [w for w in adj[v] if w in alive] for v in alive
    }
    return alive, sub_adj


def _suppress_degree_two(sub_adj, marks: set[int]):
    """Contract unmarked degree-2 vertices; returns adjacency of the
    suppressed tree (vertices are marked or have degree >= 3)."""
    adj = {v: set(nb) for v, nb in sub_adj.items()}
    changed = True
    while changed:
        changed = False
        for v in sorted(adj):
            if v in marks or len(adj[v]) != 2:
                continue
            a, b = sorted(adj[v])
            adj[a].discard(v)
            adj[b].discard(v)
            adj[a].add(b)
            adj[b].add(a)
            del adj[v]
            changed = True
            break
    return adj


def _case_a_swap(g, black, red, u, x_t, e_map):
    """Case A: recolor the first black edge crossing into x_t's red
    component along the black path from u, against that component's
    reserved precious edge."""
    red_dsu = _red_component_map(g, red)
    comp_root = red_dsu.find(x_t)
    assert red_dsu.find(u) != comp_root
    e_i = e_map[comp_root]
    path = _tree_path(g, black, u, x_t)
    vw = None
    for a, b in zip(path, path[1:]):
        if red_dsu.find(a) != comp_root and red_dsu.find(b) == comp_root:
            vw = _edge_between(g, black, a, b)
            break
    assert vw is not None
    black.discard(vw)
    black.add(e_i)
    red.discard(e_i)
    red.add(vw)


def _case_b_swap(g, black, red, x_i, y_i, e_i, e_map):
    """Case B: either reduce to Case A via a path vertex outside the red
    component, or swap the precious edge against a same-red-side black
    path edge (turning the even cycle odd)."""
    red_dsu = _red_component_map(g, red)
    comp_root = red_dsu.find(x_i)
    path = _tree_path(g, black, x_i, y_i)
    outside = [v for v in path if red_dsu.find(v) != comp_root]
    if outside:
        _case_a_swap(g, black, red, outside[0], x_i, e_map)
        return
    # 2-color the component by its red edges (its unique cycle is even)
    comp_edges = [i for i in red if red_dsu.find(g.edges[i][0]) == comp_root]
    pd = ParityDSU(g.n)
    for i in comp_edges:
        ok = pd.union(*g.edges[i])
        assert ok, "component with an even cycle must be red-bipartite"
    def rcolor(v):
        root, par = pd.find(v)
        assert root == pd.find(x_i)[0]
        return par

    vw = None
    for a, b in zip(path, path[1:]):
        if rcolor(a) == rcolor(b):
            vw = _edge_between(g, black, a, b)
            break
    assert vw is not None, "odd closed walk must repeat a red color"
    black.discard(vw)
    black.add(e_i)
    red.discard(e_i)
    red.add(vw)


def _fix_even_cycles(g: UGraph, black: set[int], red: set[int]) -> None:
    """Phase: eliminate even red cycles one swap at a time, keeping the
    decomposition nice; the even-cycle count strictly decreases."""
    n = g.n
    guard = len(g.edges) + 8
    while True:
        guard -= 1
        assert guard > 0, "even-cycle elimination failed to terminate"
        side = _two_color_forest(g, black)
        evens = _even_cycle_data(g, red, side)
        if not evens:
            return
        count_before = len(evens)
        red_dsu = _red_component_map(g, red)
        e_map = {red_dsu.find(g.edges[e][0]): e for _, _, e, _ in evens}
        marks: set[int] = set()
        for _, _, _, (a, b) in evens:
            marks.add(a)
            marks.add(b)
        ends_of = {
            frozenset(ends): e for _, _, e, ends in evens
        }
        alive, sub_adj = _black_subtree_nodes(g, black, marks)
        t_adj = _suppress_degree_two(sub_adj, marks)
        t_leaves = sorted(v for v in t_adj if len(t_adj[v]) <= 1)
        picked = None
        for f in t_leaves:
            f_prime = next(iter(t_adj[f])) if t_adj[f] else None
            if f_prime is not None and f_prime in marks:
                picked = (f, f_prime)
                break
        if picked is not None:
            f, f_prime = picked
            if red_dsu.find(f) != red_dsu.find(f_prime):
                _case_a_swap(g, black, red, f_prime, f, e_map)
            else:
                e_i = ends_of.get(frozenset((f, f_prime)))
                assert e_i is not None, "same-component marked pair must share an edge"
                _case_b_swap(g, black, red, f, f_prime, e_i, e_map)
        else:
            # all leaves hang off unmarked branch vertices
            inner = {v: set(nb) for v, nb in t_adj.items()}
            for f in t_leaves:
                for w in t_adj[f]:
                    inner[w].discard(f)
            inner = {v: nb for v, nb in inner.items() if v not in t_leaves}
            f_prime = min(v for v in inner if len(inner[v]) <= 1)
            lset = sorted(w for w in t_adj[f_prime] if w in t_leaves)
            assert f_prime not in marks and len(lset) >= 2
            e_i = ends_of.get(frozenset(lset)) if len(lset) == 2 else None
            if e_i is not None:
                _case_b_swap(g, black, red, lset[0], lset[1], e_i, e_map)
            else:
                f = next(
                    w for w in lset if red_dsu.find(w) != red_dsu.find(f_prime)
                )
                _case_a_swap(g, black, red, f_prime, f, e_map)
        assert _spanning_tree_ok(g, black)
        assert _pseudoforest_ok(g, red)
        side = _two_color_forest(g, black)
        after = _even_cycle_data(g, red, side)  # also re-asserts niceness
        assert len(after) < count_before


def appendix_decomposition(g: UGraph) -> Optional[TwoDecomposition]:
    """Exchange-based spanning-tree + odd-pseudoforest decomposition of a
    connected graph.  Feasibility coincides with the matroid pipeline:
    phase (a) fails exactly when some subgraph is denser than 2|V| - 1,
    and the niceness phase fails exactly when some bipartite subgraph
    reaches 2|V| - 1 edges."""
    count, _ = connected_components(g)
    if count != 1:
        raise Disconnected("input graph must be connected")
    m = len(g.edges)
    res = matroid_union_max([cycle_matroid_indep(g), bicircular_indep(g)], m)
    if res.rank < m:
        return None
    black = set(res.classes[0])
    red = set(res.classes[1])
    _promote_black(g, black, red)
    assert _spanning_tree_ok(g, black)
    if not _fix_bad_components(g, black, red):
        return None
    _fix_even_cycles(g, black, red)
    return two_decomposition(g, black, red)


# ---------------------------------------------------------------------------
# anticonnected orientations


def anticonnected_orientation(g: UGraph, root: int = 0) -> Orientation:
    """Breadth-first layering from the root; edges between layers point
    from the even layer to the odd one, same-layer edges low -> high.
    Parallel copies pick up the reverse direction."""
    count, _ = connected_components(g)
    if count != 1:
        raise Disconnected("input graph must be connected")
    if not 0 <= root < g.n:
        raise InvalidInput("root out of range")
    dist = [-1] * g.n
    dist[root] = 0
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for i in g.incident[v]:
            w = g.other_end(i, v)
            if dist[w] == -1:
                dist[w] = dist[v] + 1
                queue.append(w)
    used: set[tuple[int, int]] = set()
    arcs: list[tuple[int, int]] = []
    for u, v in g.edges:
        if dist[u] == dist[v]:
            cand = (u, v) if u < v else (v, u)
        elif (min(dist[u], dist[v])) % 2 == 0:
            cand = (u, v) if dist[u] < dist[v] else (v, u)
        else:
            cand = (u, v) if dist[u] > dist[v] else (v, u)
        if cand in used:
            cand = (cand[1], cand[0])
        assert cand not in used
        used.add(cand)
        arcs.append(cand)
    return Orientation(g.n, tuple(arcs))
