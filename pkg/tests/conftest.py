"""Seeded random generators shared across the test suite."""

from __future__ import annotations

import itertools
import random

from antistrong import Digraph, UGraph

import oracles


def rand_digraph(rng: random.Random, n_max=6, m_max=None, n_min=1) -> Digraph:
    n = rng.randint(n_min, n_max)
    pool = [(u, v) for u in range(n) for v in range(n) if u != v]
    cap = len(pool) if m_max is None else min(m_max, len(pool))
    m = rng.randint(0, cap)
    return Digraph(n, tuple(rng.sample(pool, m)))


def rand_connected_multigraph(
    rng: random.Random, n_max=6, extra_max=6, n_min=2
) -> UGraph:
    """Random spanning tree plus extra edges; at most two parallels."""
    n = rng.randint(n_min, n_max)
    edges = []
    for v in range(1, n):
        edges.append((rng.randrange(v), v))
    count = {tuple(sorted(e)): 1 for e in edges}
    for _ in range(rng.randint(0, extra_max)):
        u, v = rng.sample(range(n), 2)
        key = (min(u, v), max(u, v))
        if count.get(key, 0) >= 2:
            continue
        count[key] = count.get(key, 0) + 1
        edges.append((u, v))
    rng.shuffle(edges)
    return UGraph(n, tuple(edges), multigraph=True)


def rand_tree_plus_odd_pseudoforest(rng: random.Random, n: int):
    """A spanning tree and a spanning odd pseudoforest on [n], merged into
    one multigraph.  Returns (graph, tree_edge_ids, pseudo_edge_ids).

    The pseudoforest is built per component: a tree plus one chord chosen
    to close an odd cycle (path parities equal), so each component carries
    exactly one odd cycle.
    """
    tree = [(rng.randrange(v), v) for v in range(1, n)]

    order = list(range(n))
    rng.shuffle(order)
    comp_count = max(1, n // rng.randint(3, 6))
    cuts = sorted(rng.sample(range(1, n), comp_count - 1)) if comp_count > 1 else []
    groups = []
    prev = 0
    for c in cuts + [n]:
        groups.append(order[prev:c])
        prev = c

    # regroup so every component has >= 3 vertices (room for an odd cycle)
    pseudo = []
    merged: list[list[int]] = []
    for group in groups:
        if merged and (len(group) < 3 or len(merged[-1]) < 3):
            merged[-1].extend(group)
        else:
            merged.append(list(group))
    if len(merged) > 1 and len(merged[-1]) < 3:
        merged[-2].extend(merged.pop())

    for group in merged:
        k = len(group)
        parity = [0] * k
        for idx in range(1, k):
            pidx = rng.randrange(idx)
            pseudo.append((group[pidx], group[idx]))
            parity[idx] = parity[pidx] ^ 1
        # an equal-parity chord closes an odd cycle; it can never collide
        # with the component's tree edges (those all join opposite parity)
        same = [
            (i, j)
            for i in range(k)
            for j in range(i + 1, k)
            if parity[i] == parity[j]
        ]
        i, j = rng.choice(same)
        pseudo.append((group[i], group[j]))

    # merge, tracking indices; duplicates across tree/pseudo are fine
    # (multigraph with <= 2 parallels: a tree edge can coincide with at
    # most one pseudoforest edge)
    count: dict[tuple[int, int], int] = {}
    edges = []
    tree_ids, pseudo_ids = [], []
    for e in tree:
        key = (min(e), max(e))
        count[key] = count.get(key, 0) + 1
        tree_ids.append(len(edges))
        edges.append(e)
    retry = False
    for e in pseudo:
        key = (min(e), max(e))
        count[key] = count.get(key, 0) + 1
        if count[key] > 2:
            retry = True
            break
        pseudo_ids.append(len(edges))
        edges.append(e)
    if retry:
        return rand_tree_plus_odd_pseudoforest(rng, n)

    g = UGraph(n, tuple(edges), multigraph=True)
    assert oracles.is_forest_bruteforce(n, [edges[i] for i in tree_ids])
    assert oracles.is_odd_pseudoforest_bruteforce(
        n, [edges[i] for i in pseudo_ids]
    )
    return g, frozenset(tree_ids), frozenset(pseudo_ids)


def rand_4ec_nonbipartite(rng: random.Random, n_max=8) -> UGraph:
    """Rejection-sample a 4-edge-connected nonbipartite graph; the
    properties are certified by the independent flow/2-coloring oracles."""
    while True:
        n = rng.randint(5, n_max)
        pool = list(itertools.combinations(range(n), 2))
        target = min(len(pool), 2 * n + rng.randint(2, n))
        edges = tuple(rng.sample(pool, target))
        g = UGraph(n, edges)
        if oracles.is_bipartite_bruteforce(g):
            continue
        if oracles.edge_connectivity_at_least(g, 4):
            return g


def rand_three_tree_nonbipartite(rng: random.Random, n_max=9) -> UGraph:
    """Union of three random spanning trees on [n], edge-disjoint by
    construction, resampled until the multigraph cap and nonbipartiteness
    hold."""
    while True:
        n = rng.randint(4, n_max)
        count: dict[tuple[int, int], int] = {}
        edges = []
        ok = True
        for _ in range(3):
            perm = list(range(n))
            rng.shuffle(perm)
            for idx in range(1, n):
                u, v = perm[rng.randrange(idx)], perm[idx]
                key = (min(u, v), max(u, v))
                count[key] = count.get(key, 0) + 1
                if count[key] > 2:
                    ok = False
                    break
                edges.append((u, v))
            if not ok:
                break
        if not ok:
            continue
        g = UGraph(n, tuple(edges), multigraph=True)
        if not oracles.is_bipartite_bruteforce(g):
            return g


def rand_k_arc_antistrong(rng: random.Random, k2: int, checker) -> Digraph:
    """Rejection-sample a digraph passing checker(d, k2); density rises
    with k2 so the hit rate stays practical."""
    while True:
        n = rng.randint(3, 6)
        pool = [(u, v) for u in range(n) for v in range(n) if u != v]
        lo = min(len(pool), k2 * n)
        m = rng.randint(lo, len(pool))
        d = Digraph(n, tuple(rng.sample(pool, m)))
        if checker(d, k2):
            return d
