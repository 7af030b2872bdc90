"""Minimum-arc augmentation toward antistrongness.

Both variants reduce to weighted tree/forest selection in the legal
completion of the bipartite representation: existing arcs cost 0, new
legal arcs (u != v) cost 1, and the forbidden diagonal pairs get a
sentinel cost that can never appear in a feasible solution.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .analysis import is_antistrong
from .errors import InvalidInput, OpenProblem, TooFewVertices
from .graphs import DSU, Digraph, UGraph, bipartite_rep
from .matroids import cycle_matroid_indep, matroid_union_max


@dataclass(frozen=True)
class AugmentationResult:
    """New arcs plus the augmented digraph they produce.

    classes is populated only by the k-disjoint variant: arc-index sets
    (into result.arcs) of the k disjoint antistrong spanning subdigraphs.
    """

    new_arcs: tuple[tuple[int, int], ...]
    result: Digraph
    components_before: int
    classes: Optional[tuple[frozenset[int], ...]] = None


def _legal_candidates(d: Digraph):
    """Non-arcs (u, v) with u != v, lexicographic order."""
    present = set(d.arcs)
    return [
        (u, v)
        for u in range(d.n)
        for v in range(d.n)
        if u != v and (u, v) not in present
    ]


def augment_antistrong(d: Digraph) -> AugmentationResult:
    """Smallest arc set whose addition makes d antistrong.

    Kruskal over the legal bipartite completion: cost-0 existing arcs
    first, then cost-1 candidates in lexicographic order.  The answer
    size always equals (number of components of the representation) - 1.
    """
    n = d.n
    if n < 3:
        raise TooFewVertices("antistrongness needs at least 3 vertices")
    comps = bipartite_rep(d).component_count()
    dsu = DSU(2 * n)
    for u, v in sorted(d.arcs):
        dsu.union(u, n + v)
    added: list[tuple[int, int]] = []
    for u, v in _legal_candidates(d):
        if dsu.union(u, n + v):
            added.append((u, v))
    assert len(added) == comps - 1, "tree completion disagrees with component count"
    result = d.with_arcs(added)
    assert is_antistrong(result)
    return AugmentationResult(tuple(added), result, comps)


def augment_k_disjoint(d: Digraph, k: int) -> Optional[AugmentationResult]:
    """Smallest arc set F so that d + F contains k arc-disjoint antistrong
    spanning subdigraphs, or None when no simple supergraph of d can.

    Min-cost base of the k-fold union of the cycle matroid over the full
    bipartite completion; diagonal u'u'' elements carry sentinel cost
    2nk + 1, so any base costing more than 2nk certifies infeasibility.
    """
    n = d.n
    if n < 3:
        raise TooFewVertices("antistrongness needs at least 3 vertices")
    if k < 1:
        raise InvalidInput("k must be positive")
    comps = bipartite_rep(d).component_count()
    present = set(d.arcs)
    sentinel = 2 * n * k + 1

    # Ground element u*n + v  <->  representation edge u'v''.
    pairs = [(u, v) for u in range(n) for v in range(n)]
    cost = [
        0 if uv in present else (sentinel if uv[0] == uv[1] else 1) for uv in pairs
    ]
    completion = UGraph(2 * n, tuple((u, n + v) for u, v in pairs))
    oracles = [cycle_matroid_indep(completion) for _ in range(k)]
    order = sorted(range(n * n), key=lambda i: (cost[i], i))
    res = matroid_union_max(oracles, n * n, order=order, want_deficiency=False)
    need = k * (2 * n - 1)
    if res.rank < need:
        return None
    total = sum(cost[i] for cls in res.classes for i in cls)
    if total > 2 * n * k:
        return None  # some sentinel was forced in
    added = sorted(pairs[i] for cls in res.classes for i in cls if cost[i] == 1)
    result = d.with_arcs(added)
    index_of = {arc: j for j, arc in enumerate(result.arcs)}
    classes = tuple(
        frozenset(index_of[pairs[i]] for i in cls) for cls in res.classes
    )
    seen: set[int] = set()
    for cls in classes:
        assert len(cls) == 2 * n - 1 and not (cls & seen)
        seen |= cls
        sub = Digraph(n, tuple(result.arcs[j] for j in sorted(cls)))
        assert is_antistrong(sub)
    return AugmentationResult(tuple(added), result, comps, classes)


def augment_k_arc_antistrong(d: Digraph, k: int):
    """Minimum augmentation to k-arc-antistrong connectivity.

    No polynomial algorithm is known; the question is stated as open.
    Kept as an explicit surface so callers get an honest error instead
    of a silent wrong answer.
    """
    raise OpenProblem(
        "minimum augmentation to k-arc-antistrong connectivity is an open problem"
    )
