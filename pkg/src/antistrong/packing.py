"""Packing arc-disjoint spanning subdigraphs: k antistrong ones, or a mix
of antistrong and connected-underlying ones, including the non-separating
special case (one antistrong subdigraph whose removal keeps the underlying
graph connected)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .analysis import is_antistrong
from .errors import InvalidInput, TooFewVertices
from .graphs import DSU, Digraph, UGraph
from .matroids import MatroidOracle, cycle_matroid_indep, matroid_union_max


@dataclass(frozen=True)
class PackResult:
    """Disjoint arc-index classes: antistrong spanning subdigraphs first,
    then classes whose underlying graphs are connected and spanning."""

    n: int
    antistrong_classes: tuple[frozenset[int], ...]
    connected_classes: tuple[frozenset[int], ...]
    leftover: frozenset[int]


@dataclass(frozen=True)
class NonseparatingResult:
    antistrong_arcs: frozenset[int]
    spanning_forest: frozenset[int]
    remainder_connected: bool


def antistrong_indep_oracle(d: Digraph) -> MatroidOracle:
    """Independence = forest in the bipartite representation (arc i maps
    to representation edge i)."""
    g = UGraph(2 * d.n, tuple((u, d.n + v) for u, v in d.arcs))
    oracle = cycle_matroid_indep(g)
    return MatroidOracle(
        len(d.arcs),
        oracle.indep,
        name="antistrong(" + str(d.n) + ")",
        exchange_candidates=oracle.exchange_candidates,
    )


def underlying_cycle_oracle(d: Digraph) -> MatroidOracle:
    """Cycle matroid of UG(D) on the arc ground set; a pair of opposite
    arcs counts as two parallel edges and is dependent together."""
    g = UGraph(
        d.n,
        tuple((min(u, v), max(u, v)) for u, v in d.arcs),
        multigraph=True,
    )
    oracle = cycle_matroid_indep(g)
    return MatroidOracle(
        len(d.arcs),
        oracle.indep,
        name="ugcycle(" + str(d.n) + ")",
        exchange_candidates=oracle.exchange_candidates,
    )


def _check_connected_class(d: Digraph, cls) -> None:
    dsu = DSU(d.n)
    merged = 0
    for i in cls:
        if dsu.union(*d.arcs[i]):
            merged += 1
    assert merged == d.n - 1, "class must span a connected underlying graph"


def mixed_pack(d: Digraph, k: int, ell: int) -> Optional[PackResult]:
    """k arc-disjoint antistrong spanning subdigraphs plus ell arc-disjoint
    spanning subdigraphs with connected underlying graphs, or None.

    Success iff the union of k antistrong matroids and ell cycle matroids
    of UG(D) reaches rank k(2n - 1) + ell(n - 1); the caps of the two
    matroid kinds then force every class to its exact size.
    """
    n = d.n
    if n < 3:
        raise TooFewVertices("antistrongness needs at least 3 vertices")
    if k < 0 or ell < 0:
        raise InvalidInput("class counts must be nonnegative")
    m = len(d.arcs)
    need = k * (2 * n - 1) + ell * (n - 1)
    if k + ell == 0:
        return PackResult(n, (), (), frozenset(range(m)))
    oracles = [antistrong_indep_oracle(d) for _ in range(k)]
    oracles += [underlying_cycle_oracle(d) for _ in range(ell)]
    res = matroid_union_max(oracles, m, want_deficiency=False)
    if res.rank < need:
        return None
    anti = tuple(frozenset(c) for c in res.classes[:k])
    conn = tuple(frozenset(c) for c in res.classes[k:])
    used: set[int] = set()
    for cls in anti:
        assert len(cls) == 2 * n - 1 and not (cls & used)
        used |= cls
        sub = Digraph(n, tuple(d.arcs[i] for i in sorted(cls)))
        assert is_antistrong(sub)
    for cls in conn:
        assert len(cls) == n - 1 and not (cls & used)
        used |= cls
        _check_connected_class(d, cls)
    return PackResult(n, anti, conn, frozenset(range(m)) - used)


def pack_antistrong(d: Digraph, k: int) -> Optional[PackResult]:
    """k arc-disjoint antistrong spanning subdigraphs of d, or None.

    Equivalent to packing k edge-disjoint spanning trees in the bipartite
    representation.
    """
    if k < 1:
        raise InvalidInput("k must be positive")
    return mixed_pack(d, k, 0)


def nonseparating_antistrong(d: Digraph) -> Optional[NonseparatingResult]:
    """Spanning antistrong subdigraph H with UG(D - H) connected, or None.

    One antistrong class plus one underlying spanning forest: feasible iff
    the two-matroid union base has 3n - 2 elements.
    """
    res = mixed_pack(d, 1, 1)
    if res is None:
        return None
    h = res.antistrong_classes[0]
    forest = res.connected_classes[0]
    # definitional re-check on the actual remainder, not just the forest
    dsu = DSU(d.n)
    for i in range(len(d.arcs)):
        if i not in h:
            dsu.union(*d.arcs[i])
    connected = len({dsu.find(v) for v in range(d.n)}) == 1
    assert connected, "forest class outside H must keep the remainder connected"
    return NonseparatingResult(h, forest, connected)
