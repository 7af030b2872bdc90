"""Gadget generators behind the NP-completeness reductions, plus the
exponential desk-scale solvers used to cross-check them.

Reduction chain: 3-SAT formula -> edge-avoidance path instance (variable
gadgets chained into a clause chain with triple-edge bundles) -> digraph
whose antidirected (s,t)-paths mirror the avoidance paths.  Traversing a
variable gadget on its z-side encodes setting that variable true.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .analysis import TrailWitness
from .errors import InvalidInput, SizeLimit
from .graphs import DSU, Digraph, UGraph


@dataclass(frozen=True)
class SatFormula:
    """3-CNF: clauses are triples of (variable, negated) literals over
    pairwise distinct variables."""

    variables: int
    clauses: tuple[tuple[tuple[int, bool], ...], ...]

    def __post_init__(self):
        if self.variables < 0:
            raise InvalidInput("negative variable count")
        norm = []
        for clause in self.clauses:
            lits = tuple((int(v), bool(neg)) for v, neg in clause)
            if len(lits) != 3:
                raise InvalidInput("every clause needs exactly 3 literals")
            if len({v for v, _ in lits}) != 3:
                raise InvalidInput("clause variables must be distinct")
            for v, _ in lits:
                if not 0 <= v < self.variables:
                    raise InvalidInput(f"variable {v} out of range")
            norm.append(lits)
        object.__setattr__(self, "clauses", tuple(norm))

    def evaluate(self, assignment) -> bool:
        return all(
            any(bool(assignment[v]) != neg for v, neg in clause)
            for clause in self.clauses
        )


def parse_dimacs(text: str) -> SatFormula:
    """DIMACS CNF: 'p cnf <vars> <clauses>' header, zero-terminated
    clause lines, 'c' comment lines."""
    variables = None
    expected = None
    clauses: list[tuple[tuple[int, bool], ...]] = []
    pending: list[tuple[int, bool]] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise InvalidInput(f"bad header: {line!r}")
            variables, expected = int(parts[2]), int(parts[3])
            continue
        if variables is None:
            raise InvalidInput("clause line before header")
        for tok in line.split():
            lit = int(tok)
            if lit == 0:
                clauses.append(tuple(pending))
                pending = []
            else:
                pending.append((abs(lit) - 1, lit < 0))
    if pending:
        raise InvalidInput("unterminated clause")
    if variables is None:
        raise InvalidInput("missing header")
    if expected is not None and len(clauses) != expected:
        raise InvalidInput(
            f"header promises {expected} clauses, found {len(clauses)}"
        )
    return SatFormula(variables, tuple(clauses))


@dataclass(frozen=True)
class AvoidPairsInstance:
    """Multigraph path instance: find an (x,y)-path using at most one
    edge from each listed pair.  Edge identity is the list index; unlike
    UGraph, any number of parallel copies is allowed (clause bundles have
    three)."""

    n: int
    edges: tuple[tuple[int, int], ...]
    x: int
    y: int
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        m = len(self.edges)
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidInput("edge endpoint out of range")
            if u == v:
                raise InvalidInput("loops not allowed")
        for t in (self.x, self.y):
            if not 0 <= t < self.n:
                raise InvalidInput("terminal out of range")
        if self.x == self.y:
            raise InvalidInput("terminals must differ")
        for e, f in self.pairs:
            if not (0 <= e < m and 0 <= f < m):
                raise InvalidInput("pair member out of range")
            if e == f:
                raise InvalidInput("pair members must be distinct edges")


def gen_variable_gadget(p: int, q: int) -> UGraph:
    """Two internally disjoint paths between u=0 and v=1: the first
    through y-vertices 2..p+1, the second through z-vertices p+2..p+q+1."""
    if p < 1 or q < 1:
        raise InvalidInput("both path lengths must be positive")
    ys = list(range(2, 2 + p))
    zs = list(range(2 + p, 2 + p + q))
    edges = []
    for path in (ys, zs):
        chain = [0] + path + [1]
        edges.extend(zip(chain, chain[1:]))
    return UGraph(2 + p + q, tuple(edges))


def gen_avoid_pairs(
    formula: SatFormula, pairing: tuple[int, int, int] = (0, 1, 2)
) -> AvoidPairsInstance:
    """Encode a formula as an edge-avoidance path instance.

    Gadget i carries one y-path edge per positive occurrence of variable
    i and one z-path edge per negated occurrence (the occurrence edges
    are never the first or last path edge).  The clause chain appends one
    triple-edge bundle per clause; pair j of clause i ties bundle edge
    pairing[j] to the occurrence edge of literal j, so using the bundle
    edge forces the path to dodge the occurrence edge, i.e. forces the
    literal to hold.

    pairing fixes the bijection between literals and bundle edges; all
    six choices are equivalent for satisfiability.
    """
    if formula.variables < 1:
        raise InvalidInput("need at least one variable")
    if sorted(pairing) != [0, 1, 2]:
        raise InvalidInput("pairing must permute (0, 1, 2)")
    nv = formula.variables
    pos = [0] * nv
    neg = [0] * nv
    for clause in formula.clauses:
        for v, is_neg in clause:
            (neg if is_neg else pos)[v] += 1

    edges: list[tuple[int, int]] = []
    base_y = [0] * nv
    base_z = [0] * nv
    next_vertex = 1  # vertex 0 is the entry terminal
    entry = 0
    for a in range(nv):
        p, q = pos[a] + 1, neg[a] + 1
        ys = list(range(next_vertex, next_vertex + p))
        next_vertex += p
        zs = list(range(next_vertex, next_vertex + q))
        next_vertex += q
        exit_v = next_vertex
        next_vertex += 1
        base_y[a] = len(edges)
        chain = [entry] + ys + [exit_v]
        edges.extend(zip(chain, chain[1:]))
        base_z[a] = len(edges)
        chain = [entry] + zs + [exit_v]
        edges.extend(zip(chain, chain[1:]))
        entry = exit_v

    clause_base = []
    chain_at = entry  # clause chain starts where the gadgets end
    for _ in formula.clauses:
        nxt = next_vertex
        next_vertex += 1
        clause_base.append(len(edges))
        edges.extend([(chain_at, nxt)] * 3)
        chain_at = nxt

    seen_pos = [0] * nv
    seen_neg = [0] * nv
    pairs: list[tuple[int, int]] = []
    for ci, clause in enumerate(formula.clauses):
        for j, (v, is_neg) in enumerate(clause):
            if is_neg:
                seen_neg[v] += 1
                occ = base_z[v] + seen_neg[v]
            else:
                seen_pos[v] += 1
                occ = base_y[v] + seen_pos[v]
            pairs.append((occ, clause_base[ci] + pairing[j]))
    flat = [e for pair in pairs for e in pair]
    assert len(set(flat)) == len(flat), "pairs must be pairwise disjoint"
    return AvoidPairsInstance(
        next_vertex, tuple(edges), 0, chain_at, tuple(pairs)
    )


def to_simple(inst: AvoidPairsInstance) -> AvoidPairsInstance:
    """Subdivide every edge once; pairs follow the half incident to the
    original first endpoint.  Removes all parallel edges while preserving
    which (x,y)-paths exist and which pairs they hit."""
    edges = []
    for i, (u, v) in enumerate(inst.edges):
        mid = inst.n + i
        edges.append((u, mid))
        edges.append((mid, v))
    pairs = tuple((2 * e, 2 * f) for e, f in inst.pairs)
    return AvoidPairsInstance(
        inst.n + len(inst.edges), tuple(edges), inst.x, inst.y, pairs
    )


def _alternating_path(length: int):
    """Arcs of an antidirected path w_0..w_length starting forward."""
    arcs = []
    for j in range(length):
        arcs.append((j, j + 1) if j % 2 == 0 else (j + 1, j))
    return arcs


def gen_antipath_instance(
    inst: AvoidPairsInstance,
) -> tuple[Digraph, int, int]:
    """Blow the instance up into an antidirected-path question.

    Every edge becomes a private alternating path of length 2k + 2 where
    k is the largest number of pairs any single edge sits in; for each
    pair the first free sink of the first edge's path is identified with
    the first free internal source of the second edge's path.  Original
    vertices keep their ids and end up as sources.
    """
    m = len(inst.edges)
    load = [0] * m
    for e, f in inst.pairs:
        load[e] += 1
        load[f] += 1
    k = max(load, default=0)
    length = 2 * k + 2
    inner = length - 1  # positions 1..length-1 are path-internal

    def vid(edge: int, pos: int) -> int:
        u, v = inst.edges[edge]
        if pos == 0:
            return u
        if pos == length:
            return v
        return inst.n + edge * inner + (pos - 1)

    total = inst.n + m * inner
    dsu = DSU(total)
    merged: set[int] = set()
    sink_next = [1] * m  # odd positions 1, 3, ..., 2k+1
    source_next = [2] * m  # even internal positions 2, 4, ..., 2k
    for e, f in inst.pairs:
        assert sink_next[e] <= length - 1, "ran out of sinks"
        sink = vid(e, sink_next[e])
        sink_next[e] += 2
        assert source_next[f] <= length - 2, "ran out of internal sources"
        src = vid(f, source_next[f])
        source_next[f] += 2
        assert sink not in merged and src not in merged, "triple identification"
        merged.add(sink)
        merged.add(src)
        dsu.union(sink, src)

    remap: dict[int, int] = {}
    for v in range(inst.n):
        root = dsu.find(v)
        assert root not in remap, "original vertices must stay distinct"
        remap[root] = v
    fresh = inst.n
    for v in range(inst.n, total):
        root = dsu.find(v)
        if root not in remap:
            remap[root] = fresh
            fresh += 1

    arcs: list[tuple[int, int]] = []
    for e in range(m):
        for a, b in _alternating_path(length):
            arcs.append((remap[dsu.find(vid(e, a))], remap[dsu.find(vid(e, b))]))
    assert len(set(arcs)) == len(arcs), "blowup must stay a simple digraph"
    d = Digraph(fresh, tuple(arcs))

    indeg = [0] * d.n
    outdeg = [0] * d.n
    for u, v in d.arcs:
        outdeg[u] += 1
        indeg[v] += 1
    for v in merged:
        w = remap[dsu.find(v)]
        assert indeg[w] == 2 and outdeg[w] == 2
    for v in range(inst.n):
        assert indeg[v] == 0, "original vertices must be sources"
    return d, inst.x, inst.y


# ---------------------------------------------------------------------------
# exponential desk-scale solvers


def exact_antidirected_path(
    d: Digraph, x: int, y: int, node_budget: int = 2_000_000
) -> Optional[TrailWitness]:
    """Backtracking search for a vertex-simple antidirected (x,y)-path.

    Tries a forward first arc before a backward one and lower arc indices
    first; raises SizeLimit when the visit budget runs out.
    """
    if not (0 <= x < d.n and 0 <= y < d.n):
        raise InvalidInput("terminal out of range")
    if x == y:
        raise InvalidInput("terminals must differ")
    budget = [node_budget]
    on_path = [False] * d.n
    on_path[x] = True
    path_arcs: list[int] = []
    path_dirs: list[bool] = []

    def step(v: int, want_forward: bool) -> bool:
        budget[0] -= 1
        if budget[0] < 0:
            raise SizeLimit("antidirected path search budget exceeded")
        pool = d.out_arcs[v] if want_forward else d.in_arcs[v]
        for ai in pool:
            t, h = d.arcs[ai]
            w = h if want_forward else t
            if on_path[w]:
                continue
            path_arcs.append(ai)
            path_dirs.append(want_forward)
            if w == y:
                return True
            on_path[w] = True
            if step(w, not want_forward):
                return True
            on_path[w] = False
            path_arcs.pop()
            path_dirs.pop()
        return False

    for first_forward in (True, False):
        if step(x, first_forward):
            return TrailWitness(x, y, tuple(path_arcs), tuple(path_dirs))
        assert not path_arcs and not path_dirs
    return None


def exact_avoid_pairs_path(
    inst: AvoidPairsInstance, node_budget: int = 2_000_000
) -> Optional[tuple[int, ...]]:
    """Backtracking search for a vertex-simple (x,y)-path that uses at
    most one edge from every pair; returns its edge-index sequence."""
    incident: list[list[int]] = [[] for _ in range(inst.n)]
    for i, (u, v) in enumerate(inst.edges):
        incident[u].append(i)
        incident[v].append(i)
    partners: list[list[int]] = [[] for _ in inst.edges]
    for e, f in inst.pairs:
        partners[e].append(f)
        partners[f].append(e)
    budget = [node_budget]
    on_path = [False] * inst.n
    on_path[inst.x] = True
    used = [False] * len(inst.edges)
    path: list[int] = []

    def step(v: int) -> bool:
        budget[0] -= 1
        if budget[0] < 0:
            raise SizeLimit("avoid-pairs search budget exceeded")
        for ei in incident[v]:
            a, b = inst.edges[ei]
            w = b if v == a else a
            if on_path[w]:
                continue
            if any(used[other] for other in partners[ei]):
                continue
            used[ei] = True
            path.append(ei)
            if w == inst.y:
                return True
            on_path[w] = True
            if step(w):
                return True
            on_path[w] = False
            used[ei] = False
            path.pop()
        return False

    if step(inst.x):
        return tuple(path)
    return None


# ---------------------------------------------------------------------------
# counterexample generators


def gen_kstrong_nonantistrong(k: int) -> Digraph:
    """Complete arcs X -> Y -> Z -> X over three independent k-sets: the
    digraph is k-strong yet its bipartite representation splits into
    three components, so it is far from antistrong."""
    if k < 1:
        raise InvalidInput("k must be positive")
    x = range(k)
    y = range(k, 2 * k)
    z = range(2 * k, 3 * k)
    arcs = []
    for src, dst in ((x, y), (y, z), (z, x)):
        arcs.extend((a, b) for a in src for b in dst)
    return Digraph(3 * k, tuple(arcs))


def gen_kkk_k4(k: int) -> UGraph:
    """Complete bipartite graph on k + k vertices sharing vertex 0 with a
    complete graph on 4 vertices; no orientation of it is antistrong even
    though it can be fairly dense."""
    if k < 1:
        raise InvalidInput("k must be positive")
    edges = [(a, b) for a in range(k) for b in range(k, 2 * k)]
    quad = [0, 2 * k, 2 * k + 1, 2 * k + 2]
    for i in range(4):
        for j in range(i + 1, 4):
            edges.append((quad[i], quad[j]))
    return UGraph(2 * k + 3, tuple(edges))
