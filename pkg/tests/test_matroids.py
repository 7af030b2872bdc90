"""Independence oracles, the union engine, and min-cost bases."""

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from antistrong import (
    Digraph,
    NoBase,
    SizeLimit,
    UGraph,
    antistrong_matroid_indep,
    bicircular_indep,
    cycle_matroid_indep,
    even_bicircular_indep,
    find_cat,
    graph_count_f,
    matroid_union_max,
    min_cost_base,
    rank_bruteforce,
    union_oracle,
)

import oracles
from conftest import rand_connected_multigraph, rand_digraph

K3 = UGraph(3, ((0, 1), (1, 2), (0, 2)))
K4 = UGraph(4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)))
C4 = UGraph(4, ((0, 1), (1, 2), (2, 3), (3, 0)))
THETA = UGraph(4, ((0, 1), (1, 2), (2, 3), (3, 0), (0, 2)))


class TestCycleMatroid:
    def test_triangle_dependent(self):
        assert not cycle_matroid_indep(K3, {0, 1, 2})

    def test_two_edges_independent(self):
        for pair in itertools.combinations(range(3), 2):
            assert cycle_matroid_indep(K3, set(pair))

    def test_spanning_tree_maximal(self):
        oracle = cycle_matroid_indep(K4)
        assert oracle.indep({0, 1, 2})
        for extra in (3, 4, 5):
            assert not oracle.indep({0, 1, 2, extra})


class TestEvenBicircular:
    def test_triangle_independent(self):
        assert even_bicircular_indep(K3, {0, 1, 2})

    def test_c4_dependent(self):
        assert not even_bicircular_indep(C4, {0, 1, 2, 3})

    def test_theta_dependent(self):
        assert not even_bicircular_indep(THETA, set(range(5)))

    def test_two_odd_cycles_in_one_component_dependent(self):
        # bowtie sharing vertex 2: two triangles, one component
        g = UGraph(5, ((0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)))
        assert not even_bicircular_indep(g, set(range(6)))
        assert even_bicircular_indep(g, {0, 1, 2})
        assert even_bicircular_indep(g, {0, 1, 2, 3, 4})

    def test_count_condition(self):
        # |S'| <= nu(S') - beta(S') for all nonempty subsets, brute
        rng = random.Random(21)
        for _ in range(60):
            g = rand_connected_multigraph(rng, n_max=5, extra_max=3)
            m = len(g.edges)
            if m > 7:
                continue
            for size in range(1, m + 1):
                for sub in itertools.combinations(range(m), size):
                    got = even_bicircular_indep(g, set(sub))
                    assert got == oracles.is_odd_pseudoforest_bruteforce(
                        g.n, [g.edges[i] for i in sub]
                    )


class TestBicircular:
    def test_one_cycle_per_component(self):
        assert bicircular_indep(C4, {0, 1, 2, 3})
        assert not bicircular_indep(THETA, set(range(5)))


class TestAntistrongMatroid:
    def test_cat_set_dependent(self):
        d = Digraph(4, ((0, 1), (2, 1), (2, 3), (0, 3)))
        assert not antistrong_matroid_indep(d, {0, 1, 2, 3})

    def test_single_arc(self):
        d = Digraph(3, ((0, 1),))
        assert antistrong_matroid_indep(d, {0})

    def test_spanning_rank(self):
        # 2n-1 arcs lifting to a spanning tree of the representation
        d = Digraph(3, ((0, 1), (1, 2), (2, 0), (0, 2), (1, 0)))
        oracle = antistrong_matroid_indep(d)
        assert oracle.indep(set(range(5)))
        assert oracle.rank_greedy(range(5)) == 2 * 3 - 1

    def test_iff_no_cat_exhaustive(self):
        rng = random.Random(22)
        for _ in range(120):
            d = rand_digraph(rng, n_max=4, m_max=7)
            m = len(d.arcs)
            for size in range(m + 1):
                for sub in itertools.combinations(range(m), size):
                    assert antistrong_matroid_indep(d, set(sub)) == (
                        find_cat(d, set(sub)) is None
                    )


def _spot_check_axioms(oracle, rng, rounds=40):
    m = oracle.ground_size
    assert oracle.indep(set())
    for _ in range(rounds):
        size = rng.randint(0, min(m, 10))
        s = set(rng.sample(range(m), size))
        if oracle.indep(s):
            if s:
                drop = rng.choice(sorted(s))
                assert oracle.indep(s - {drop})
        else:
            grow = set(s)
            extra = [e for e in range(m) if e not in s]
            if extra:
                grow.add(rng.choice(extra))
                assert not oracle.indep(grow)
    # exchange: |A| < |B| independent => some b in B-A extends A
    for _ in range(rounds):
        sa = set(rng.sample(range(m), rng.randint(0, min(m, 6))))
        sb = set(rng.sample(range(m), rng.randint(0, min(m, 6))))
        if not (oracle.indep(sa) and oracle.indep(sb)):
            continue
        if len(sa) >= len(sb):
            continue
        assert any(oracle.indep(sa | {b}) for b in sb - sa)


class TestAxioms:
    def test_cycle(self):
        rng = random.Random(23)
        g = rand_connected_multigraph(rng, n_max=6, extra_max=6)
        _spot_check_axioms(cycle_matroid_indep(g), rng)

    def test_even_bicircular(self):
        rng = random.Random(24)
        g = rand_connected_multigraph(rng, n_max=6, extra_max=6)
        _spot_check_axioms(even_bicircular_indep(g), rng)

    def test_bicircular(self):
        rng = random.Random(25)
        g = rand_connected_multigraph(rng, n_max=6, extra_max=6)
        _spot_check_axioms(bicircular_indep(g), rng)

    def test_antistrong(self):
        rng = random.Random(26)
        d = rand_digraph(rng, n_max=5, m_max=12, n_min=4)
        _spot_check_axioms(antistrong_matroid_indep(d), rng)


class TestUnion:
    def test_two_cycle_matroids_on_k4(self):
        res = matroid_union_max(
            [cycle_matroid_indep(K4), cycle_matroid_indep(K4)], 6
        )
        assert res.rank == 6  # two edge-disjoint spanning trees
        assert res.deficiency is None
        for cls in res.classes:
            assert cycle_matroid_indep(K4, set(cls))

    def test_cycle_plus_even_bicircular_on_k4(self):
        res = matroid_union_max(
            [cycle_matroid_indep(K4), even_bicircular_indep(K4)], 6
        )
        assert res.rank == 6  # everything covered, below the 2n-1=7 bound

    def test_single_oracle_greedy(self):
        res = matroid_union_max([cycle_matroid_indep(K3)], 3)
        assert res.rank == 2

    def test_deficiency_min_max(self):
        rng = random.Random(27)
        seen = 0
        for _ in range(150):
            g = rand_connected_multigraph(rng, n_max=5, extra_max=6)
            m = len(g.edges)
            ors = [cycle_matroid_indep(g), even_bicircular_indep(g)]
            res = matroid_union_max(ors, m)
            if res.deficiency is None:
                assert res.rank == m
                continue
            seen += 1
            f = set(res.deficiency)
            outside = m - len(f)
            total = outside + sum(o.rank_greedy(f) for o in ors)
            assert total == res.rank
        assert seen

    def test_rank_vs_subpartition_bruteforce(self):
        rng = random.Random(28)
        checked = 0
        while checked < 60:
            g = rand_connected_multigraph(rng, n_max=5, extra_max=4)
            m = len(g.edges)
            if m > 8:
                continue
            res = matroid_union_max(
                [cycle_matroid_indep(g), even_bicircular_indep(g)], m
            )
            assert res.rank == rank_bruteforce(graph_count_f(g), range(m))
            checked += 1

    def test_union_oracle_wrapper(self):
        ors = [cycle_matroid_indep(K4), even_bicircular_indep(K4)]
        u = union_oracle(ors, 6)
        assert u.indep(set(range(6)))
        assert u.rank_greedy(range(6)) == 6


class TestRankBruteforce:
    def test_k4_count_function(self):
        assert rank_bruteforce(graph_count_f(K4), range(6)) == 6

    def test_tree_edges(self):
        tree = UGraph(4, ((0, 1), (1, 2), (2, 3)))

        def f(subset):
            verts = {v for i in subset for v in tree.edges[i]}
            return max(0, len(verts) - 1)

        assert rank_bruteforce(f, range(3)) == 3

    def test_c4_count_function(self):
        assert rank_bruteforce(graph_count_f(C4), range(4)) == 4

    def test_size_limit(self):
        with pytest.raises(SizeLimit):
            rank_bruteforce(lambda s: len(s), range(13))


class TestMinCostBase:
    def test_zero_costs_spanning_forest(self):
        base, cost = min_cost_base(cycle_matroid_indep(K4), [0] * 6)
        assert cost == 0
        assert len(base) == 3
        assert cycle_matroid_indep(K4, set(base))

    def test_prefers_cheap_elements(self):
        costs = [5, 0, 0, 0, 5, 5]
        base, cost = min_cost_base(cycle_matroid_indep(K4), costs)
        assert cost == sum(sorted(costs)[:3]) == 0

    def test_exhaustive_optimality(self):
        rng = random.Random(29)
        for _ in range(40):
            g = rand_connected_multigraph(rng, n_max=5, extra_max=4)
            m = len(g.edges)
            if m > 10:
                continue
            costs = [rng.randint(0, 8) for _ in range(m)]
            oracle = cycle_matroid_indep(g)
            base, cost = min_cost_base(oracle, costs)
            rank = oracle.rank_greedy(range(m))
            best = min(
                sum(costs[i] for i in sub)
                for sub in itertools.combinations(range(m), rank)
                if oracle.indep(set(sub))
            )
            assert cost == best

    def test_no_base(self):
        # a single edge cannot span the requested rank of 2
        g = UGraph(3, ((0, 1),))
        oracle = cycle_matroid_indep(g)
        with pytest.raises(NoBase):
            min_cost_base(oracle, [0], require_size=2)
