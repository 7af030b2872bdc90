"""Instance file parsing, serialization and hashing."""

import random

import pytest

from antistrong import (
    Digraph,
    ParseError,
    UGraph,
    instance_hash,
    parse_instance,
    serialize_instance,
)
from conftest import rand_connected_multigraph, rand_digraph


class TestRoundTrip:
    def test_digraph(self):
        d = Digraph(3, ((0, 1), (1, 2), (2, 0)))
        back = parse_instance(serialize_instance(d))
        assert isinstance(back, Digraph)
        assert back.n == d.n and back.arcs == d.arcs

    def test_graph(self):
        g = UGraph(4, ((0, 1), (1, 2), (2, 3)))
        back = parse_instance(serialize_instance(g))
        assert isinstance(back, UGraph)
        assert not back.multigraph
        assert back.edges == g.edges

    def test_multigraph_keeps_parallel_copies_in_order(self):
        g = UGraph(3, ((0, 1), (0, 1), (1, 2)), multigraph=True)
        back = parse_instance(serialize_instance(g))
        assert back.multigraph
        assert back.edges == ((0, 1), (0, 1), (1, 2))

    def test_random_instances(self):
        rng = random.Random(20)
        for _ in range(80):
            obj = (
                rand_digraph(rng)
                if rng.random() < 0.5
                else rand_connected_multigraph(rng)
            )
            text = serialize_instance(obj)
            back = parse_instance(text)
            assert type(back) is type(obj)
            assert serialize_instance(back) == text
            assert instance_hash(back) == instance_hash(obj)


class TestParsing:
    def test_comments_and_blank_lines(self):
        text = (
            "# a triangle\n"
            "\n"
            "digraph 3 3   # header\n"
            "0 1\n"
            "   \n"
            "1 2 # second arc\n"
            "2 0\n"
        )
        d = parse_instance(text)
        assert d.arcs == ((0, 1), (1, 2), (2, 0))

    def test_zero_edges(self):
        d = parse_instance("digraph 4 0\n")
        assert d.n == 4 and d.arcs == ()

    def test_empty_file(self):
        with pytest.raises(ParseError) as exc:
            parse_instance("# nothing here\n")
        assert exc.value.line == 1

    def test_bad_header(self):
        with pytest.raises(ParseError) as exc:
            parse_instance("network 3 3\n0 1\n")
        assert exc.value.line == 1

    def test_header_counts_not_integers(self):
        with pytest.raises(ParseError):
            parse_instance("digraph three 3\n")

    def test_negative_counts(self):
        with pytest.raises(ParseError):
            parse_instance("digraph -1 0\n")

    def test_line_numbers_account_for_comments(self):
        text = "# intro\ndigraph 3 2\n0 1\n0 a\n"
        with pytest.raises(ParseError) as exc:
            parse_instance(text)
        assert exc.value.line == 4
        assert "4" in str(exc.value)

    def test_malformed_edge_line(self):
        with pytest.raises(ParseError) as exc:
            parse_instance("digraph 3 1\n0 1 2\n")
        assert exc.value.line == 2

    def test_endpoint_out_of_range(self):
        with pytest.raises(ParseError) as exc:
            parse_instance("digraph 3 1\n0 3\n")
        assert exc.value.line == 2

    def test_loop_rejected(self):
        with pytest.raises(ParseError):
            parse_instance("graph 3 1\n1 1\n")

    def test_duplicate_arc_in_digraph(self):
        with pytest.raises(ParseError) as exc:
            parse_instance("digraph 3 3\n0 1\n1 2\n0 1\n")
        assert exc.value.line == 4

    def test_antiparallel_arcs_allowed(self):
        d = parse_instance("digraph 2 2\n0 1\n1 0\n")
        assert d.arcs == ((0, 1), (1, 0))

    def test_duplicate_edge_in_simple_graph(self):
        with pytest.raises(ParseError):
            parse_instance("graph 3 2\n0 1\n1 0\n")

    def test_multigraph_allows_two_copies_not_three(self):
        g = parse_instance("multigraph 2 2\n0 1\n1 0\n")
        assert len(g.edges) == 2
        with pytest.raises(ParseError) as exc:
            parse_instance("multigraph 2 3\n0 1\n1 0\n0 1\n")
        assert exc.value.line == 4

    def test_too_many_edge_lines(self):
        with pytest.raises(ParseError) as exc:
            parse_instance("digraph 3 1\n0 1\n1 2\n")
        assert exc.value.line == 3

    def test_too_few_edge_lines_points_at_header(self):
        with pytest.raises(ParseError) as exc:
            parse_instance("digraph 3 2\n0 1\n")
        assert exc.value.line == 1


class TestSerialization:
    def test_digraph_text_shape(self):
        d = Digraph(3, ((0, 1), (2, 1)))
        assert serialize_instance(d) == "digraph 3 2\n0 1\n2 1\n"

    def test_rejects_foreign_objects(self):
        with pytest.raises(TypeError):
            serialize_instance(((0, 1),))


class TestHash:
    def test_stable_and_distinct(self):
        d = Digraph(3, ((0, 1), (1, 2)))
        assert instance_hash(d) == instance_hash(Digraph(3, ((0, 1), (1, 2))))
        # edge order is part of the identity: certificates index into it
        assert instance_hash(d) != instance_hash(Digraph(3, ((1, 2), (0, 1))))

    def test_kind_is_part_of_identity(self):
        g = UGraph(3, ((0, 1),))
        mg = UGraph(3, ((0, 1),), multigraph=True)
        assert instance_hash(g) != instance_hash(mg)
