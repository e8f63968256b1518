"""Graph model, parsing, BFS, and witness validation."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from longcycle import (
    CycleWitness,
    DirectedGraph,
    GraphParseError,
    PathWitness,
    bfs_shortest_path,
    induced_subgraph,
    min_path_vertices,
    parse_graph,
    random_digraph,
    serialize_graph,
    validate_cycle,
    validate_path,
)
from conftest import cycle_graph, path_graph


class TestParse:
    def test_triangle(self):
        g = parse_graph("3 3\n0 1\n1 2\n2 0")
        assert g.n == 3
        assert g.edge_set == {(0, 1), (1, 2), (2, 0)}
        assert g.dropped == 0

    def test_self_loop_dropped(self):
        g = parse_graph("2 1\n0 0")
        assert g.n == 2
        assert g.m == 0
        assert g.dropped == 1

    def test_duplicate_dropped(self):
        g = parse_graph("3 3\n0 1\n0 1\n1 2")
        assert g.m == 2
        assert g.dropped == 1

    def test_out_of_range_vertex(self):
        with pytest.raises(GraphParseError, match="line 2.*out of range"):
            parse_graph("1 1\n0 5")

    def test_negative_counts(self):
        with pytest.raises(GraphParseError, match="negative"):
            parse_graph("-1 0")

    def test_malformed_edge_line(self):
        with pytest.raises(GraphParseError, match="line 3"):
            parse_graph("3 2\n0 1\n1 2 3")

    def test_missing_edges(self):
        with pytest.raises(GraphParseError, match="expected 2 edge lines"):
            parse_graph("3 2\n0 1")

    def test_comments_and_blank_lines(self):
        g = parse_graph("# a triangle\n\n3 3\n0 1\n# middle\n1 2\n2 0\n")
        assert g.m == 3

    def test_round_trip_is_fixed_point(self):
        text = "4 5\n0 1\n0 1\n1 1\n1 2\n2 3"
        g = parse_graph(text)
        once = serialize_graph(g)
        again = serialize_graph(parse_graph(once))
        assert once == again
        assert parse_graph(once) == g


class TestInducedSubgraph:
    def test_triangle_pair(self, triangle):
        sub, ids = induced_subgraph(triangle, {0, 1})
        assert ids == (0, 1)
        assert sub.edge_set == {(0, 1)}

    def test_identity(self, c5):
        sub, ids = induced_subgraph(c5, range(5))
        assert sub == c5
        assert ids == (0, 1, 2, 3, 4)

    def test_c5_prefix(self, c5):
        sub, ids = induced_subgraph(c5, {0, 1, 2})
        assert sub.edge_set == {(0, 1), (1, 2)}

    def test_empty_keep(self, c5):
        sub, ids = induced_subgraph(c5, set())
        assert sub.n == 0 and sub.m == 0 and ids == ()

    def test_edge_filter_matches_definition(self, rng):
        g = random_digraph(9, 0.4, rng)
        keep = {0, 2, 3, 7, 8}
        sub, ids = induced_subgraph(g, keep)
        expected = {(u, v) for (u, v) in g.edges if u in keep and v in keep}
        mapped = {(ids[u], ids[v]) for (u, v) in sub.edges}
        assert mapped == expected


class TestBfs:
    def test_c5_path(self, c5):
        w = bfs_shortest_path(c5, 0, 2)
        assert w.vertices == (0, 1, 2)

    def test_no_path(self):
        g = DirectedGraph(2, [])
        assert bfs_shortest_path(g, 0, 1) is None

    def test_same_endpoint(self, c5):
        assert bfs_shortest_path(c5, 3, 3).vertices == (3,)

    def test_matches_enumeration_on_dense_graph(self, rng):
        g = random_digraph(8, 0.45, rng)
        for src in range(8):
            for dst in range(8):
                w = bfs_shortest_path(g, src, dst)
                expected = min_path_vertices(g, src, dst)
                if expected is None:
                    assert w is None
                else:
                    assert w is not None and len(w) == expected

    def test_all_small_graphs_match_enumeration(self):
        rng = np.random.default_rng(7)
        for _ in range(25):
            g = random_digraph(6, 0.3, rng)
            for src in range(6):
                for dst in range(6):
                    w = bfs_shortest_path(g, src, dst)
                    expected = min_path_vertices(g, src, dst)
                    assert (w is None) == (expected is None)
                    if w is not None:
                        assert len(w) == expected


class TestValidate:
    def test_cycle_itself(self, c5):
        assert validate_cycle(c5, CycleWitness((0, 1, 2, 3, 4)), 2)

    def test_missing_edge(self, c5):
        res = validate_cycle(c5, CycleWitness((0, 2, 4)), 2)
        assert not res and res.reason.startswith("missing-edge")

    def test_too_short_for_k(self, triangle):
        res = validate_cycle(triangle, CycleWitness((0, 1, 2)), 4)
        assert not res and res.reason == "shorter-than-k"

    def test_repeated_vertex(self, c5):
        assert not validate_cycle(c5, CycleWitness((0, 1, 2, 1)), 2)

    def test_single_vertex_rejected(self, c5):
        assert not validate_cycle(c5, CycleWitness((0,)), 1)

    def test_rotation_invariance(self, c5):
        base = (0, 1, 2, 3, 4)
        results = set()
        for shift in range(5):
            rotated = tuple(base[(i + shift) % 5] for i in range(5))
            results.add(bool(validate_cycle(c5, CycleWitness(rotated), 3)))
        assert results == {True}

    def test_path_witness(self, c5):
        assert validate_path(c5, PathWitness((0, 1, 2)))
        assert not validate_path(c5, PathWitness((0, 2)))
        assert not validate_path(c5, PathWitness(()))


@given(st.integers(2, 7), st.integers(0, 6))
@settings(max_examples=60, deadline=None)
def test_cycle_graph_rotations_validate(n, shift):
    g = cycle_graph(n)
    rotated = tuple((i + shift) % n for i in range(n))
    assert validate_cycle(g, CycleWitness(rotated), 2)


@given(
    st.integers(1, 8).flatmap(
        lambda n: st.tuples(
            st.just(n),
            st.sets(
                st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=20
            ),
        )
    )
)
@settings(max_examples=80, deadline=None)
def test_serialize_parse_round_trip(case):
    n, pairs = case
    g = DirectedGraph(n, pairs)
    assert parse_graph(serialize_graph(g)) == g
