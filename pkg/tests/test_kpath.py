"""Exact-length path queries: both backends plus witness extraction."""

import math

import numpy as np
import pytest

from longcycle import (
    CapacityError,
    ColorCodingBackend,
    KPathQuery,
    SubsetDPBackend,
    color_coding_decide,
    decide_kpath,
    default_repetitions,
    extract_path_witness,
    path_endpoints_by_length,
    random_digraph,
    subset_dp_decide,
    subset_dp_states,
    validate_path,
)
from longcycle.graph import DirectedGraph
from conftest import complete_bidirected, cycle_graph, path_graph


class TestSubsetDP:
    def test_whole_path_graph(self):
        g = path_graph(3)
        assert subset_dp_decide(KPathQuery(g, 0, 2, 3))

    def test_no_two_vertex_shortcut(self):
        g = path_graph(3)
        assert not subset_dp_decide(KPathQuery(g, 0, 2, 2))

    def test_single_vertex_query(self, triangle):
        assert decide_kpath(SubsetDPBackend(), KPathQuery(triangle, 0, 0, 1))
        assert not decide_kpath(SubsetDPBackend(), KPathQuery(triangle, 0, 1, 1))

    def test_c5_without_closing_edge(self, c5):
        assert subset_dp_decide(KPathQuery(c5, 0, 4, 5))

    def test_length_above_n_is_impossible(self, triangle):
        assert not decide_kpath(SubsetDPBackend(), KPathQuery(triangle, 0, 1, 4))

    def test_k4_state_count_matches_enumeration(self):
        g = complete_bidirected(4)
        states = subset_dp_states(KPathQuery(g, 0, 3, 4))
        satisfying = sum(1 for ends in states.values() if (ends >> 3) & 1)
        # enumerate simple 4-vertex paths 0 -> 3 and count distinct (set, end) states
        table = path_endpoints_by_length(g, 0)
        assert 3 in table[4]
        # every 4-vertex path from 0 uses all four vertices, so one state
        assert satisfying == 1

    def test_matches_enumeration_on_random_graphs(self):
        rng = np.random.default_rng(3)
        for _ in range(15):
            n = int(rng.integers(3, 9))
            g = random_digraph(n, float(rng.uniform(0.15, 0.4)), rng)
            for start in range(n):
                table = path_endpoints_by_length(g, start)
                for length in range(1, n + 1):
                    ends = table.get(length, set())
                    for end in range(n):
                        expected = end in ends
                        got = subset_dp_decide(KPathQuery(g, start, end, length))
                        assert got == expected

    def test_cap_error_mentions_color_backend(self):
        g = cycle_graph(30)
        with pytest.raises(CapacityError, match="color"):
            subset_dp_decide(KPathQuery(g, 0, 1, 2), cap=25)

    def test_cached_backend_agrees_with_direct(self):
        rng = np.random.default_rng(9)
        backend = SubsetDPBackend()
        for _ in range(8):
            n = int(rng.integers(3, 9))
            g = random_digraph(n, 0.3, rng)
            for start in range(n):
                for end in range(n):
                    for length in range(1, n + 1):
                        q = KPathQuery(g, start, end, length)
                        assert backend.decide(q) == subset_dp_decide(q)


class TestColorCoding:
    def test_single_trial_rate_on_three_path(self):
        # success iff the coloring is injective on the path: 3!/3^3 = 2/9
        g = path_graph(3)
        q = KPathQuery(g, 0, 2, 3)
        rng = np.random.default_rng(42)
        trials = 20_000
        hits = sum(1 for _ in range(trials) if color_coding_decide(q, 1, rng))
        p = 2 / 9
        sigma = math.sqrt(p * (1 - p) / trials)
        assert abs(hits / trials - p) <= 3 * sigma

    def test_never_accepts_no_instance(self):
        rng = np.random.default_rng(5)
        g = path_graph(6)  # a DAG: no path 5 -> 0 at all
        q = KPathQuery(g, 5, 0, 3)
        assert not color_coding_decide(q, 200, rng)

    def test_planted_path_detected_with_default_repetitions(self):
        rng = np.random.default_rng(8)
        reps = default_repetitions(4)  # ceil(3 * e^4) = 164
        assert reps == 164
        detected = 0
        instances = 60
        for _ in range(instances):
            noise = random_digraph(12, 0.05, rng)
            order = [int(x) for x in rng.permutation(12)[:4]]
            edges = set(noise.edges) | set(zip(order, order[1:]))
            g = DirectedGraph(12, edges)
            backend = ColorCodingBackend(seed=int(rng.integers(2**32)))
            if decide_kpath(backend, KPathQuery(g, order[0], order[3], 4)):
                detected += 1
        assert detected / instances >= 0.94

    def test_reproducible_for_fixed_seed(self, c5):
        q = KPathQuery(c5, 0, 4, 5)
        runs = []
        for _ in range(2):
            backend = ColorCodingBackend(seed=123, repetitions=5)
            runs.append([backend.decide(q) for _ in range(10)])
        assert runs[0] == runs[1]


class TestExtraction:
    def test_unique_three_path_with_chord(self):
        g = DirectedGraph(3, [(0, 1), (1, 2), (0, 2)])
        w = extract_path_witness(SubsetDPBackend(), KPathQuery(g, 0, 2, 3))
        assert w.vertices == (0, 1, 2)

    def test_no_instance_returns_none(self):
        g = path_graph(4)
        assert extract_path_witness(SubsetDPBackend(), KPathQuery(g, 3, 0, 2)) is None

    def test_single_vertex_extraction(self, triangle):
        w = extract_path_witness(SubsetDPBackend(), KPathQuery(triangle, 1, 1, 1))
        assert w.vertices == (1,)

    def test_random_yes_instances_yield_valid_witnesses(self):
        rng = np.random.default_rng(17)
        backend = SubsetDPBackend()
        checked = 0
        while checked < 40:
            n = int(rng.integers(4, 11))
            g = random_digraph(n, float(rng.uniform(0.2, 0.5)), rng)
            start = int(rng.integers(n))
            table = path_endpoints_by_length(g, start)
            options = [
                (length, end)
                for length, ends in table.items()
                if length >= 2
                for end in ends
            ]
            if not options:
                continue
            length, end = options[int(rng.integers(len(options)))]
            q = KPathQuery(g, start, end, length)
            w = extract_path_witness(backend, q)
            assert w is not None
            assert validate_path(g, w)
            assert len(w) == length
            assert w.vertices[0] == start and w.vertices[-1] == end
            checked += 1

    def test_extraction_with_randomized_backend(self):
        rng = np.random.default_rng(29)
        hits = 0
        for _ in range(10):
            g = random_digraph(8, 0.35, rng)
            start = int(rng.integers(8))
            table = path_endpoints_by_length(g, start)
            options = [(l, e) for l, ends in table.items() if l >= 3 for e in ends]
            if not options:
                continue
            length, end = options[0]
            backend = ColorCodingBackend(seed=int(rng.integers(2**32)))
            w = extract_path_witness(backend, KPathQuery(g, start, end, length))
            if w is not None:
                assert validate_path(g, w) and len(w) == length
                hits += 1
        assert hits >= 5  # one-sided misses are possible but should be rare
