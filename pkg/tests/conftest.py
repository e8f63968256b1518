"""Shared graph builders for the test suite."""

from __future__ import annotations

import numpy as np
import pytest

from longcycle import DirectedGraph


def cycle_graph(n: int) -> DirectedGraph:
    """Directed cycle 0 -> 1 -> ... -> n-1 -> 0."""
    return DirectedGraph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> DirectedGraph:
    """Directed path 0 -> 1 -> ... -> n-1."""
    return DirectedGraph(n, [(i, i + 1) for i in range(n - 1)])


def complete_bidirected(n: int) -> DirectedGraph:
    return DirectedGraph(n, [(u, v) for u in range(n) for v in range(n) if u != v])


@pytest.fixture
def triangle() -> DirectedGraph:
    return cycle_graph(3)


@pytest.fixture
def c5() -> DirectedGraph:
    return cycle_graph(5)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20250809)
