"""Random and planted test instances.

``generate_planted_instance`` hides a directed cycle of a chosen length
inside noise edges. With ``forbid_short`` the noise is filtered so that no
cycle shorter than the planted one ever appears - those are the instances on
which only the partition-based search can succeed, since every cycle is long.
"""

from __future__ import annotations

import numpy as np

from .graph import CycleWitness, DirectedGraph, bfs_shortest_path
from .oracle import all_cycle_lengths


class GenerationError(Exception):
    """The requested instance cannot be built (e.g. the extra-edge density is
    infeasible once short cycles are forbidden)."""


def random_digraph(n: int, density: float, rng: np.random.Generator) -> DirectedGraph:
    """Simple digraph where each ordered pair (u, v), u != v, is an edge
    independently with the given probability."""
    if not 0.0 <= density <= 1.0:
        raise ValueError("density must be in [0, 1]")
    edges = [
        (u, v)
        for u in range(n)
        for v in range(n)
        if u != v and rng.random() < density
    ]
    return DirectedGraph(n, edges)


def generate_planted_instance(
    n: int,
    t: int,
    density: float,
    rng: np.random.Generator,
    forbid_short: bool = False,
) -> tuple[DirectedGraph, CycleWitness]:
    """Plant a directed t-cycle on a random t-subset of n vertices, then add
    extra edges up to ``density`` (fraction of the remaining ordered pairs).

    With ``forbid_short`` an extra edge is kept only if it creates no cycle
    on fewer than t vertices; if the target count cannot be placed after
    scanning every candidate pair, GenerationError is raised. The final graph
    is checked against the cycle-length oracle before it is returned.
    """
    if not 2 <= t <= n:
        raise ValueError(f"need 2 <= t <= n, got t={t}, n={n}")
    if not 0.0 <= density <= 1.0:
        raise ValueError("density must be in [0, 1]")

    order = [int(x) for x in rng.permutation(n)]
    cycle = order[:t]
    witness = CycleWitness(tuple(cycle))
    cycle_edges = set(zip(cycle, cycle[1:] + [cycle[0]]))

    candidates = [
        (u, v)
        for u in range(n)
        for v in range(n)
        if u != v and (u, v) not in cycle_edges
    ]
    rng.shuffle(candidates)
    target = round(density * len(candidates))

    edges = set(cycle_edges)
    placed = 0
    for u, v in candidates:
        if placed == target:
            break
        if forbid_short:
            # A new cycle through (u, v) is a v->u path plus the edge, so the
            # shortest one has exactly as many vertices as the shortest path.
            current = DirectedGraph(n, edges)
            shortest = bfs_shortest_path(current, v, u)
            if shortest is not None and len(shortest) < t:
                continue
        edges.add((u, v))
        placed += 1

    if placed < target:
        raise GenerationError(
            f"could only place {placed} of {target} extra edges without "
            f"creating a cycle shorter than {t}"
        )

    graph = DirectedGraph(n, edges)
    if forbid_short:
        lengths = all_cycle_lengths(graph)
        if lengths and min(lengths) < t:
            raise GenerationError("internal: a short cycle slipped past the filter")
    return graph, witness
