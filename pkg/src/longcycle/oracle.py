"""Exhaustive brute-force oracles for small graphs.

These are deliberately naive (DFS over all simple paths, or raw permutation
checking) so they stay independent of the solver's own machinery. Everything
here is capped: the DFS explodes factorially on dense inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Optional

from .errors import CapacityError
from .graph import CycleWitness, DirectedGraph

DEFAULT_ORACLE_CAP = 14


@dataclass(frozen=True)
class OracleResult:
    """Longest simple-cycle length (0 if acyclic) and one witness of it."""

    length: int
    witness: Optional[CycleWitness]


def brute_force_longest_cycle(g: DirectedGraph, cap: int = DEFAULT_ORACLE_CAP) -> OracleResult:
    """Exact longest simple cycle by DFS over all simple paths.

    Each cycle is enumerated once, rooted at its minimum vertex. Raises
    CapacityError when ``g.n`` exceeds ``cap``.
    """
    if g.n > cap:
        raise CapacityError(f"oracle supports n <= {cap}, got n={g.n}")
    edge_set = g.edge_set
    adj = g.adj
    best_len = 0
    best: Optional[tuple[int, ...]] = None

    for s in range(g.n):
        path = [s]

        def dfs(mask: int) -> None:
            nonlocal best_len, best
            last = path[-1]
            if len(path) > best_len and (last, s) in edge_set:
                best_len = len(path)
                best = tuple(path)
            for x in adj[last]:
                if x > s and not (mask >> x) & 1:
                    path.append(x)
                    dfs(mask | (1 << x))
                    path.pop()

        dfs(1 << s)

    return OracleResult(best_len, CycleWitness(best) if best is not None else None)


def all_cycle_lengths(g: DirectedGraph, cap: int = DEFAULT_ORACLE_CAP) -> set[int]:
    """The set of lengths of all simple cycles of ``g`` (empty if acyclic)."""
    if g.n > cap:
        raise CapacityError(f"oracle supports n <= {cap}, got n={g.n}")
    edge_set = g.edge_set
    adj = g.adj
    lengths: set[int] = set()

    for s in range(g.n):
        path = [s]

        def dfs(mask: int) -> None:
            last = path[-1]
            if (last, s) in edge_set:
                lengths.add(len(path))
            for x in adj[last]:
                if x > s and not (mask >> x) & 1:
                    path.append(x)
                    dfs(mask | (1 << x))
                    path.pop()

        dfs(1 << s)

    return lengths


def longest_cycle_by_permutations(g: DirectedGraph, cap: int = 7) -> OracleResult:
    """Second, independent longest-cycle oracle: try every vertex subset in
    every cyclic order. Only viable for tiny graphs; used to cross-check the
    DFS oracle."""
    if g.n > cap:
        raise CapacityError(f"permutation oracle supports n <= {cap}, got n={g.n}")
    edge_set = g.edge_set
    for t in range(g.n, 1, -1):
        for combo in combinations(range(g.n), t):
            first = combo[0]
            for rest in permutations(combo[1:]):
                cycle = (first,) + rest
                if all(
                    (a, b) in edge_set for a, b in zip(cycle, cycle[1:] + (first,))
                ):
                    return OracleResult(t, CycleWitness(cycle))
    return OracleResult(0, None)


def path_endpoints_by_length(g: DirectedGraph, src: int, cap: int = DEFAULT_ORACLE_CAP) -> dict[int, set[int]]:
    """For every simple path starting at ``src``, record (vertex count -> set
    of reachable endpoints). Exhaustive DFS; the reference answer for exact
    path-length queries."""
    if g.n > cap:
        raise CapacityError(f"oracle supports n <= {cap}, got n={g.n}")
    adj = g.adj
    table: dict[int, set[int]] = {1: {src}}
    path = [src]

    def dfs(mask: int) -> None:
        last = path[-1]
        for x in adj[last]:
            if not (mask >> x) & 1:
                path.append(x)
                table.setdefault(len(path), set()).add(x)
                dfs(mask | (1 << x))
                path.pop()

    dfs(1 << src)
    return table


def exact_path_exists(g: DirectedGraph, src: int, dst: int, length: int) -> bool:
    """Exhaustively decide a simple path on exactly ``length`` vertices."""
    return dst in path_endpoints_by_length(g, src).get(length, set())


def min_path_vertices(g: DirectedGraph, src: int, dst: int) -> Optional[int]:
    """Minimum vertex count over all simple src->dst paths, by enumeration."""
    table = path_endpoints_by_length(g, src)
    hits = [length for length, ends in table.items() if dst in ends]
    return min(hits) if hits else None
