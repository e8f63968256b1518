"""Polynomial-time search for a long cycle compatible with an (L, R) split.

For every ordered pair (v, u) of left-side vertices, find a shortest path P
from v to u inside the left-induced subgraph; if P has exactly k vertices,
look for any return path from u back to v that avoids P's interior. Two such
internally disjoint paths concatenate into a simple cycle on at least k
vertices, so acceptance is sound unconditionally. The search is also
guaranteed to accept when the graph has no cycle on k..2k vertices but does
have a longer cycle whose first k vertices landed in L and next k in R -
that is the case the enclosing solver arranges via its partitions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graph import (
    CycleWitness,
    DirectedGraph,
    PathWitness,
    bfs_shortest_path,
    bfs_tree,
    induced_subgraph,
)
from .partition import PartitionLR


class ContractViolation(Exception):
    """join_paths was handed paths that are not internally disjoint or do not
    share exactly their endpoints; indicates a bug upstream."""


@dataclass(frozen=True)
class SplitSearchOutcome:
    accepted: bool
    witness: Optional[CycleWitness] = None
    pair: Optional[tuple[int, int]] = None
    return_path_len: Optional[int] = None


def join_paths(p1: PathWitness, p2: PathWitness) -> CycleWitness:
    """Concatenate a v->u path and a u->v path into a cycle witness.

    The paths must share exactly their endpoints {v, u} and be internally
    disjoint; the resulting cycle has len(p1) + len(p2) - 2 distinct vertices.
    """
    if len(p1) < 2 or len(p2) < 2:
        raise ContractViolation("paths must have at least two vertices")
    v, u = p1.vertices[0], p1.vertices[-1]
    if p2.vertices[0] != u or p2.vertices[-1] != v:
        raise ContractViolation(
            f"endpoint mismatch: p1 is {v}->{u}, p2 is "
            f"{p2.vertices[0]}->{p2.vertices[-1]}"
        )
    shared = set(p1.vertices) & set(p2.vertices)
    if shared != {v, u}:
        raise ContractViolation(f"paths share internal vertices {sorted(shared - {v, u})}")
    return CycleWitness(p1.vertices + p2.vertices[1:-1])


def split_cycle_search(g: DirectedGraph, k: int, p: PartitionLR) -> SplitSearchOutcome:
    """Run the two-BFS pair search for parameter ``k`` under partition ``p``.

    Pairs iterate in lexicographic (v, u) order, so the reported witness is
    deterministic. An accepted witness always has exactly
    k + return_path_len - 2 >= k vertices.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    if p.n != g.n:
        raise ValueError(f"partition is over {p.n} vertices, graph has {g.n}")

    left = sorted(p.left)
    sub_l, left_ids = induced_subgraph(g, p.left)
    pos_l = {old: new for new, old in enumerate(left_ids)}
    all_vertices = frozenset(range(g.n))

    for v in left:
        dist, parent = bfs_tree(sub_l, pos_l[v])
        for u in left:
            if u == v or dist[pos_l[u]] != k - 1:
                continue
            # reconstruct the k-vertex path v -> u inside G[L]
            back = [pos_l[u]]
            while back[-1] != pos_l[v]:
                back.append(parent[back[-1]])
            first = PathWitness(tuple(left_ids[x] for x in reversed(back)))

            keep = all_vertices - (set(first.vertices) - {v, u})
            sub_r, rest_ids = induced_subgraph(g, keep)
            pos_r = {old: new for new, old in enumerate(rest_ids)}
            ret = bfs_shortest_path(sub_r, pos_r[u], pos_r[v])
            if ret is None:
                continue
            second = PathWitness(tuple(rest_ids[x] for x in ret.vertices))
            witness = join_paths(first, second)
            return SplitSearchOutcome(
                accepted=True, witness=witness, pair=(v, u), return_path_len=len(second)
            )
    return SplitSearchOutcome(accepted=False)
