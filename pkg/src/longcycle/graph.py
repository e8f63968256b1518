"""Directed-graph data model: parsing, BFS, induced subgraphs, witness checks.

Vertices are dense 0-based integers. Graphs are simple (no self-loops, no
duplicate edges) and treated as immutable after construction; every algorithm
in this package builds new graphs instead of mutating existing ones.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional


class GraphParseError(ValueError):
    """Raised when an edge-list document cannot be parsed."""


class DirectedGraph:
    """A simple digraph on vertices ``0..n-1``.

    Self-loops and duplicate edges are dropped during construction; the number
    of dropped pairs is kept in ``dropped`` so callers can warn about
    normalization. Adjacency lists are sorted ascending, which makes every BFS
    in this package deterministic.
    """

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        self.n = n
        dropped = 0
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v or (u, v) in seen:
                dropped += 1
                continue
            seen.add((u, v))
        self.edge_set = frozenset(seen)
        self.edges = tuple(sorted(seen))
        self.m = len(self.edges)
        self.dropped = dropped
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in self.edges:
            adj[u].append(v)
        self.adj = tuple(tuple(a) for a in adj)
        self._hash = hash((self.n, self.edge_set))

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edge_set

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DirectedGraph):
            return NotImplemented
        return self.n == other.n and self.edge_set == other.edge_set

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"DirectedGraph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class PathWitness:
    """An ordered sequence of distinct vertices; consecutive pairs are edges."""

    vertices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class CycleWitness:
    """Distinct vertices ``v_1..v_t`` with edges between consecutive pairs and
    a closing edge from ``v_t`` back to ``v_1``."""

    vertices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class ValidationResult:
    ok: bool
    reason: str = "ok"

    def __bool__(self) -> bool:
        return self.ok


def parse_graph(text: str) -> DirectedGraph:
    """Parse an edge-list document: header ``n m`` then ``m`` lines ``u v``.

    Blank lines and lines starting with ``#`` are ignored. Self-loops and
    duplicate edges are dropped (counted in the returned graph's ``dropped``).
    Raises GraphParseError with the offending line number on malformed input.
    """
    n = m = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2:
                raise GraphParseError(f"line {lineno}: expected header 'n m'")
            try:
                n, m = int(parts[0]), int(parts[1])
            except ValueError:
                raise GraphParseError(f"line {lineno}: header values must be integers") from None
            if n < 0 or m < 0:
                raise GraphParseError(f"line {lineno}: negative counts in header")
            continue
        if len(edges) == m:
            raise GraphParseError(f"line {lineno}: more edge lines than the declared {m}")
        if len(parts) != 2:
            raise GraphParseError(f"line {lineno}: expected 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"line {lineno}: vertex ids must be integers") from None
        if not 0 <= u < n:
            raise GraphParseError(f"line {lineno}: vertex id {u} out of range [0, {n})")
        if not 0 <= v < n:
            raise GraphParseError(f"line {lineno}: vertex id {v} out of range [0, {n})")
        edges.append((u, v))
    if n is None:
        raise GraphParseError("empty document: missing 'n m' header")
    if len(edges) != m:
        raise GraphParseError(f"expected {m} edge lines, found {len(edges)}")
    return DirectedGraph(n, edges)


def serialize_graph(g: DirectedGraph) -> str:
    """Inverse of parse_graph; parse-serialize-parse is a fixed point."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def induced_subgraph(
    g: DirectedGraph, keep: Iterable[int]
) -> tuple[DirectedGraph, tuple[int, ...]]:
    """Subgraph induced by ``keep``, plus the new-id -> original-id mapping.

    The returned graph contains exactly the edges of ``g`` with both endpoints
    in ``keep``. New ids follow the sorted order of the kept originals.
    """
    kept = sorted(set(keep))
    if kept and not (0 <= kept[0] and kept[-1] < g.n):
        raise ValueError("keep contains vertices out of range")
    pos = {old: new for new, old in enumerate(kept)}
    edges = [(pos[u], pos[v]) for (u, v) in g.edges if u in pos and v in pos]
    return DirectedGraph(len(kept), edges), tuple(kept)


def bfs_tree(g: DirectedGraph, src: int) -> tuple[list[int], list[int]]:
    """BFS distances (in edges, -1 if unreachable) and parents from ``src``.

    Neighbors expand in ascending id order, so the tree is deterministic.
    """
    dist = [-1] * g.n
    parent = [-1] * g.n
    dist[src] = 0
    queue = deque([src])
    adj = g.adj
    while queue:
        w = queue.popleft()
        for x in adj[w]:
            if dist[x] < 0:
                dist[x] = dist[w] + 1
                parent[x] = w
                queue.append(x)
    return dist, parent


def bfs_shortest_path(g: DirectedGraph, src: int, dst: int) -> Optional[PathWitness]:
    """A directed path from ``src`` to ``dst`` minimizing vertex count.

    Returns the single-vertex path when ``src == dst`` and None when no path
    exists. Ties break toward lower vertex ids (ascending neighbor expansion).
    """
    if not (0 <= src < g.n and 0 <= dst < g.n):
        raise ValueError("endpoint out of range")
    if src == dst:
        return PathWitness((src,))
    dist = [-1] * g.n
    parent = [-1] * g.n
    dist[src] = 0
    queue = deque([src])
    adj = g.adj
    while queue:
        w = queue.popleft()
        for x in adj[w]:
            if dist[x] < 0:
                dist[x] = dist[w] + 1
                parent[x] = w
                if x == dst:
                    queue.clear()
                    break
                queue.append(x)
    if dist[dst] < 0:
        return None
    path = [dst]
    while path[-1] != src:
        path.append(parent[path[-1]])
    path.reverse()
    return PathWitness(tuple(path))


def validate_path(g: DirectedGraph, w: PathWitness) -> ValidationResult:
    """Check the PathWitness invariants against ``g``."""
    vs = w.vertices
    if not vs:
        return ValidationResult(False, "empty")
    if any(not 0 <= v < g.n for v in vs):
        return ValidationResult(False, "vertex-out-of-range")
    if len(set(vs)) != len(vs):
        return ValidationResult(False, "repeated-vertex")
    for a, b in zip(vs, vs[1:]):
        if (a, b) not in g.edge_set:
            return ValidationResult(False, f"missing-edge-{a}->{b}")
    return ValidationResult(True)


def validate_cycle(g: DirectedGraph, w: CycleWitness, k: int) -> ValidationResult:
    """True iff ``w`` is a simple cycle of ``g`` on at least ``k`` vertices.

    Never raises: an invalid witness yields ``ok=False`` with a reason code.
    """
    vs = w.vertices
    if len(vs) < 2:
        return ValidationResult(False, "fewer-than-two-vertices")
    if any(not 0 <= v < g.n for v in vs):
        return ValidationResult(False, "vertex-out-of-range")
    if len(set(vs)) != len(vs):
        return ValidationResult(False, "repeated-vertex")
    for a, b in zip(vs, vs[1:] + (vs[0],)):
        if (a, b) not in g.edge_set:
            return ValidationResult(False, f"missing-edge-{a}->{b}")
    if len(vs) < k:
        return ValidationResult(False, "shorter-than-k")
    return ValidationResult(True)
