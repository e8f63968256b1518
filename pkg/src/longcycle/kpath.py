"""Exact-length path queries: does the graph contain a simple path on exactly
``length`` vertices from ``start`` to ``end``?

Two interchangeable backends answer the query:

* SubsetDPBackend - exact dynamic program over (vertex subset, last vertex)
  states, exponential in n, guarded by a size cap.
* ColorCodingBackend - randomized: color vertices uniformly with ``length``
  colors and search a colorful path by DP over (color subset, last vertex).
  One-sided error: True is always correct; False may be wrong on a yes
  instance with probability at most (1 - e^-length)^repetitions.

``extract_path_witness`` turns any positive decision into a concrete verified
path by iteratively deleting edges whose removal keeps the decision positive.
"""

from __future__ import annotations

import math
import weakref
from dataclasses import dataclass, field

import numpy as np

from .errors import CapacityError
from .graph import DirectedGraph, PathWitness, validate_path

DEFAULT_DP_CAP = 25
DEFAULT_REPETITION_CONSTANT = 3.0
DEFAULT_EXTRACTION_RETRIES = 3


class ExtractionError(Exception):
    """Witness extraction kept failing validation (randomized flakiness)."""


@dataclass(frozen=True, eq=False)
class KPathQuery:
    """Simple path on exactly ``length`` vertices directed start -> end."""

    graph: DirectedGraph
    start: int
    end: int
    length: int

    def __post_init__(self) -> None:
        n = self.graph.n
        if not (0 <= self.start < n and 0 <= self.end < n):
            raise ValueError("query endpoints out of range")
        if self.length < 1:
            raise ValueError("length must be at least 1")


def _adj_bits(g: DirectedGraph) -> list[int]:
    bits = [0] * g.n
    for u, v in g.edges:
        bits[u] |= 1 << v
    return bits


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def subset_dp_states(q: KPathQuery, cap: int = DEFAULT_DP_CAP) -> dict[int, int]:
    """Final DP layer: every (subset, last vertex) state reachable by a simple
    path from ``q.start`` on exactly ``q.length`` vertices. Keys are vertex
    subsets (bitmask), values are bitmasks of possible last vertices."""
    g = q.graph
    if g.n > cap:
        raise CapacityError(
            f"subset DP supports n <= {cap}, got n={g.n}; use the color-coding backend"
        )
    if q.length > g.n:
        return {}
    adj_bits = _adj_bits(g)
    frontier: dict[int, int] = {1 << q.start: 1 << q.start}
    for _ in range(q.length - 1):
        nxt: dict[int, int] = {}
        for mask, ends in frontier.items():
            reach = 0
            for w in _iter_bits(ends):
                reach |= adj_bits[w]
            reach &= ~mask
            for x in _iter_bits(reach):
                key = mask | (1 << x)
                nxt[key] = nxt.get(key, 0) | (1 << x)
        frontier = nxt
        if not frontier:
            break
    return frontier


def subset_dp_decide(q: KPathQuery, cap: int = DEFAULT_DP_CAP) -> bool:
    """Exact decision for a KPathQuery via the subset dynamic program."""
    if q.length > q.graph.n:
        return False
    if q.length == 1:
        return q.start == q.end
    states = subset_dp_states(q, cap=cap)
    return any((ends >> q.end) & 1 for ends in states.values())


def default_repetitions(length: int, constant: float = DEFAULT_REPETITION_CONSTANT) -> int:
    """Repetition count giving per-query miss probability <= e^-constant."""
    return max(1, math.ceil(constant * math.exp(length)))


def color_coding_decide(q: KPathQuery, repetitions: int, rng: np.random.Generator) -> bool:
    """Randomized decision: ``repetitions`` independent colorings, each
    followed by a colorful-path DP. Never returns True on a no instance."""
    if repetitions < 1:
        raise ValueError("repetitions must be at least 1")
    g = q.graph
    if q.length > g.n:
        return False
    if q.length == 1:
        return q.start == q.end
    adj_bits = _adj_bits(g)
    length = q.length
    for _ in range(repetitions):
        colors = rng.integers(0, length, size=g.n)
        color_bit = [1 << int(c) for c in colors]
        frontier: dict[int, int] = {color_bit[q.start]: 1 << q.start}
        for _ in range(length - 1):
            nxt: dict[int, int] = {}
            for cmask, verts in frontier.items():
                reach = 0
                for w in _iter_bits(verts):
                    reach |= adj_bits[w]
                for x in _iter_bits(reach):
                    cb = color_bit[x]
                    if cmask & cb:
                        continue
                    key = cmask | cb
                    nxt[key] = nxt.get(key, 0) | (1 << x)
            frontier = nxt
            if not frontier:
                break
        if any((verts >> q.end) & 1 for verts in frontier.values()):
            return True
    return False


class SubsetDPBackend:
    """Exact backend. Memoizes the DP per (graph, start vertex) so the scan
    in the driver, which asks about every length and endpoint, pays for each
    start only once. The memo is a pure cache: concurrent use at worst
    recomputes an entry."""

    kind = "dp"

    def __init__(self, cap: int = DEFAULT_DP_CAP, cache: bool = True):
        self.cap = cap
        self.calls = 0
        self._cache: "weakref.WeakKeyDictionary[DirectedGraph, dict]" = (
            weakref.WeakKeyDictionary() if cache else None
        )

    def decide(self, q: KPathQuery) -> bool:
        self.calls += 1
        if q.length > q.graph.n:
            return False
        if q.length == 1:
            return q.start == q.end
        if self._cache is None:
            return subset_dp_decide(q, cap=self.cap)
        return self._cached_decide(q)

    def _cached_decide(self, q: KPathQuery) -> bool:
        g = q.graph
        if g.n > self.cap:
            raise CapacityError(
                f"subset DP supports n <= {self.cap}, got n={g.n}; "
                "use the color-coding backend"
            )
        per_graph = self._cache.setdefault(g, {})
        entry = per_graph.get(q.start)
        if entry is None:
            entry = {
                "ends": [0, 1 << q.start],  # ends[l] = endpoint bitmask at l vertices
                "frontier": {1 << q.start: 1 << q.start},
            }
            per_graph[q.start] = entry
        ends: list[int] = entry["ends"]
        adj_bits = None
        while len(ends) <= q.length and entry["frontier"]:
            if adj_bits is None:
                adj_bits = _adj_bits(g)
            nxt: dict[int, int] = {}
            layer_ends = 0
            for mask, last in entry["frontier"].items():
                reach = 0
                for w in _iter_bits(last):
                    reach |= adj_bits[w]
                reach &= ~mask
                for x in _iter_bits(reach):
                    key = mask | (1 << x)
                    nxt[key] = nxt.get(key, 0) | (1 << x)
            for last in nxt.values():
                layer_ends |= last
            entry["frontier"] = nxt
            if nxt:
                ends.append(layer_ends)
        if q.length >= len(ends):
            return False
        return bool((ends[q.length] >> q.end) & 1)


class ColorCodingBackend:
    """Randomized backend. Each query gets an independent RNG stream spawned
    from the seed, so answers are reproducible for a fixed seed and queries
    may run concurrently without sharing generator state."""

    kind = "color"

    def __init__(
        self,
        seed=0,
        repetition_constant: float = DEFAULT_REPETITION_CONSTANT,
        repetitions: int | None = None,
    ):
        if repetitions is not None and repetitions < 1:
            raise ValueError("repetitions must be at least 1")
        self.repetition_constant = repetition_constant
        self.repetitions = repetitions
        self.calls = 0
        self._seed_seq = np.random.SeedSequence(seed)

    def repetitions_for(self, length: int) -> int:
        if self.repetitions is not None:
            return self.repetitions
        return default_repetitions(length, self.repetition_constant)

    def decide(self, q: KPathQuery) -> bool:
        self.calls += 1
        rng = np.random.default_rng(self._seed_seq.spawn(1)[0])
        return color_coding_decide(q, self.repetitions_for(q.length), rng)


def decide_kpath(backend, q: KPathQuery) -> bool:
    """Decide a KPathQuery through a backend. Lengths above n are vacuously
    impossible and single-vertex queries are answered directly."""
    if q.length > q.graph.n:
        return False
    if q.length == 1:
        return q.start == q.end
    return backend.decide(q)


def _search_exact_path(
    n: int, edges: set[tuple[int, int]], start: int, end: int, length: int
) -> tuple[int, ...] | None:
    """DFS for a simple path on exactly ``length`` vertices inside an explicit
    edge set (the survivor of the deletion sweep, so it is tiny)."""
    adj: dict[int, list[int]] = {}
    for u, v in sorted(edges):
        adj.setdefault(u, []).append(v)
    path = [start]

    def dfs(seen: set[int]) -> tuple[int, ...] | None:
        if len(path) == length:
            return tuple(path) if path[-1] == end else None
        for x in adj.get(path[-1], ()):
            if x in seen:
                continue
            path.append(x)
            seen.add(x)
            found = dfs(seen)
            if found is not None:
                return found
            seen.remove(x)
            path.pop()
        return None

    return dfs({start})


def extract_path_witness(
    backend, q: KPathQuery, retries: int = DEFAULT_EXTRACTION_RETRIES
) -> PathWitness | None:
    """Turn a positive decision into a verified PathWitness.

    Tests every edge: if the decision stays positive without it, the edge is
    deleted for good. Because a positive answer is always backed by a real
    path, the surviving edge set still contains one, and a DFS restricted to
    it recovers the witness. A flaky randomized backend can only retain
    removable edges, never break the path, so validation failures are limited
    to bounded retries before raising ExtractionError.
    """
    if not decide_kpath(backend, q):
        return None
    if q.length == 1:
        return PathWitness((q.start,))
    g = q.graph
    last_reason = "no-path-in-survivor"
    for _ in range(retries):
        surviving = set(g.edges)
        for e in g.edges:
            if e not in surviving:
                continue
            trial = DirectedGraph(g.n, surviving - {e})
            if decide_kpath(backend, KPathQuery(trial, q.start, q.end, q.length)):
                surviving.remove(e)
        found = _search_exact_path(g.n, surviving, q.start, q.end, q.length)
        if found is not None:
            witness = PathWitness(found)
            check = validate_path(g, witness)
            if check and len(witness) == q.length:
                return witness
            last_reason = check.reason
    raise ExtractionError(
        f"could not extract a consistent witness after {retries} attempts ({last_reason})"
    )
