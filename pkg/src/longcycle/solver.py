"""Full solver: does the graph contain a simple cycle on at least k vertices?

Two phases. First a short-cycle scan asks the k-path backend, for every
length k..2k and every edge (u, v), whether a path on exactly that many
vertices runs from v back to u; any hit closes into a cycle witness. If the
scan comes up empty, any remaining cycle must exceed 2k vertices, and the
split search takes over: deterministic mode iterates the partitions derived
from an (n, 2k)-universal family, randomized mode draws ceil(c * 4^k) fair
partitions. Every yes answer carries a witness, so positive answers are
always correct in both modes; a randomized no is wrong with probability at
most e^-c plus the scan's one-sided miss rate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import CapacityError
from .graph import CycleWitness, DirectedGraph, validate_cycle
from .kpath import (
    DEFAULT_DP_CAP,
    DEFAULT_REPETITION_CONSTANT,
    ColorCodingBackend,
    KPathQuery,
    SubsetDPBackend,
    extract_path_witness,
)
from .partition import (
    DEFAULT_UNIVERSAL_CAP,
    PartitionLR,
    cached_universal_set,
    partitions_from_family,
    random_partition,
)
from .splitcycle import split_cycle_search

MODES = ("det", "rand")
BACKEND_KINDS = ("dp", "color")


class WitnessVerificationError(Exception):
    """A yes answer failed witness validation; unreachable unless a solver
    component is buggy, and raised so it can never pass silently."""


@dataclass(frozen=True)
class SolverConfig:
    """Knobs for one solver run.

    mode: "det" (exact) or "rand" (one-sided error).
    seed: RNG seed for partition draws and the color-coding backend.
    amplification: c in the randomized trial count ceil(c * 4^k).
    kpath: backend override; None picks dp for det and color for rand.
    repetition_constant / repetitions: color-coding retry budget per query
    (repetitions, when set, overrides the ceil(constant * e^length) default).
    dp_cap / universal_cap: size guards for the exponential components.
    """

    mode: str = "det"
    seed: int = 0
    amplification: float = 10.0
    kpath: Optional[str] = None
    repetition_constant: float = DEFAULT_REPETITION_CONSTANT
    repetitions: Optional[int] = None
    dp_cap: int = DEFAULT_DP_CAP
    universal_cap: int = DEFAULT_UNIVERSAL_CAP

    def __post_init__(self) -> None:
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.kpath is not None and self.kpath not in BACKEND_KINDS:
            raise ValueError(f"kpath must be one of {BACKEND_KINDS}, got {self.kpath!r}")
        if self.amplification <= 0:
            raise ValueError("amplification must be positive")
        if self.dp_cap < 1 or self.universal_cap < 1:
            raise ValueError("caps must be positive")

    @property
    def backend_kind(self) -> str:
        return self.kpath or ("dp" if self.mode == "det" else "color")

    @property
    def mixed_backend(self) -> bool:
        return self.backend_kind != ("dp" if self.mode == "det" else "color")


@dataclass(frozen=True)
class SolveResult:
    """Outcome record: decision, witness, where it came from, and counters."""

    found: bool
    witness: Optional[CycleWitness]
    provenance: Optional[str]  # "short-scan" | "split-search"
    partition_index: Optional[int]
    accept_pair: Optional[tuple[int, int]]
    kpath_calls: int
    partitions_tried: int
    mode: str
    backend_kind: str
    mixed_backend: bool

    def to_json_dict(self) -> dict:
        return {
            "decision": "yes" if self.found else "no",
            "witness": list(self.witness.vertices) if self.witness else None,
            "provenance": self.provenance,
            "partition_index": self.partition_index,
            "accept_pair": list(self.accept_pair) if self.accept_pair else None,
            "kpath_calls": self.kpath_calls,
            "partitions_tried": self.partitions_tried,
            "mode": self.mode,
            "backend": self.backend_kind,
            "mixed_backend": self.mixed_backend,
        }


def _make_backend(cfg: SolverConfig):
    if cfg.backend_kind == "dp":
        return SubsetDPBackend(cap=cfg.dp_cap)
    return ColorCodingBackend(
        seed=[cfg.seed, 0],
        repetition_constant=cfg.repetition_constant,
        repetitions=cfg.repetitions,
    )


def short_cycle_scan(g: DirectedGraph, k: int, backend) -> Optional[CycleWitness]:
    """Look for a cycle on l vertices for some l in k..2k.

    For each candidate length and each edge (u, v), ask the backend for a
    path on exactly l vertices from v to u; the first positive decision is
    extracted into a path witness and closed with (u, v) into a cycle.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    for length in range(k, 2 * k + 1):
        for u, v in g.edges:
            query = KPathQuery(g, v, u, length)
            path = extract_path_witness(backend, query)
            if path is not None:
                return CycleWitness(path.vertices)
    return None


def solve(g: DirectedGraph, k: int, cfg: SolverConfig = SolverConfig()) -> SolveResult:
    """Decide whether ``g`` has a simple cycle on at least ``k`` vertices."""
    if k < 2:
        raise ValueError("k must be at least 2 (single-vertex cycles are not defined)")
    backend = _make_backend(cfg)

    def answer(found, witness=None, provenance=None, index=None, pair=None, tried=0):
        return SolveResult(
            found=found,
            witness=witness,
            provenance=provenance,
            partition_index=index,
            accept_pair=pair,
            kpath_calls=backend.calls,
            partitions_tried=tried,
            mode=cfg.mode,
            backend_kind=cfg.backend_kind,
            mixed_backend=cfg.mixed_backend,
        )

    scan_hit = short_cycle_scan(g, k, backend)
    if scan_hit is not None:
        return answer(True, scan_hit, "short-scan")

    if cfg.mode == "det":
        if 2 * k > g.n:
            # The scan covered every length up to n, so no cycle of >= k
            # vertices can exist; the partition stage has nothing to add.
            return answer(False)
        try:
            family = cached_universal_set(g.n, 2 * k, cap=cfg.universal_cap)
        except CapacityError as exc:
            raise CapacityError(f"det mode (universal_cap={cfg.universal_cap}): {exc}") from exc
        partitions = partitions_from_family(family, g.n)
        for index, part in enumerate(partitions):
            outcome = split_cycle_search(g, k, part)
            if outcome.accepted:
                return answer(
                    True, outcome.witness, "split-search", index, outcome.pair, index + 1
                )
        return answer(False, tried=len(partitions))

    trials = math.ceil(cfg.amplification * 4**k)
    rng = np.random.default_rng([cfg.seed, 1])
    for index in range(trials):
        part = random_partition(g.n, rng)
        outcome = split_cycle_search(g, k, part)
        if outcome.accepted:
            return answer(
                True, outcome.witness, "split-search", index, outcome.pair, index + 1
            )
    return answer(False, tried=trials)


def solve_verified(g: DirectedGraph, k: int, cfg: SolverConfig = SolverConfig()) -> SolveResult:
    """solve(), plus revalidation of any witness against the input graph.

    A yes answer with an invalid witness is converted into an error rather
    than ever being returned.
    """
    result = solve(g, k, cfg)
    if result.found:
        check = validate_cycle(g, result.witness, k)
        if not check:
            raise WitnessVerificationError(
                f"witness {result.witness} failed validation: {check.reason}"
            )
    return result
