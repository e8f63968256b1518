"""Two-sided vertex partitions (L, R) and the universal-set families that
enumerate them deterministically.

A family of 0/1 functions on ``{0..n-1}`` is (n, t)-universal when every
0/1 pattern on every t-subset of indices is realized by some member. Turning
each member f into the partition ``L = {i : f(i) = 0}`` guarantees that any
fixed t vertices can be split any fixed way by some partition in the family,
which is what the deterministic solver mode iterates over. The randomized
mode instead draws fair-coin partitions: a fixed split of 2k named vertices
is hit with probability 4^-k per draw.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

import numpy as np

from .errors import CapacityError

DEFAULT_UNIVERSAL_CAP = 12
DEFAULT_VERIFY_BUDGET = 2_000_000
DEFAULT_BUILD_BUDGET = 4_000_000
_GREEDY_POOL = 32


class VerificationBudgetError(CapacityError):
    """The verification constraint count exceeds the allowed budget. Raised
    instead of returning False so refusal is distinct from a counterexample."""


@dataclass(frozen=True)
class PartitionLR:
    """A true partition of ``{0..n-1}`` into a left and a right side."""

    left: frozenset[int]
    right: frozenset[int]

    def __post_init__(self) -> None:
        if self.left & self.right:
            raise ValueError("left and right sides overlap")
        n = len(self.left) + len(self.right)
        if self.left | self.right != frozenset(range(n)):
            raise ValueError("sides do not cover a dense vertex range")

    @property
    def n(self) -> int:
        return len(self.left) + len(self.right)


@dataclass(frozen=True)
class UniversalSetFamily:
    """An ordered family of 0/1 functions on ``{0..n-1}``, each stored as a
    bitmask (bit i = f(i))."""

    n: int
    t: int
    masks: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.masks)

    def rows(self) -> list[str]:
        """One '0'/'1' row per function, index 0 first."""
        return [
            "".join(str((mask >> i) & 1) for i in range(self.n)) for mask in self.masks
        ]


@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    violation: Optional[tuple[tuple[int, ...], tuple[int, ...]]] = None

    def __bool__(self) -> bool:
        return self.ok


def random_partition(n: int, rng: np.random.Generator) -> PartitionLR:
    """Assign each vertex to the left side with probability 1/2, else right."""
    if n < 0:
        raise ValueError("n must be non-negative")
    bits = rng.integers(0, 2, size=n)
    left = frozenset(int(i) for i in range(n) if bits[i] == 0)
    right = frozenset(range(n)) - left
    return PartitionLR(left, right)


def _pattern(mask: int, indices: tuple[int, ...]) -> int:
    p = 0
    for j, i in enumerate(indices):
        p |= ((mask >> i) & 1) << j
    return p


def build_universal_set(
    n: int,
    t: int,
    cap: int = DEFAULT_UNIVERSAL_CAP,
    seed: int = 0,
    budget: int = DEFAULT_BUILD_BUDGET,
) -> UniversalSetFamily:
    """Construct a certified (n, t)-universal family.

    When ``2^n <= 4 * 2^t`` the full function space is returned (trivially
    universal and no larger than a covering construction would be). Otherwise
    a greedy cover runs: each round scores a pool of random candidate vectors
    plus one vector patched from the first uncovered constraint, keeps the one
    covering the most still-open (t-subset, pattern) constraints, and stops
    once every constraint is covered. Construction is deterministic for a
    fixed seed. Family size is whatever the cover needed; callers should
    report it rather than assume optimality.
    """
    if not 1 <= t <= n:
        raise ValueError(f"need 1 <= t <= n, got t={t}, n={n}")
    if t > cap:
        raise CapacityError(f"universal-set construction supports t <= {cap}, got t={t}")
    n_constraints = math.comb(n, t) << t
    if n_constraints > budget:
        raise CapacityError(
            f"universal-set construction needs {n_constraints} constraints, budget {budget}"
        )

    if 2**n <= 4 * 2**t:
        return UniversalSetFamily(n, t, tuple(range(2**n)))

    subsets = np.array(list(combinations(range(n), t)), dtype=np.int64)
    weights = (1 << np.arange(t)).astype(np.int64)
    uncovered = np.ones((len(subsets), 1 << t), dtype=bool)
    rows = np.arange(len(subsets))
    rng = np.random.default_rng(seed)
    masks: list[int] = []

    while uncovered.any():
        pool = rng.integers(0, 2, size=(_GREEDY_POOL, n), dtype=np.int64)
        row, pattern = np.argwhere(uncovered)[0]
        patch = np.zeros(n, dtype=np.int64)
        patch[subsets[row]] = (pattern >> np.arange(t)) & 1
        candidates = np.vstack([pool, patch[None, :]])
        patterns = (candidates[:, subsets] * weights).sum(axis=2)
        scores = uncovered[rows[None, :], patterns].sum(axis=1)
        best = int(np.argmax(scores))
        chosen = candidates[best]
        masks.append(sum(1 << i for i in range(n) if chosen[i]))
        uncovered[rows, patterns[best]] = False

    return UniversalSetFamily(n, t, tuple(masks))


_family_cache: dict[tuple[int, int], UniversalSetFamily] = {}


def cached_universal_set(n: int, t: int, cap: int = DEFAULT_UNIVERSAL_CAP) -> UniversalSetFamily:
    """Memoized build_universal_set: families depend only on (n, t)."""
    key = (n, t)
    fam = _family_cache.get(key)
    if fam is None:
        fam = build_universal_set(n, t, cap=cap)
        _family_cache[key] = fam
    return fam


def verify_universal(
    fam: UniversalSetFamily, budget: int = DEFAULT_VERIFY_BUDGET
) -> VerifyResult:
    """Check every (t-subset, pattern) constraint against the family.

    Returns the first violated (indices, pattern bits) pair on failure. Kept
    as straight re-derivation, independent of the constraint tracking inside
    build_universal_set.
    """
    n, t = fam.n, fam.t
    n_constraints = math.comb(n, t) << t
    if n_constraints > budget:
        raise VerificationBudgetError(
            f"verification needs {n_constraints} constraints, budget {budget}"
        )
    full = 1 << t
    for indices in combinations(range(n), t):
        realized = {_pattern(mask, indices) for mask in fam.masks}
        if len(realized) < full:
            missing = min(set(range(full)) - realized)
            bits = tuple((missing >> j) & 1 for j in range(t))
            return VerifyResult(False, (indices, bits))
    return VerifyResult(True)


def partitions_from_family(fam: UniversalSetFamily, n: int) -> tuple[PartitionLR, ...]:
    """One partition per family member, in family order: vertex i goes left
    when the member's bit i is 0."""
    if fam.n != n:
        raise ValueError(f"family is over {fam.n} indices, graph has {n} vertices")
    everything = frozenset(range(n))
    out = []
    for mask in fam.masks:
        left = frozenset(i for i in range(n) if not (mask >> i) & 1)
        out.append(PartitionLR(left, everything - left))
    return tuple(out)


def family_to_text(fam: UniversalSetFamily) -> str:
    """Serialize a family: header ``n t`` then one 0/1 row per function."""
    return "\n".join([f"{fam.n} {fam.t}", *fam.rows()]) + "\n"


def family_from_text(text: str) -> UniversalSetFamily:
    """Inverse of family_to_text."""
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if not lines:
        raise ValueError("empty family document")
    try:
        n, t = (int(x) for x in lines[0].split())
    except ValueError:
        raise ValueError("family header must be 'n t'") from None
    masks = []
    for row in lines[1:]:
        if len(row) != n or set(row) - {"0", "1"}:
            raise ValueError(f"bad family row {row!r}: expected {n} characters of 0/1")
        masks.append(sum(1 << i for i, ch in enumerate(row) if ch == "1"))
    return UniversalSetFamily(n, t, tuple(masks))
