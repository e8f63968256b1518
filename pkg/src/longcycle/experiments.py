"""Statistical experiments on the partition-probability claims.

Each experiment compares an empirical frequency against its known value with
a 3-sigma binomial interval, or against a lower bound one-sidedly. Reports
are plain records and are byte-for-byte reproducible for a fixed seed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .partition import PartitionLR, random_partition


@dataclass(frozen=True)
class ExperimentReport:
    name: str
    params: tuple[tuple[str, float], ...]
    observed: float
    expected: float
    ci_low: float
    ci_high: float
    one_sided: bool
    passed: bool

    def summary(self) -> str:
        params = " ".join(f"{k}={v:g}" for k, v in self.params)
        mode = "one-sided" if self.one_sided else "two-sided"
        verdict = "pass" if self.passed else "FAIL"
        return (
            f"{self.name} ({params}): observed={self.observed:.6f} "
            f"expected={self.expected:.6f} interval=[{self.ci_low:.6f}, {self.ci_high:.6f}] "
            f"{mode} -> {verdict}"
        )


def is_target_split(p: PartitionLR, k: int) -> bool:
    """The fixed event: vertices 0..k-1 on the left, k..2k-1 on the right."""
    return all(i in p.left for i in range(k)) and all(
        i in p.right for i in range(k, 2 * k)
    )


def exact_split_probability(k: int) -> float:
    """Probability of the fixed 2k-split, by exhaustive enumeration of all
    side assignments (the independent cross-check for the 4^-k value)."""
    if k < 1:
        raise ValueError("k must be at least 1")
    n = 2 * k
    hits = 0
    for assignment in range(1 << n):
        left = frozenset(i for i in range(n) if not (assignment >> i) & 1)
        if is_target_split(PartitionLR(left, frozenset(range(n)) - left), k):
            hits += 1
    return hits / (1 << n)


def estimate_split_probability(k: int, trials: int, seed: int = 0) -> ExperimentReport:
    """Monte Carlo frequency of the fixed 2k-split vs. the exact 4^-k."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    rng = np.random.default_rng(seed)
    n = 2 * k
    hits = sum(1 for _ in range(trials) if is_target_split(random_partition(n, rng), k))
    observed = hits / trials
    expected = 4.0**-k
    sigma = math.sqrt(expected * (1 - expected) / trials)
    ci_low, ci_high = observed - 3 * sigma, observed + 3 * sigma
    return ExperimentReport(
        name="split-probability",
        params=(("k", k), ("trials", trials), ("seed", seed)),
        observed=observed,
        expected=expected,
        ci_low=ci_low,
        ci_high=ci_high,
        one_sided=False,
        passed=ci_low <= expected <= ci_high,
    )


def amplification_closed_form(k: int, c: float) -> float:
    """Exact probability that at least one of ceil(c * 4^k) fair-partition
    draws realizes the fixed 2k-split."""
    trials = math.ceil(c * 4**k)
    return 1.0 - (1.0 - 4.0**-k) ** trials


def estimate_amplification(
    k: int, c: float, meta_trials: int, seed: int = 0
) -> ExperimentReport:
    """Fraction of meta-trials in which a batch of ceil(c * 4^k) draws hits
    the fixed split.

    Passes when the observed rate is no more than 3 sigma below the 1 - e^-c
    lower bound and within 3 sigma of the closed-form exact value.
    """
    if meta_trials < 1:
        raise ValueError("meta_trials must be at least 1")
    rng = np.random.default_rng(seed)
    n = 2 * k
    batch = math.ceil(c * 4**k)
    hits = 0
    for _ in range(meta_trials):
        if any(is_target_split(random_partition(n, rng), k) for _ in range(batch)):
            hits += 1
    observed = hits / meta_trials
    exact = amplification_closed_form(k, c)
    bound = 1.0 - math.exp(-c)
    sigma = math.sqrt(exact * (1 - exact) / meta_trials)
    passed = observed >= bound - 3 * sigma and abs(observed - exact) <= 3 * sigma
    return ExperimentReport(
        name="amplification",
        params=(("k", k), ("c", c), ("meta_trials", meta_trials), ("seed", seed)),
        observed=observed,
        expected=exact,
        ci_low=bound - 3 * sigma,
        ci_high=exact + 3 * sigma,
        one_sided=True,
        passed=passed,
    )
