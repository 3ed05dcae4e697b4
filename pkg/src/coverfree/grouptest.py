"""Non-adaptive group testing over incidence-matrix pooling designs.

Blocks are items and points are pools: item t participates in pool j
when bit j of row t is set. On a (1, r; d)-cover-free matrix the naive
threshold decoder is exact for up to r defectives, because every clean
item keeps more than d honest negative pools while flipping e outcomes
can darken at most e pools of a defective item.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .core import IncidenceMatrix

__all__ = [
    "SimulationStats",
    "TestOutcome",
    "decode",
    "encode",
    "inject_errors",
    "simulate",
]


@dataclass(frozen=True)
class TestOutcome:
    """Pool outcomes of one screening round.

    ``outcomes`` is a bitmask over ``num_pools`` pools (bit j set means
    pool j tested positive); ``errors_injected`` records which pools
    disagree with the honest encoding.
    """

    num_pools: int
    outcomes: int
    errors_injected: frozenset[int] = frozenset()

    def __post_init__(self) -> None:
        if self.num_pools < 1:
            raise ValueError("need at least one pool")
        if not 0 <= self.outcomes < (1 << self.num_pools):
            raise ValueError("outcome mask wider than the pool count")
        bad = [j for j in self.errors_injected if not 0 <= j < self.num_pools]
        if bad:
            raise ValueError(f"flipped pool indices out of range: {sorted(bad)}")

    def vector(self) -> tuple[int, ...]:
        """Outcomes as an explicit 0/1 tuple, pool 0 first."""
        return tuple((self.outcomes >> j) & 1 for j in range(self.num_pools))


def encode(m: IncidenceMatrix, defectives: set[int]) -> TestOutcome:
    """Honest outcomes when the given blocks are defective: pool j is
    positive iff some defective block contains point j (OR of rows)."""
    mask = 0
    for t in defectives:
        if not 0 <= t < m.num_blocks:
            raise IndexError(f"block index {t} out of range (T={m.num_blocks})")
        mask |= m.rows[t]
    return TestOutcome(num_pools=m.num_points, outcomes=mask)


def inject_errors(o: TestOutcome, count: int, seed: int = 0) -> TestOutcome:
    """Flip ``count`` distinct uniformly chosen pools.

    Flips compose: a pool flipped twice across calls reads honest again,
    so ``errors_injected`` is the symmetric difference.
    """
    if not 0 <= count <= o.num_pools:
        raise ValueError(f"count must lie in [0, {o.num_pools}], got {count}")
    rng = random.Random(f"gt-errors:{seed}")
    flips = rng.sample(range(o.num_pools), count)
    mask = 0
    for j in flips:
        mask |= 1 << j
    return TestOutcome(
        num_pools=o.num_pools,
        outcomes=o.outcomes ^ mask,
        errors_injected=o.errors_injected ^ frozenset(flips),
    )


def decode(m: IncidenceMatrix, o: TestOutcome, tolerance: int = 0) -> set[int]:
    """Blocks whose points hit at most ``tolerance`` negative pools.

    Soundness: on a (1, r; d)-cover-free matrix with at most r defective
    blocks and at most floor(d/2) flipped outcomes, tolerance floor(d/2)
    recovers the defective set exactly. A defective block can lose at
    most floor(d/2) pools to flips, and a clean block retains more than
    d - floor(d/2) >= floor(d/2) + 1 negative pools.

    With tolerance 0 on noiseless outcomes this is the classical rule:
    defective iff every pool containing the item is positive.
    """
    if tolerance < 0:
        raise ValueError("tolerance must be non-negative")
    if o.num_pools != m.num_points:
        raise ValueError(
            f"outcome covers {o.num_pools} pools, matrix has {m.num_points} points"
        )
    negative = ~o.outcomes
    return {
        t for t, row in enumerate(m.rows) if (row & negative).bit_count() <= tolerance
    }


@dataclass(frozen=True)
class SimulationStats:
    """Tallies from repeated encode/corrupt/decode rounds."""

    trials: int
    exact: int
    false_positives: int
    false_negatives: int
    tolerance: int
    max_errors: int

    @property
    def exact_rate(self) -> float:
        return self.exact / self.trials


def simulate(
    m: IncidenceMatrix,
    r: int,
    d: int,
    trials: int,
    seed: int = 0,
    max_errors: int | None = None,
) -> SimulationStats:
    """Monte-Carlo decoder evaluation on one matrix.

    Each trial draws a defective set of size uniform in 0..r and an error
    count uniform in 0..max_errors (default floor(d/2), the most the
    decoder guarantees against), then decodes with tolerance floor(d/2).
    Deterministic for a fixed seed. If m really is a (1, r; d)-cover-free
    family and max_errors stays at the default, the exact-recovery rate
    is 1.0; raising max_errors leaves the guarantee behind and simply
    reports what happens.
    """
    if trials < 1:
        raise ValueError("trials must be positive")
    if not 0 <= r <= m.num_blocks:
        raise ValueError(f"need 0 <= r <= {m.num_blocks}, got r={r}")
    if d < 0:
        raise ValueError("d must be non-negative")
    tolerance = d // 2
    if max_errors is None:
        max_errors = d // 2
    if not 0 <= max_errors <= m.num_points:
        raise ValueError(f"max_errors must lie in [0, {m.num_points}]")
    rng = random.Random(f"gt-sim:{seed}")
    exact = 0
    false_positives = 0
    false_negatives = 0
    for _ in range(trials):
        defectives = set(rng.sample(range(m.num_blocks), rng.randint(0, r)))
        outcome = encode(m, defectives)
        count = rng.randint(0, max_errors)
        if count:
            outcome = inject_errors(outcome, count, seed=rng.getrandbits(32))
        decoded = decode(m, outcome, tolerance)
        if decoded == defectives:
            exact += 1
        false_positives += len(decoded - defectives)
        false_negatives += len(defectives - decoded)
    return SimulationStats(
        trials=trials,
        exact=exact,
        false_positives=false_positives,
        false_negatives=false_negatives,
        tolerance=tolerance,
        max_errors=max_errors,
    )
