"""Ground-truth property checkers for cover-free and disjunct matrices.

The exhaustive checker enumerates witness candidates in colexicographic
order and short-circuits, so a failing call always reports the colex-least
violation; results never depend on scheduling. Costs are counted in
(B-set, A-set) pair evaluations and refused above a budget rather than
silently running for hours.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterator, Sequence

from .core import CFFParams, IncidenceMatrix

__all__ = [
    "BudgetExceededError",
    "CheckResult",
    "DEFAULT_BUDGET",
    "ViolationWitness",
    "check_claim",
    "is_cff",
    "is_cff_sampled",
    "is_disjunct",
    "is_k_uniform",
    "max_r",
    "pair_count",
]

DEFAULT_BUDGET = 10**9


class BudgetExceededError(RuntimeError):
    """Raised when an exhaustive scan would exceed its evaluation budget."""


@dataclass(frozen=True)
class ViolationWitness:
    """A concrete refutation: blocks ``b_rows`` intersected, blocks
    ``a_rows`` subtracted, leave only ``residual`` points (<= d)."""

    b_rows: tuple[int, ...]
    a_rows: tuple[int, ...]
    residual: int

    def replay(self, m: IncidenceMatrix) -> int:
        inter = m.rows[self.b_rows[0]]
        for i in self.b_rows[1:]:
            inter &= m.rows[i]
        union = 0
        for i in self.a_rows:
            union |= m.rows[i]
        return (inter & ~union).bit_count()


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    witness: ViolationWitness | None = None
    method: str = "exhaustive"

    def __bool__(self) -> bool:
        return self.ok


def pair_count(T: int, w: int, r: int) -> int:
    """Number of (B-set, A-set) evaluations an exhaustive check performs."""
    return comb(T, w) * comb(T - w, r)


def _colex(items: Sequence[int], k: int) -> Iterator[tuple[int, ...]]:
    """k-subsets of ``items`` in colexicographic order (items ascending)."""
    if k == 0:
        yield ()
        return
    for last in range(k - 1, len(items)):
        for rest in _colex(items[:last], k - 1):
            yield rest + (items[last],)


def is_cff(
    m: IncidenceMatrix, params: CFFParams, *, budget: int = DEFAULT_BUDGET
) -> CheckResult:
    """Exhaustively decide whether ``m`` is a (w, r; d)-cover-free family.

    Checks every choice of w blocks B and r further blocks A for
    ``|intersection(B) \\ union(A)| > d``; on failure returns the
    colex-least violating pair (B-major order) as the witness.
    """
    if params.N != m.num_points or params.T != m.num_blocks:
        raise ValueError(
            f"claim shape ({params.N}, {params.T}) does not match matrix "
            f"({m.num_points}, {m.num_blocks})"
        )
    w, r, d = params.w, params.r, params.d
    total = pair_count(m.num_blocks, w, r)
    if total > budget:
        raise BudgetExceededError(
            f"{total} pair evaluations exceed the budget of {budget}; "
            "use is_cff_sampled or raise the budget"
        )
    rows = m.rows
    indices = range(m.num_blocks)
    for b_set in _colex(indices, w):
        inter = rows[b_set[0]]
        for i in b_set[1:]:
            inter &= rows[i]
        b_mask = set(b_set)
        rest = [i for i in indices if i not in b_mask]
        for a_set in _colex(rest, r):
            union = 0
            for i in a_set:
                union |= rows[i]
            residual = (inter & ~union).bit_count()
            if residual <= d:
                return CheckResult(False, ViolationWitness(b_set, a_set, residual))
    return CheckResult(True)


def is_cff_sampled(
    m: IncidenceMatrix,
    params: CFFParams,
    trials: int,
    seed: int,
) -> CheckResult:
    """Monte-Carlo variant: draws ``trials`` uniform (B, A) pairs.

    A reported failure is definitive (the witness replays); a pass only says
    no violation was sampled. Deterministic for a fixed seed.
    """
    if params.N != m.num_points or params.T != m.num_blocks:
        raise ValueError(
            f"claim shape ({params.N}, {params.T}) does not match matrix "
            f"({m.num_points}, {m.num_blocks})"
        )
    if trials < 1:
        raise ValueError("trials must be positive")
    w, r, d = params.w, params.r, params.d
    rows = m.rows
    rng = random.Random(f"cff-sample:{seed}")
    T = m.num_blocks
    for _ in range(trials):
        chosen = rng.sample(range(T), w + r)
        b_set = tuple(sorted(chosen[:w]))
        a_set = tuple(sorted(chosen[w:]))
        inter = rows[b_set[0]]
        for i in b_set[1:]:
            inter &= rows[i]
        union = 0
        for i in a_set:
            union |= rows[i]
        residual = (inter & ~union).bit_count()
        if residual <= d:
            return CheckResult(False, ViolationWitness(b_set, a_set, residual), "sampled")
    return CheckResult(True, method="sampled")


def is_disjunct(
    m: IncidenceMatrix, i: int, j: int, *, budget: int = DEFAULT_BUDGET
) -> CheckResult:
    """Exhaustively decide whether ``m`` is (i, j)-disjunct.

    For every pair of disjoint point sets P, Q with |P| <= i and |Q| <= j,
    some block must contain all of P and none of Q. Implemented directly on
    point subsets; the transpose of a passing matrix is an (i, j)-cover-free
    family and vice versa. A failure witness holds (P, Q) in its row fields
    and replays against ``m.transpose()``.
    """
    if i < 1 or j < 1:
        raise ValueError("i and j must be positive")
    if i + j > m.num_points:
        raise ValueError(
            f"need i + j <= num_points, got i+j={i + j} with {m.num_points} points"
        )
    total = sum(
        comb(m.num_points, p) * comb(m.num_points - p, q)
        for p in range(i + 1)
        for q in range(j + 1)
    )
    if total > budget:
        raise BudgetExceededError(
            f"{total} (P, Q) evaluations exceed the budget of {budget}"
        )
    points = range(m.num_points)
    rows = m.rows
    for p_size in range(i + 1):
        for p_set in combinations(points, p_size):
            p_mask = 0
            for x in p_set:
                p_mask |= 1 << x
            rest = [x for x in points if not (p_mask >> x) & 1]
            for q_size in range(j + 1):
                for q_set in combinations(rest, q_size):
                    q_mask = 0
                    for x in q_set:
                        q_mask |= 1 << x
                    if not any(
                        (row & p_mask) == p_mask and not (row & q_mask)
                        for row in rows
                    ):
                        return CheckResult(
                            False, ViolationWitness(p_set, q_set, 0)
                        )
    return CheckResult(True)


def max_r(
    m: IncidenceMatrix, w: int, d: int, *, budget: int = DEFAULT_BUDGET
) -> int:
    """Largest r for which ``m`` passes is_cff(w, r, d); 0 if even r=1
    fails. The property is monotone (downward) in r, so an ascending scan
    with early exit is exact."""
    if w < 1:
        raise ValueError("w must be positive")
    best = 0
    for r in range(1, m.num_blocks - w + 1):
        params = CFFParams(w=w, r=r, d=d, N=m.num_points, T=m.num_blocks)
        if not is_cff(m, params, budget=budget):
            break
        best = r
    return best


def is_k_uniform(m: IncidenceMatrix, k: int) -> bool:
    """True iff every block has exactly k points."""
    return all(row.bit_count() == k for row in m.rows)


def check_claim(
    m: IncidenceMatrix,
    params: CFFParams,
    *,
    budget: int = DEFAULT_BUDGET,
    trials: int = 100_000,
    seed: int = 0,
) -> CheckResult:
    """Exhaustive check when it fits the budget, sampled otherwise.

    The result's ``method`` field records which ran.
    """
    if pair_count(params.T, params.w, params.r) <= budget:
        return is_cff(m, params, budget=budget)
    return is_cff_sampled(m, params, trials, seed)
