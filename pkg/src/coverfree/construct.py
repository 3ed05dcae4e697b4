"""Generators for cover-free families and the combinatorial gadgets behind
them: subset systems, orthogonal arrays, packing designs, Reed-Solomon
codes, modular hash families, recursive composition, and random sampling.

Every generator returns ``(matrix, claim)``; claims are what the checkers in
:mod:`coverfree.verify` are meant to confirm, and the probabilistic
generators refuse to return anything unverified.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from math import comb, factorial, gcd, log2

from .codes import Code, code_to_set_system
from .core import CFFParams, IncidenceMatrix
from .gf import field
from .verify import BudgetExceededError, DEFAULT_BUDGET, check_claim

__all__ = [
    "ConstructionFailedError",
    "OrthogonalArray",
    "PackingDesign",
    "SHFTable",
    "check_orthogonal_array",
    "check_packing",
    "check_separating",
    "oa_construct",
    "oa_to_packing",
    "packing_to_cff",
    "random_cff",
    "random_uniform_cff",
    "recursive_cff",
    "rs_cff",
    "shf_compose",
    "shf_modular",
    "sperner_cff",
    "trivial_ds",
]

DEFAULT_MAX_BLOCKS = 10**6


class ConstructionFailedError(RuntimeError):
    """All attempts of a randomized construction failed verification."""

    def __init__(self, attempts: int, message: str) -> None:
        super().__init__(message)
        self.attempts = attempts


# ---------------------------------------------------------------------------
# deterministic subset systems

def trivial_ds(n: int, i: int, j: int) -> IncidenceMatrix:
    """All i-subsets of an n-set as blocks, or all (n-j)-subsets when those
    are fewer: an (i, j)-disjunct system with min(C(n,i), C(n,j)) blocks
    over n points. Its transpose is an (i, j; 0)-cover-free family."""
    if i < 1 or j < 1:
        raise ValueError("i and j must be positive")
    if i + j > n:
        raise ValueError(f"need i + j <= n, got {i} + {j} > {n}")
    size = i if comb(n, i) <= comb(n, j) else n - j
    return IncidenceMatrix.from_blocks(n, combinations(range(n), size))


def sperner_cff(N: int) -> tuple[IncidenceMatrix, CFFParams]:
    """All floor(N/2)-subsets of N points: a (1, 1; 0)-cover-free family
    with C(N, floor(N/2)) blocks, which is the maximum possible for N
    points (no middle-layer subset contains another)."""
    if N < 2:
        raise ValueError("need at least two points")
    half = N // 2
    m = IncidenceMatrix.from_blocks(N, combinations(range(N), half))
    return m, CFFParams(w=1, r=1, d=0, N=N, T=comb(N, half), k=half)


# ---------------------------------------------------------------------------
# orthogonal arrays and packing designs

@dataclass(frozen=True)
class OrthogonalArray:
    """Strength-t array: k rows over s symbols with s^t columns such that
    any t rows, read down the columns, enumerate every t-tuple exactly
    once."""

    t: int
    k: int
    s: int
    rows: tuple[tuple[int, ...], ...]

    @property
    def num_columns(self) -> int:
        return len(self.rows[0])


def oa_construct(q: int, t: int) -> OrthogonalArray:
    """OA(t, q+1, q) by polynomial evaluation over GF(q).

    Column c encodes the polynomial whose base-q digits of c are its
    coefficients (degree 0 first). Row x holds f(x) for each field element
    x; the final row holds the coefficient of x^(t-1). Any t rows determine
    the polynomial uniquely (interpolation, with the leading coefficient
    substituting for one evaluation), which is the strength-t property.
    Valid for every 1 <= t <= q.
    """
    F = field(q)
    if not 1 <= t <= q:
        raise ValueError(f"need 1 <= t <= q, got t={t} with q={q}")
    cols = []
    for idx in range(q**t):
        coeffs = []
        rem = idx
        for _ in range(t):
            coeffs.append(rem % q)
            rem //= q
        cols.append(tuple(F.eval_poly(coeffs, x) for x in range(q)) + (coeffs[-1],))
    return OrthogonalArray(t=t, k=q + 1, s=q, rows=tuple(zip(*cols)))


def check_orthogonal_array(oa: OrthogonalArray) -> bool:
    """Exhaustive strength check; exponential in t, desk scale only."""
    want = oa.s**oa.t
    if len(oa.rows) != oa.k or any(len(row) != want for row in oa.rows):
        return False
    for selection in combinations(range(oa.k), oa.t):
        seen = set()
        for j in range(want):
            seen.add(tuple(oa.rows[i][j] for i in selection))
        if len(seen) != want:
            return False
    return True


@dataclass(frozen=True)
class PackingDesign:
    """t-(v, k, 1) packing: blocks of size k over v points with every
    t-subset of points inside at most one block."""

    v: int
    k: int
    t: int
    blocks: tuple[tuple[int, ...], ...]


def oa_to_packing(oa: OrthogonalArray) -> PackingDesign:
    """Column (s_0, ..., s_{k-1}) becomes the block {i*s + s_i : i < k} over
    k*s points (point group i holds the s possible symbols of row i). Two
    columns agree in fewer than t rows, so the blocks form a
    t-(k*s, k, 1) packing with s^t blocks."""
    blocks = tuple(
        tuple(i * oa.s + oa.rows[i][j] for i in range(oa.k))
        for j in range(oa.num_columns)
    )
    return PackingDesign(v=oa.k * oa.s, k=oa.k, t=oa.t, blocks=blocks)


def check_packing(p: PackingDesign) -> bool:
    """Exhaustive check of block shape and the at-most-once property."""
    seen: set[tuple[int, ...]] = set()
    for block in p.blocks:
        if len(set(block)) != p.k or any(not 0 <= x < p.v for x in block):
            return False
        for sub in combinations(sorted(block), p.t):
            if sub in seen:
                return False
            seen.add(sub)
    return True


def packing_to_cff(p: PackingDesign, d: int = 0) -> tuple[IncidenceMatrix, CFFParams]:
    """(1, r; d)-cover-free family from a t-(v, k, 1) packing, with
    r = floor((k-d-1)/(t-1)): distinct blocks share at most t-1 points, so
    r blocks can cover at most r*(t-1) <= k-d-1 points of another block."""
    if p.t < 2:
        raise ValueError("packing strength must be at least 2")
    if d < 0:
        raise ValueError("d must be non-negative")
    r = (p.k - d - 1) // (p.t - 1)
    if r < 1:
        raise ValueError(f"need k >= d + t for a usable family, got k={p.k}, d={d}, t={p.t}")
    m = IncidenceMatrix.from_blocks(p.v, p.blocks)
    return m, CFFParams(w=1, r=r, d=d, N=p.v, T=len(p.blocks), k=p.k)


# ---------------------------------------------------------------------------
# Reed-Solomon families

def rs_cff(
    q: int,
    N: int | None,
    r: int,
    d: int = 0,
    s: int = 0,
    *,
    max_blocks: int = DEFAULT_MAX_BLOCKS,
) -> tuple[IncidenceMatrix, CFFParams]:
    """(r; d)-cover-free family from a (shortened) Reed-Solomon code.

    The code evaluates all polynomials of degree < u over GF(q) at N_eff
    points, where u = floor((N_eff - d - 1)/r) + 1 is the largest exponent
    whose minimum distance D = N_eff - u + 1 still supports r (two words
    share at most u - 1 positions, so r blocks cover at most r*(u-1) <=
    N_eff - d - 1 points of another block). With s = 0 the length is N
    (at N = q+1 the final coordinate is the leading coefficient, the point
    at infinity); with s > 0 the code is shortened to N_eff = q + 1 - s by
    zeroing the top s coefficients and dropping s evaluation points, which
    keeps the distance of the length-(q+1) parent. Yields q**u blocks of
    size N_eff over q * N_eff points.
    """
    if r < 1:
        raise ValueError("r must be positive")
    if d < 0:
        raise ValueError("d must be non-negative")
    if s < 0:
        raise ValueError("s must be non-negative")
    if s == 0:
        if N is None:
            raise ValueError("N is required when s = 0")
        if not 2 <= N <= q + 1:
            raise ValueError(f"need 2 <= N <= q+1, got N={N} with q={q}")
        n_eff = N
    else:
        n_eff = q + 1 - s
        if N is not None and N != n_eff:
            raise ValueError(f"shortening by s={s} fixes the length to {n_eff}, got N={N}")
        if s + d > q:
            raise ValueError(f"need s + d <= q, got {s} + {d} > {q}")
        if n_eff < 2:
            raise ValueError(f"shortening by s={s} leaves length {n_eff} < 2")
    F = field(q)
    u = (n_eff - d - 1) // r + 1
    if u < 2:
        raise ValueError(
            f"no usable exponent: need length - d - 1 >= r, got length {n_eff}, d={d}, r={r}"
        )
    if u > q:
        raise ValueError(
            "degenerate exponent u > q (leading coefficients are invisible to "
            "evaluation); shorten the code or increase r or d"
        )
    if q**u > max_blocks:
        raise BudgetExceededError(f"{q**u} blocks exceed the cap of {max_blocks}")
    with_infinity = n_eff == q + 1
    n_finite = q if with_infinity else n_eff
    words = []
    for idx in range(q**u):
        coeffs = []
        rem = idx
        for _ in range(u):
            coeffs.append(rem % q)
            rem //= q
        word = [F.eval_poly(coeffs, x) for x in range(n_finite)]
        if with_infinity:
            word.append(coeffs[-1])
        words.append(tuple(word))
    code = Code(length=n_eff, q=q, words=tuple(words))
    m = code_to_set_system(code)
    return m, CFFParams(w=1, r=r, d=d, N=q * n_eff, T=q**u, k=n_eff)


# ---------------------------------------------------------------------------
# separating hash families and recursion

@dataclass(frozen=True)
class SHFTable:
    """A family of hash functions (rows) from column indices to
    0..num_symbols-1 such that any disjoint column sets of sizes w and r
    get disjoint images under at least one function."""

    num_symbols: int
    w: int
    r: int
    rows: tuple[tuple[int, ...], ...]

    @property
    def num_functions(self) -> int:
        return len(self.rows)

    @property
    def num_columns(self) -> int:
        return len(self.rows[0])


def shf_modular(n: int, w: int, r: int) -> SHFTable:
    """The w*r+1 functions f_c(x, y) = x + c*y mod n on the n^2 columns
    (x, y), column index x*n + y.

    Two distinct columns collide under at most one c in 0..w*r: subtracting
    two collisions gives (c - c')*(y - y') = 0 mod n, and 0 < |c - c'| <= wr
    is invertible because gcd(n, (w*r)!) = 1. A disjoint (w, r) column pair
    spoils at most w*r of the w*r+1 rows, leaving a separating one.
    """
    if w < 1 or r < 1:
        raise ValueError("w and r must be positive")
    if n < w + r:
        raise ValueError(f"need n >= w + r, got n={n}")
    if gcd(n, factorial(w * r)) != 1:
        raise ValueError(f"need gcd(n, (w*r)!) = 1, got n={n}, w*r={w * r}")
    rows = tuple(
        tuple((x + c * y) % n for x in range(n) for y in range(n))
        for c in range(w * r + 1)
    )
    return SHFTable(num_symbols=n, w=w, r=r, rows=rows)


def check_separating(shf: SHFTable) -> bool:
    """Exhaustive separation check over all disjoint (w, r) column pairs."""
    cols = range(shf.num_columns)
    for c1 in combinations(cols, shf.w):
        chosen = set(c1)
        rest = [c for c in cols if c not in chosen]
        for c2 in combinations(rest, shf.r):
            if not any(
                not ({row[c] for c in c1} & {row[c] for c in c2})
                for row in shf.rows
            ):
                return False
    return True


def shf_compose(
    base: IncidenceMatrix, base_claim: CFFParams, shf: SHFTable
) -> tuple[IncidenceMatrix, CFFParams]:
    """Substitute hash symbols with base blocks: column j of the table
    becomes the concatenation, over functions f, of base block f(j).

    A (w, r; d)-family on v points with m blocks plus a separating table
    with N functions over m symbols gives a (w, r; d)-family on v*N points
    with one block per table column: a separating row keeps the base
    residual intact inside its segment.
    """
    if shf.num_symbols != base.num_blocks:
        raise ValueError(
            f"table symbols ({shf.num_symbols}) must match base blocks ({base.num_blocks})"
        )
    if (shf.w, shf.r) != (base_claim.w, base_claim.r):
        raise ValueError(
            f"separation profile ({shf.w}, {shf.r}) does not match the base claim "
            f"({base_claim.w}, {base_claim.r})"
        )
    v = base.num_points
    new_rows = []
    for j in range(shf.num_columns):
        mask = 0
        for f_idx, row in enumerate(shf.rows):
            mask |= base.rows[row[j]] << (f_idx * v)
        new_rows.append(mask)
    m = IncidenceMatrix(v * shf.num_functions, tuple(new_rows))
    claim = CFFParams(
        w=base_claim.w,
        r=base_claim.r,
        d=base_claim.d,
        N=v * shf.num_functions,
        T=shf.num_columns,
    )
    return m, claim


def recursive_cff(
    w: int, r: int, d: int = 0, k: int = 0, *, max_blocks: int = DEFAULT_MAX_BLOCKS
) -> tuple[IncidenceMatrix, CFFParams]:
    """k rounds of hash-family composition over a subset-system base.

    The base ground size is n0 = min{n >= w+r : gcd(n, (w*r)!) = 1}; the
    transposed subset system is a (w, r; 0)-family with N0 =
    min(C(n0, w), C(n0, r)) points and n0 blocks, point-replicated d+1
    times to reach separation d. Each round squares the block count, giving
    a (w, r; d)-family with (w*r+1)^k * (d+1) * N0 points and n0^(2^k)
    blocks.
    """
    if w < 1 or r < 1:
        raise ValueError("w and r must be positive")
    if d < 0:
        raise ValueError("d must be non-negative")
    if k < 0:
        raise ValueError("k must be non-negative")
    wr_fact = factorial(w * r)
    n0 = w + r
    while gcd(n0, wr_fact) != 1:
        n0 += 1
    if n0 ** (2**k) > max_blocks:
        raise BudgetExceededError(
            f"{n0}^(2^{k}) blocks exceed the cap of {max_blocks}"
        )
    m = trivial_ds(n0, w, r).transpose()
    claim = CFFParams(w=w, r=r, d=0, N=m.num_points, T=n0)
    if d > 0:
        m = m.replicate_points(d + 1)
        claim = CFFParams(w=w, r=r, d=d, N=m.num_points, T=n0)
    for _ in range(k):
        m, claim = shf_compose(m, claim, shf_modular(m.num_blocks, w, r))
    return m, claim


# ---------------------------------------------------------------------------
# probabilistic constructions

def random_cff(
    w: int,
    r: int,
    d: int,
    T: int,
    seed: int = 0,
    max_attempts: int = 50,
    *,
    N: int | None = None,
    budget: int = DEFAULT_BUDGET,
    trials: int = 100_000,
) -> tuple[IncidenceMatrix, CFFParams]:
    """Random (w, r; d)-family with T blocks: every entry is 1 with
    probability w/(w+r), independently.

    N defaults to the smallest integer exceeding
    (w+r) * log2(T) / (-(d+1) * log2(p)) with
    p = 1 - w^w * r^r / (w+r)^(w+r), the positive-probability threshold for
    this density. Each attempt draws from its own stream keyed by (seed,
    attempt), so results are reproducible no matter how attempts are
    scheduled; every returned matrix has been verified (exhaustively within
    the pair budget, sampled above it).
    """
    if T < w + r:
        raise ValueError(f"need T >= w + r, got T={T}")
    if max_attempts < 1:
        raise ValueError("max_attempts must be positive")
    if N is None:
        p = 1.0 - (w**w * r**r) / float((w + r) ** (w + r))
        threshold = (w + r) * log2(T) / (-(d + 1) * log2(p))
        N = int(threshold) + 1
    claim = CFFParams(w=w, r=r, d=d, N=N, T=T)
    density = w / (w + r)
    for attempt in range(max_attempts):
        rng = random.Random(f"cff-random:{seed}:{attempt}")
        rows = tuple(
            sum(1 << j for j in range(N) if rng.random() < density)
            for _ in range(T)
        )
        m = IncidenceMatrix(N, rows)
        if check_claim(m, claim, budget=budget, trials=trials, seed=attempt):
            return m, claim
    raise ConstructionFailedError(
        max_attempts, f"no verified family in {max_attempts} attempts (seed={seed})"
    )


def random_uniform_cff(
    ell: int,
    w: int,
    r: int,
    T: int,
    seed: int = 0,
    max_attempts: int = 50,
    *,
    budget: int = DEFAULT_BUDGET,
    trials: int = 100_000,
) -> tuple[IncidenceMatrix, CFFParams]:
    """Random uniform (w, r; d)-family: k groups of ell points, one uniform
    point per group in every block, so blocks have exactly k points.

    With p = (ell-1)^r / ell^(w+r-1), the group count k is the least
    integer exceeding (8/p) * ((w+r) log2(T) - log2(w!) - log2(r!)) and the
    claimed separation is d = floor(p*k/2) + 1. Verified before returning,
    like :func:`random_cff`.
    """
    if ell < 2:
        raise ValueError("ell must be at least 2")
    if T < w + r:
        raise ValueError(f"need T >= w + r, got T={T}")
    if max_attempts < 1:
        raise ValueError("max_attempts must be positive")
    p = (ell - 1) ** r / float(ell ** (w + r - 1))
    k = int((8.0 / p) * ((w + r) * log2(T) - log2(factorial(w)) - log2(factorial(r)))) + 1
    d = int(p * k / 2) + 1
    N = k * ell
    claim = CFFParams(w=w, r=r, d=d, N=N, T=T, k=k)
    for attempt in range(max_attempts):
        rng = random.Random(f"cff-uniform:{seed}:{attempt}")
        rows = tuple(
            sum(1 << (g * ell + rng.randrange(ell)) for g in range(k))
            for _ in range(T)
        )
        m = IncidenceMatrix(N, rows)
        if check_claim(m, claim, budget=budget, trials=trials, seed=attempt):
            return m, claim
    raise ConstructionFailedError(
        max_attempts, f"no verified family in {max_attempts} attempts (seed={seed})"
    )
