"""Size bounds for cover-free families.

Upper bounds on the block count T, lower bounds on the point count N, an
entropy-recurrence rate bound, probabilistic existence thresholds, and an
exact brute-force minimizer for tiny instances. All logarithms are base 2
and binomial coefficients are exact big-integer values.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from math import comb, log2

import numpy as np

from .core import CFFParams, IncidenceMatrix
from .verify import is_cff

__all__ = [
    "BoundEntry",
    "BoundReport",
    "DEFAULT_C",
    "RateComparison",
    "bound_2d_T",
    "drr_rate",
    "existence_threshold_N",
    "full_report",
    "gbound_T",
    "lower_bounds_N",
    "min_N_bruteforce",
    "rate_asymptotic",
    "rate_compare",
    "sperner_T",
    "uniform_T",
]

# Constant in front of the quadratic lower bounds; 1/8 is the best
# published value, overridable everywhere it appears.
DEFAULT_C = 0.125


# ---------------------------------------------------------------------------
# upper bounds on T

def sperner_T(N: int) -> int:
    """Largest T of any (1, 1; 0)-cover-free family on N points: the width
    C(N, floor(N/2)) of the subset lattice (an antichain is exactly such a
    family)."""
    if N < 2:
        raise ValueError("N must be at least 2")
    return comb(N, N // 2)


def uniform_T(N: int, k: int, r: int) -> int:
    """Upper bound on T for k-uniform (1, r; 0)-families on N points:
    floor(C(N, m) / C(k-1, m-1)) with m = ceil(k/r). Each block owns at
    least C(k-1, m-1) m-subsets no other block contains, and only C(N, m)
    m-subsets exist."""
    if not 1 <= k <= N:
        raise ValueError(f"need 1 <= k <= N, got k={k}, N={N}")
    if r < 1:
        raise ValueError("r must be positive")
    m = -(-k // r)
    return comb(N, m) // comb(k - 1, m - 1)


def gbound_T(N: int, r: int, d: int = 0) -> int:
    """Largest admissible T for a (1, r; d)-family on N points:
    T <= r + C(N, m) - 1 with m = ceil(2(N - r - d(r+1)) / (r(r+1))).

    Requires N > r + d*(r+1); below that the bound is vacuous and a
    ValueError is raised.
    """
    if r < 1:
        raise ValueError("r must be positive")
    if d < 0:
        raise ValueError("d must be non-negative")
    if N <= r + d * (r + 1):
        raise ValueError(
            f"bound vacuous: need N > r + d*(r+1), got N={N} <= {r + d * (r + 1)}"
        )
    m = -(-2 * (N - r - d * (r + 1)) // (r * (r + 1)))
    return r + comb(N, m) - 1


def bound_2d_T(N: int, d: int) -> int:
    """Strict upper limit on T for (1, 2; d)-families, d >= 1: with t* the
    least t satisfying N <= 5t + 2 + d(d-1)/(t+d), every T satisfies
    T < floor(C(N, t*) / C(2t* + d - 1, t*))."""
    if d < 1:
        raise ValueError("d must be at least 1")
    if N < 1:
        raise ValueError("N must be positive")
    t = 1
    # integer form of N <= 5t + 2 + d(d-1)/(t+d)
    while (N - 5 * t - 2) * (t + d) > d * (d - 1):
        t += 1
    return comb(N, t) // comb(2 * t + d - 1, t)


# ---------------------------------------------------------------------------
# lower bounds on N

@dataclass(frozen=True)
class BoundEntry:
    # value stays an exact int for the counting bounds on T
    name: str
    direction: str
    value: int | float | None
    applicable: bool
    asymptotic: bool = False
    note: str = ""


@dataclass(frozen=True)
class BoundReport:
    w: int
    r: int
    d: int
    T: int
    c: float
    entries: tuple[BoundEntry, ...]

    def best_lower_bound(self) -> BoundEntry | None:
        """Largest applicable, non-asymptotic lower bound on N."""
        candidates = [
            e
            for e in self.entries
            if e.applicable
            and not e.asymptotic
            and e.direction == "lower bound on N"
            and e.value is not None
        ]
        return max(candidates, key=lambda e: e.value) if candidates else None

    def entry(self, name: str) -> BoundEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)


def lower_bounds_N(
    w: int, r: int, d: int, T: int, c: float = DEFAULT_C, eps: float = 0.0
) -> BoundReport:
    """Evaluate the known lower bounds on the point count N of any
    (w, r; d)-cover-free family with T blocks.

    Bounds whose hypotheses fail at these parameters are reported with
    ``applicable=False`` rather than dropped; asymptotic bounds (valid for
    sufficiently large T only) keep their value but are flagged and never
    win :meth:`BoundReport.best_lower_bound`.
    """
    if w < 1 or r < 1:
        raise ValueError("w and r must be positive")
    if d < 0:
        raise ValueError("d must be non-negative")
    if T < w + r:
        raise ValueError(f"need T >= w + r, got T={T}")
    if not 0 < c:
        raise ValueError("c must be positive")
    entries: list[BoundEntry] = []
    direction = "lower bound on N"

    def add(name, value, applicable, asymptotic=False, note=""):
        entries.append(
            BoundEntry(
                name=name,
                direction=direction,
                value=value,
                applicable=applicable,
                asymptotic=asymptotic,
                note=note,
            )
        )

    # quadratic bound for w = 1
    w1_ok = w == 1 and r >= 2
    add(
        "w1",
        c * r * r / log2(r) * log2(T) if w1_ok else None,
        w1_ok,
        note="w=1 only; needs r >= 2",
    )

    # counting bound r*(w log T - log r - w log w)
    add("dfft", r * (w * log2(T) - log2(r) - w * log2(w)), True)

    # binomial-coefficient bound, finite form
    add("engel1", comb(w + r - 1, w) * log2(T - r - w + 2), True)

    # its asymptotic strengthening; 0^0 = 1 at w = 1 or r = 1
    def zz(base: int, exp: int) -> float:
        return 1.0 if exp == 0 else float(base**exp)

    engel_coeff = zz(w + r - 2, w + r - 2) / (zz(w - 1, w - 1) * zz(r - 1, r - 1))
    add(
        "engel",
        (1.0 - eps) * engel_coeff * log2(T - r - w + 2),
        True,
        asymptotic=True,
        note="holds for sufficiently large T",
    )

    # general quadratic-family bounds; hypotheses need w + r > 2
    pair_ok = w + r > 2
    add(
        "nbound2",
        2.0 * c * comb(w + r, w) / log2(w + r) * log2(T) if pair_ok else None,
        pair_ok,
        note="needs w + r > 2",
    )
    add(
        "nbound3",
        0.7 * c * comb(w + r, w) * (w + r) / log2(comb(w + r, w)) * log2(T)
        if pair_ok
        else None,
        pair_ok,
        asymptotic=True,
        note="needs w + r > 2; holds for sufficiently large T",
    )

    # d-aware refinements
    rd_ok = w == 1 and r > 1 and d >= 1
    add(
        "1rd",
        c * (r * r / log2(r) * log2(T) + (d - 1) * r) if rd_ok else None,
        rd_ok,
        note="w=1 only; needs r >= 2 and d >= 1",
    )

    # T >= w + r and r > w give T - 2w >= 1, so the logs are defined
    sw2_ok = r > w >= 1 and d >= 1
    if sw2_ok:
        shrink = 1.0
        for i in range(w):
            shrink *= 1.0 - 1.0 / (T - 2 * i)
        rw = r - w + 1
        sw2_val = (
            c
            * 4.0 ** (w - 1)
            * shrink
            * (rw * rw / log2(rw) * log2(T - 2 * w) + (d - 1) * rw)
        )
    else:
        sw2_val = None
    add("sw2", sw2_val, sw2_ok, note="needs r > w >= 1 and d >= 1")

    extra = 0.5 * c * comb(w + r, w) * (d - 1)
    add(
        "nbound2-d",
        (2.0 * c * comb(w + r, w) / log2(w + r) * log2(T) + extra) if pair_ok else None,
        pair_ok,
        note="needs w + r > 2; (d-1) term goes negative at d = 0",
    )
    add(
        "nbound3-d",
        (0.7 * c * comb(w + r, w) * (w + r) / log2(comb(w + r, w)) * log2(T) + extra)
        if pair_ok
        else None,
        pair_ok,
        asymptotic=True,
        note="needs w + r > 2; holds for sufficiently large T",
    )

    return BoundReport(w=w, r=r, d=d, T=T, c=c, entries=tuple(entries))


def existence_threshold_N(w: int, r: int, d: int, T: int) -> float:
    """Point count above which a random-density (w, r; d)-family with T
    blocks exists with positive probability: the smaller of
    (w+r) log2(T) and (w+r-1) log2(2T), divided by -(d+1) log2(p) with
    p = 1 - w^w r^r / (w+r)^(w+r)."""
    if w < 1 or r < 1:
        raise ValueError("w and r must be positive")
    if d < 0:
        raise ValueError("d must be non-negative")
    if T < w + r:
        raise ValueError(f"need T >= w + r, got T={T}")
    p = 1.0 - (w**w * r**r) / float((w + r) ** (w + r))
    denom = -(d + 1) * log2(p)
    return min((w + r) * log2(T), (w + r - 1) * log2(2 * T)) / denom


# ---------------------------------------------------------------------------
# asymptotic and entropy rate bounds

def rate_asymptotic(r: int, d: int, N: int, variant: str = "drr") -> float:
    """Asymptotic upper bound on the rate log2(T)/N of (1, r; d)-families:
    ``drr`` gives (2 - d*r/N) log2(r) / r^2, ``gbound`` gives
    4 (1 - d*r/N) log2(r) / r^2. At d = 0 the second is exactly twice the
    first."""
    if r < 2:
        raise ValueError("r must be at least 2")
    if d < 0 or N < 1:
        raise ValueError("need d >= 0 and N >= 1")
    frac = d * r / N
    if variant == "drr":
        return (2.0 - frac) * log2(r) / (r * r)
    if variant == "gbound":
        return 4.0 * (1.0 - frac) * log2(r) / (r * r)
    raise ValueError(f"unknown variant {variant!r}")


def _entropy(x: float) -> float:
    if x <= 0.0 or x >= 1.0:
        return 0.0
    return -x * math.log2(x) - (1.0 - x) * math.log2(1.0 - x)


def _entropy_vec(x: np.ndarray) -> np.ndarray:
    out = np.zeros_like(x)
    inside = (x > 0.0) & (x < 1.0)
    xi = x[inside]
    out[inside] = -xi * np.log2(xi) - (1.0 - xi) * np.log2(1.0 - xi)
    return out


def _u1(e: float) -> float:
    if e >= 0.25:
        return 0.0
    return _entropy(0.5 * (1.0 - math.sqrt(8.0 * e * (1.0 - 2.0 * e))))


def _phi(v: float, e: float, r: int) -> float:
    ve = v + e
    inner = v / (ve * r) if ve > 0.0 else 0.0
    return _entropy(v / r) - ve * _entropy(inner)


def _phi_vec(v: np.ndarray, e: float, r: int) -> np.ndarray:
    ve = v + e
    inner = np.divide(v, ve * r, out=np.zeros_like(v), where=ve > 0.0)
    return _entropy_vec(v / r) - ve * _entropy_vec(inner)


_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0
_GRID = 2048


def _inner_max(e: float, r: int, vmax: float, tol: float) -> float:
    """max of phi over [0, vmax]: dense grid, then golden-section around
    the best grid point."""
    if vmax <= 0.0:
        return 0.0
    grid = np.linspace(0.0, vmax, _GRID)
    vals = _phi_vec(grid, e, r)
    i = int(np.argmax(vals))
    best = float(vals[i])
    a = float(grid[max(i - 1, 0)])
    b = float(grid[min(i + 1, _GRID - 1)])
    x1 = b - _GOLDEN * (b - a)
    x2 = a + _GOLDEN * (b - a)
    f1, f2 = _phi(x1, e, r), _phi(x2, e, r)
    while b - a > tol:
        if f1 >= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - _GOLDEN * (b - a)
            f1 = _phi(x1, e, r)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + _GOLDEN * (b - a)
            f2 = _phi(x2, e, r)
    return max(best, f1, f2)


def _v_fixed_point(r: int, e: float, u_prev: float, tol: float) -> float:
    """Unique V solving V = max over v in [0, 1 - V/U_{r-1} - e] of phi(v).

    The right side is nonincreasing in V while the left side increases, so
    bisection on their difference converges to the single crossing.
    """
    lo, hi = 0.0, 1.0
    iterations = 0
    while hi - lo > tol:
        iterations += 1
        if iterations > 200:
            raise ArithmeticError(
                f"fixed-point bisection did not converge to {tol} (r={r}, e={e})"
            )
        mid = 0.5 * (lo + hi)
        g = _inner_max(e, r, 1.0 - mid / u_prev - e, tol)
        if g > mid:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def drr_rate(r: int, e: float, tol: float = 1e-9) -> float:
    """Entropy-recurrence upper bound on the rate log2(T)/N of (1, r; d)
    cover-free families with e = d/N.

    U_1(e) = h((1/2)(1 - sqrt(8e(1-2e)))) for e < 1/4 and 0 beyond; for
    j >= 2, U_j = min(1 - e/e_j, U_1/j, V_j) with e_j = j^j/(j+1)^(j+1)
    and V_j the fixed point of
    V = max over v in [0, 1 - V/U_{j-1} - e] of h(v/j) - (v+e) h(v/((v+e)j)).
    Computed bottom-up; the inner maximum uses a 2048-point grid plus
    golden-section refinement to ``tol``.
    """
    if r < 1:
        raise ValueError("r must be positive")
    if not 0.0 <= e < 1.0:
        raise ValueError("e must lie in [0, 1)")
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    e_r = r**r / float((r + 1) ** (r + 1))
    if e >= e_r:
        return 0.0
    u = _u1(e)
    u1 = u
    for j in range(2, r + 1):
        e_j = j**j / float((j + 1) ** (j + 1))
        v_j = _v_fixed_point(j, e, u, tol)
        u = min(1.0 - e / e_j, u1 / j, v_j)
    return u


# ---------------------------------------------------------------------------
# exact minimizer and rate comparison

def min_N_bruteforce(w: int, r: int, T: int, cap_N: int = 8) -> int | None:
    """Least N <= cap_N admitting a (w, r; 0)-cover-free family with T
    blocks, by exhaustive search over row-sorted matrices; None when every
    N up to the cap fails.

    w = 0 or r = 0 short-circuit to 1 (an empty intersection is the whole
    ground set, an empty union is empty; one point satisfies either side).
    Search is limited to T <= 5 and cap_N <= 8. For w = 1 duplicate blocks
    always violate, so only strictly increasing row tuples are tried.
    """
    if w < 0 or r < 0:
        raise ValueError("w and r must be non-negative")
    if w == 0 or r == 0:
        return 1
    if T > 5 or cap_N > 8:
        raise ValueError(f"search limited to T <= 5 and cap_N <= 8, got T={T}, cap_N={cap_N}")
    if T < w + r:
        raise ValueError(f"need T >= w + r, got T={T}")
    for N in range(1, cap_N + 1):
        claim = CFFParams(w=w, r=r, d=0, N=N, T=T)
        chooser = combinations if w == 1 else combinations_with_replacement
        for rows in chooser(range(1 << N), T):
            if is_cff(IncidenceMatrix(N, rows), claim):
                return N
    return None


@dataclass(frozen=True)
class RateComparison:
    """Rates log2(T)/N of the code-based families at one parameter point.

    ``rs`` and ``shortened`` live over GF(q); ``rs_square`` and ``ag`` are
    the competing rates over GF(q^2) (the towered-curve code family exists
    over square fields). ``ag_code_points`` is q^2 * s(n) with
    s(n) = q^(n-1) (q^2 - 1), the ground size the tower offers at level n.
    """

    q: int
    r: int
    d: int
    s: int
    n: int
    rs: float
    shortened: float
    rs_square: float
    ag: float
    shortening_helps: bool
    better_family: str
    ag_code_points: int


def rate_compare(q: int, r: int, d: int = 0, s: int = 1, n: int = 3) -> RateComparison:
    """Compare the rate formulas of the Reed-Solomon family, its shortened
    variant, and the algebraic-geometry family over GF(q^2).

    rs        = (q + r - d)     / (r q (q+1))      * log2(q)
    shortened = (q + r - d - s) / (r q (q+1-s))    * log2(q)
    rs_square = (q^2 + r - d)   / (r q^2 (q^2+1))  * log2(q^2)
    ag        = (q - r - 1)     / (r q^2 (q-1))    * log2(q^2)

    Shortening helps exactly when r > d + 1; the AG family wins when r is
    small against d (its rate does not decay with d).
    """
    if q < 2:
        raise ValueError("q must be at least 2")
    if r < 1:
        raise ValueError("r must be positive")
    if d < 0:
        raise ValueError("d must be non-negative")
    # pure formula evaluation: only keep the shortened length positive
    if not 0 <= s <= q:
        raise ValueError(f"need 0 <= s <= q, got s={s}")
    if n < 1:
        raise ValueError("n must be positive")
    lg = log2(q)
    rs = (q + r - d) / (r * q * (q + 1)) * lg
    shortened = (q + r - d - s) / (r * q * (q + 1 - s)) * lg
    rs_square = (q * q + r - d) / (r * q * q * (q * q + 1)) * (2.0 * lg)
    ag = (q - r - 1) / (r * q * q * (q - 1)) * (2.0 * lg)
    return RateComparison(
        q=q,
        r=r,
        d=d,
        s=s,
        n=n,
        rs=rs,
        shortened=shortened,
        rs_square=rs_square,
        ag=ag,
        shortening_helps=shortened > rs,
        better_family="algebraic-geometry" if ag > rs_square else "reed-solomon",
        ag_code_points=q * q * (q ** (n - 1)) * (q * q - 1),
    )


# ---------------------------------------------------------------------------
# combined report

def full_report(
    w: int,
    r: int,
    d: int,
    T: int,
    N: int | None = None,
    k: int | None = None,
    c: float = DEFAULT_C,
) -> BoundReport:
    """Everything :func:`lower_bounds_N` reports, plus the existence
    threshold, plus (when N is given) the applicable upper bounds on T and
    the rate bounds at e = d/N."""
    base = lower_bounds_N(w, r, d, T, c)
    entries = list(base.entries)
    entries.append(
        BoundEntry(
            name="existence",
            direction="sufficient N (existence)",
            value=existence_threshold_N(w, r, d, T),
            applicable=True,
            note="a random family exists above this N",
        )
    )
    if N is not None:
        up = "upper bound on T"
        if w == 1 and r == 1 and d == 0:
            entries.append(
                BoundEntry("sperner", up, sperner_T(N), True, note="exact maximum")
            )
        if w == 1 and N > r + d * (r + 1):
            entries.append(
                BoundEntry("gbound", up, gbound_T(N, r, d), True, note="largest admissible T")
            )
        if w == 1 and r == 2 and d >= 1:
            entries.append(
                BoundEntry("2d", up, bound_2d_T(N, d), True, note="strict: T < value")
            )
        # a (1, r; d)-family is in particular (1, r; 0), so this applies
        # for every d
        if w == 1 and k is not None and 1 <= k <= N:
            entries.append(
                BoundEntry("uniform", up, uniform_T(N, k, r), True, note=f"k={k}-uniform blocks")
            )
        if w == 1:
            entries.append(
                BoundEntry(
                    "drr-rate",
                    "upper bound on rate",
                    drr_rate(r, d / N),
                    True,
                    note="rate = log2(T)/N at e = d/N",
                )
            )
        if w == 1 and r >= 2:
            entries.append(
                BoundEntry(
                    "rate-drr",
                    "upper bound on rate",
                    rate_asymptotic(r, d, N, "drr"),
                    True,
                    asymptotic=True,
                )
            )
            entries.append(
                BoundEntry(
                    "rate-gbound",
                    "upper bound on rate",
                    rate_asymptotic(r, d, N, "gbound"),
                    True,
                    asymptotic=True,
                )
            )
    return BoundReport(w=w, r=r, d=d, T=T, c=c, entries=tuple(entries))
