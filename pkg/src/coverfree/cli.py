"""Command-line front end.

Subcommands: ``construct`` (build, check, and write a matrix file),
``verify`` (re-check a file's claim or measure its best r), ``bounds``
(evaluate the size bounds at a parameter point), ``simulate`` (Monte-Carlo
group-testing rounds on a file), ``oracle`` (tiny exhaustive minimizer).

Exit status: 0 success, 1 a property check failed (witness on stderr),
2 bad usage, 3 precondition violation, 4 evaluation budget exceeded.
Every run echoes its fully resolved parameters, defaults included, so any
output can be reproduced from its log line.
"""

from __future__ import annotations

import argparse
import sys

from . import bounds as bnd
from . import construct as cons
from .core import CFFParams, read_matrix_file, write_matrix_file
from .grouptest import simulate
from .verify import (
    DEFAULT_BUDGET,
    BudgetExceededError,
    ViolationWitness,
    check_claim,
    is_cff_sampled,
    max_r,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_PRECONDITION = 3
EXIT_BUDGET = 4


class UsageError(Exception):
    """Flag combination that argparse alone cannot reject."""


def _echo(kind: str, pairs: list[tuple[str, object]]) -> None:
    print(kind + " " + " ".join(f"{k}={v}" for k, v in pairs))


def _print_witness(witness: ViolationWitness | None) -> None:
    if witness is None:
        return
    b = ",".join(map(str, witness.b_rows))
    a = ",".join(map(str, witness.a_rows)) if witness.a_rows else "-"
    print(
        f"witness: intersect blocks {{{b}}}, subtract blocks {{{a}}}, "
        f"residual {witness.residual}",
        file=sys.stderr,
    )


def _require(args: argparse.Namespace, names: list[str], method: str) -> None:
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        flags = ", ".join("--" + n.replace("_", "-") for n in missing)
        raise UsageError(f"method {method} requires {flags}")


# ---------------------------------------------------------------------------
# construct

def _build_matrix(args: argparse.Namespace):
    method = args.method
    if method == "trivial":
        _require(args, ["n", "w", "r"], method)
        base = cons.trivial_ds(args.n, args.w, args.r)
        m = base.transpose()
        claim = CFFParams(w=args.w, r=args.r, d=0, N=m.num_points, T=m.num_blocks)
        echo = [("n", args.n), ("w", args.w), ("r", args.r)]
    elif method == "sperner":
        _require(args, ["n"], method)
        m, claim = cons.sperner_cff(args.n)
        echo = [("n", args.n)]
    elif method == "oa":
        _require(args, ["q", "t"], method)
        oa = cons.oa_construct(args.q, args.t)
        m, claim = cons.packing_to_cff(cons.oa_to_packing(oa), args.d)
        echo = [("q", args.q), ("t", args.t), ("d", args.d)]
    elif method == "rs":
        _require(args, ["q", "r"], method)
        if args.n is None and args.s == 0:
            raise UsageError("method rs requires --n (or --s for a shortened code)")
        m, claim = cons.rs_cff(args.q, args.n, args.r, args.d, args.s)
        echo = [("q", args.q), ("n", claim.k), ("r", args.r), ("d", args.d), ("s", args.s)]
    elif method == "shf-recursive":
        _require(args, ["w", "r"], method)
        m, claim = cons.recursive_cff(args.w, args.r, args.d, args.levels)
        echo = [("w", args.w), ("r", args.r), ("d", args.d), ("levels", args.levels)]
    elif method == "random":
        _require(args, ["w", "r", "T"], method)
        m, claim = cons.random_cff(
            args.w,
            args.r,
            args.d,
            args.T,
            seed=args.seed,
            max_attempts=args.max_attempts,
            N=args.n,
            budget=args.budget,
            trials=args.trials,
        )
        echo = [
            ("w", args.w),
            ("r", args.r),
            ("d", args.d),
            ("T", args.T),
            ("N", claim.N),
            ("max-attempts", args.max_attempts),
        ]
    elif method == "random-uniform":
        _require(args, ["ell", "w", "r", "T"], method)
        m, claim = cons.random_uniform_cff(
            args.ell,
            args.w,
            args.r,
            args.T,
            seed=args.seed,
            max_attempts=args.max_attempts,
            budget=args.budget,
            trials=args.trials,
        )
        echo = [
            ("ell", args.ell),
            ("w", args.w),
            ("r", args.r),
            ("T", args.T),
            ("max-attempts", args.max_attempts),
        ]
    else:  # pragma: no cover - argparse choices guard this
        raise UsageError(f"unknown method {method}")
    return m, claim, echo


def _cmd_construct(args: argparse.Namespace) -> int:
    m, claim, echo = _build_matrix(args)
    echo = [("method", args.method)] + echo + [
        ("seed", args.seed),
        ("budget", args.budget),
        ("trials", args.trials),
    ]
    _echo("construct", echo)
    _echo(
        "claim",
        [("w", claim.w), ("r", claim.r), ("d", claim.d), ("N", claim.N), ("T", claim.T)],
    )
    result = check_claim(m, claim, budget=args.budget, trials=args.trials, seed=args.seed)
    print(f"check {result.method} {'ok' if result.ok else 'FAILED'}")
    if not result.ok:
        _print_witness(result.witness)
        return EXIT_CHECK_FAILED
    write_matrix_file(args.out, m, claim)
    print(f"wrote {args.out}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify

def _cmd_verify(args: argparse.Namespace) -> int:
    m, header = read_matrix_file(args.file)
    if args.max_r:
        w = args.w if args.w is not None else (header.w if header else 1)
        d = args.d if args.d is not None else (header.d if header else 0)
        _echo(
            "verify",
            [("file", args.file), ("mode", "max-r"), ("w", w), ("d", d), ("budget", args.budget)],
        )
        print(f"max_r {max_r(m, w, d, budget=args.budget)}")
        return EXIT_OK
    w = args.w if args.w is not None else (header.w if header else None)
    r = args.r if args.r is not None else (header.r if header else None)
    d = args.d if args.d is not None else (header.d if header else 0)
    if w is None or r is None:
        raise UsageError("file carries no claim; pass --w and --r (and --d)")
    claim = CFFParams(w=w, r=r, d=d, N=m.num_points, T=m.num_blocks)
    _echo(
        "verify",
        [
            ("file", args.file),
            ("w", w),
            ("r", r),
            ("d", d),
            ("N", claim.N),
            ("T", claim.T),
            ("sampled", args.sampled),
            ("trials", args.trials),
            ("seed", args.seed),
            ("budget", args.budget),
        ],
    )
    if args.sampled:
        result = is_cff_sampled(m, claim, args.trials, args.seed)
    else:
        result = check_claim(m, claim, budget=args.budget, trials=args.trials, seed=args.seed)
    print(f"check {result.method} {'ok' if result.ok else 'FAILED'}")
    if not result.ok:
        _print_witness(result.witness)
        return EXIT_CHECK_FAILED
    return EXIT_OK


# ---------------------------------------------------------------------------
# bounds

def _format_value(value: int | float | None) -> str:
    if value is None:
        return "-"
    if isinstance(value, int):
        return str(value)
    return f"{value:.6f}"


def _cmd_bounds(args: argparse.Namespace) -> int:
    report = bnd.full_report(args.w, args.r, args.d, args.T, N=args.n, k=args.k, c=args.c)
    _echo(
        "bounds",
        [
            ("w", args.w),
            ("r", args.r),
            ("d", args.d),
            ("T", args.T),
            ("N", args.n if args.n is not None else "-"),
            ("k", args.k if args.k is not None else "-"),
            ("c", args.c),
        ],
    )
    best = report.best_lower_bound()
    rows = [("bound", "direction", "value", "applicable", "note")]
    for e in report.entries:
        note = e.note
        if e.asymptotic:
            note = (note + "; " if note else "") + "asymptotic - indicative only"
        if best is not None and e is best:
            note = (note + "; " if note else "") + "best lower bound"
        rows.append(
            (e.name, e.direction, _format_value(e.value), "yes" if e.applicable else "no", note)
        )
    widths = [max(len(row[i]) for row in rows) for i in range(4)]
    for row in rows:
        cells = [row[i].ljust(widths[i]) for i in range(4)] + [row[4]]
        print("  ".join(cells).rstrip())
    if args.csv:
        with open(args.csv, "w", encoding="ascii", newline="") as fh:
            fh.write("bound,direction,value,applicable\n")
            for e in report.entries:
                value = "" if e.value is None else repr(e.value)
                fh.write(f"{e.name},{e.direction},{value},{'yes' if e.applicable else 'no'}\n")
        print(f"wrote {args.csv}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# simulate and oracle

def _cmd_simulate(args: argparse.Namespace) -> int:
    m, header = read_matrix_file(args.file)
    if header is None:
        raise UsageError("file carries no claim; simulate needs the claimed r and d")
    stats = simulate(
        m,
        header.r,
        header.d,
        args.trials,
        seed=args.seed,
        max_errors=args.errors,
    )
    _echo(
        "simulate",
        [
            ("file", args.file),
            ("r", header.r),
            ("d", header.d),
            ("trials", args.trials),
            ("seed", args.seed),
            ("tolerance", stats.tolerance),
            ("max-errors", stats.max_errors),
        ],
    )
    print(f"exact {stats.exact}/{stats.trials} rate={stats.exact_rate:.4f}")
    print(f"false_positives {stats.false_positives}")
    print(f"false_negatives {stats.false_negatives}")
    return EXIT_OK


def _cmd_oracle(args: argparse.Namespace) -> int:
    if not args.min_n:
        raise UsageError("oracle requires --min-n")
    _echo(
        "oracle",
        [("mode", "min-n"), ("w", args.w), ("r", args.r), ("T", args.T), ("cap", args.cap)],
    )
    result = bnd.min_N_bruteforce(args.w, args.r, args.T, cap_N=args.cap)
    if result is None:
        print(f"min_N exceeds cap {args.cap}")
    else:
        print(f"min_N {result}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser

def _add_check_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed", type=int, default=0, help="random seed (default 0)")
    p.add_argument(
        "--budget",
        type=int,
        default=DEFAULT_BUDGET,
        help="max (B, A) evaluations for exhaustive checking",
    )
    p.add_argument(
        "--trials",
        type=int,
        default=100_000,
        help="sample count when checking falls back to sampling",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coverfree",
        description="Construct, verify, bound, and use cover-free families.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a family, check it, write it to a file")
    p.add_argument(
        "--method",
        required=True,
        choices=["trivial", "sperner", "oa", "rs", "shf-recursive", "random", "random-uniform"],
    )
    p.add_argument("--out", required=True, help="output matrix file")
    p.add_argument("--n", type=int, help="points (trivial/sperner) or code length (rs)")
    p.add_argument("--w", type=int, help="intersected-block count of the claim")
    p.add_argument("--r", type=int, help="subtracted-block count of the claim")
    p.add_argument("--d", type=int, default=0, help="claimed residual slack (default 0)")
    p.add_argument("--q", type=int, help="field order (oa/rs)")
    p.add_argument("--t", type=int, help="orthogonal-array strength (oa)")
    p.add_argument("--s", type=int, default=0, help="shortening amount (rs, default 0)")
    p.add_argument("--levels", type=int, default=1, help="composition rounds (shf-recursive)")
    p.add_argument("--T", type=int, help="block count (random methods)")
    p.add_argument("--ell", type=int, help="group size (random-uniform)")
    p.add_argument("--max-attempts", type=int, default=50)
    _add_check_flags(p)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("verify", help="re-check a matrix file")
    p.add_argument("file")
    p.add_argument("--w", type=int, help="override the claimed w")
    p.add_argument("--r", type=int, help="override the claimed r")
    p.add_argument("--d", type=int, help="override the claimed d")
    p.add_argument("--max-r", action="store_true", help="measure the best r instead")
    p.add_argument("--sampled", action="store_true", help="force Monte-Carlo checking")
    _add_check_flags(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("bounds", help="evaluate size bounds at a parameter point")
    p.add_argument("--w", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--T", type=int, required=True)
    p.add_argument("--d", type=int, default=0)
    p.add_argument("--n", "--N", type=int, dest="n", help="point count, enables bounds on T")
    p.add_argument("--k", type=int, help="uniform block size, enables the uniform bound")
    p.add_argument("--c", type=float, default=bnd.DEFAULT_C, help="bound constant (default 0.125)")
    p.add_argument("--csv", help="also write the entries as CSV")
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("simulate", help="Monte-Carlo group testing on a matrix file")
    p.add_argument("file")
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--errors", type=int, help="max injected outcome flips per trial")
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("oracle", help="exhaustive minimum-N search at tiny scale")
    p.add_argument("--min-n", action="store_true", help="find the least workable point count")
    p.add_argument("--w", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--T", type=int, required=True)
    p.add_argument("--cap", type=int, default=8, help="largest N to try (default 8)")
    p.set_defaults(func=_cmd_oracle)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except cons.ConstructionFailedError as exc:
        print(f"construction failed: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
