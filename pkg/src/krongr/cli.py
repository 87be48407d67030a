"""``kron``: command-line front end.

Exit codes: 0 success, 1 a verify suite failed, 2 bad arguments or violated
preconditions, 3 a budget was exceeded, 4 malformed input file, 5 any other
mathematical refusal (for instance a decomposable module given to the oracle).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import fib3, grsym
from .dimvec import DimVec, KroneckerContext, coxeter_apply, positive_roots
from .errors import BudgetExceeded, KronError, PreconditionError, SchemaError
from .repkit import DEFAULT_END_BUDGET, DEFAULT_LATTICE_BUDGET, build_canonical, load, random_indecomposable
from .repkit.oracle import METHODS, oracle_run
from .repkit.samples import find_x2, preinjective_rep, preprojective_rep

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_INPUT = 4
EXIT_MATH = 5

BUILTINS = ("P1", "P2", "P3", "Q0", "Q1", "Q2", "X2", "OneC")


def _dim(text: str) -> DimVec:
    try:
        a, b = (int(x, 10) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a,b with integers, got {text!r}") from None
    return DimVec(a, b)


def _k_range(text: str) -> range:
    """``-2..2`` or a single integer."""
    try:
        if ".." in text:
            lo, hi = text.split("..")
            return range(int(lo), int(hi) + 1)
        k = int(text)
        return range(k, k + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected K or LO..HI, got {text!r}") from None


def _emit(args, payload, table_lines):
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print("\n".join(table_lines))


def cmd_roots(args) -> int:
    ctx = KroneckerContext(args.n)
    roots = positive_roots(ctx, args.max_length)
    payload = [{"dim": v.to_json(), "kind": kind.value} for v, kind in roots]
    lines = ["dim\tkind"] + [f"{v}\t{kind.value}" for v, kind in roots]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_orbit(args) -> int:
    ctx = KroneckerContext(args.n)
    rows = []
    for k in args.k:
        try:
            rows.append((k, coxeter_apply(ctx, args.dim, k)))
        except KronError as exc:
            rows.append((k, exc))
    payload = [
        {"k": str(k), "dim": v.to_json()} if isinstance(v, DimVec) else {"k": str(k), "error": str(v)} for k, v in rows
    ]
    lines = ["k\tdim"] + [f"{k}\t{v if isinstance(v, DimVec) else 'escapes: ' + str(v)}" for k, v in rows]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_measure(args) -> int:
    ctx = KroneckerContext(args.n)
    desc = grsym.describe(ctx, grsym.RegularCoord(args.c, args.i, args.j))
    sub = desc.gr_submodule
    lines = [
        f"module\t{desc.coord}",
        f"dim\t{desc.dim}",
        f"length\t{desc.dim.length}",
        f"measure\t{desc.measure}",
        f"gr_submodule\t{sub}",
    ]
    _emit(args, desc.to_json(), lines)
    return EXIT_OK


def _oracle_rep(args):
    ctx = KroneckerContext(args.n)
    if args.file:
        return load(args.file)
    kind = args.builtin
    if kind in ("P1", "P2", "P3"):
        return preprojective_rep(ctx, args.p, int(kind[1]), args.seed)
    if kind in ("Q0", "Q1", "Q2"):
        return preinjective_rep(ctx, args.p, int(kind[1]), args.seed)
    if kind == "X2":
        return find_x2(ctx, args.p, args.seed)[0]
    if kind == "OneC":
        return random_indecomposable(ctx, args.p, DimVec(1, args.c), args.seed)[0]
    if args.dim is not None:
        return random_indecomposable(ctx, args.p, args.dim, args.seed, end_budget=args.budget_end)[0]
    raise PreconditionError("oracle needs --builtin, --file or --dim")


def cmd_oracle(args) -> int:
    rep = _oracle_rep(args)
    run = oracle_run(rep, args.method, lattice_budget=args.budget_lattice, end_budget=args.budget_end)
    cert = run.certificate()
    payload = cert.to_json()
    lines = [
        f"dim\t{rep.dim}",
        f"measure\t{cert.measure}",
        "chain\t" + " < ".join(str(u.dim) for u in cert.chain),
        f"gr_submodule_class\t{cert.gr_submodule_class or 'Unknown'}",
        f"gr_submodules\t{len(run.gr_submodules)}",
    ]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_grid(args) -> int:
    if args.n != 3:
        raise PreconditionError("grid is only available for n = 3")
    grid = fib3.component_grid(args.anchor, args.radius, args.ql_max)
    payload = [
        {"j": str(c.j), "t": str(c.t), "column": str(c.column), "dim": v.to_json()}
        for c, v in sorted(grid.items(), key=lambda kv: (-kv[0].j, kv[0].column))
    ]
    columns = range(-2 * args.radius, 2 * args.radius + 1)
    by_pos = {(c.j, c.column): v for c, v in grid.items()}
    lines = ["j\\x\t" + "\t".join(str(x) for x in columns)]
    for j in range(args.ql_max, 0, -1):
        cells = [f"{by_pos[(j, x)].a},{by_pos[(j, x)].b}" if (j, x) in by_pos else "" for x in columns]
        lines.append(f"{j}\t" + "\t".join(cells))
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_verify(args) -> int:
    from .verify import run_suite

    report = run_suite(args.suite, args.seed)
    lines = [f"suite {report.suite} (seed {report.seed})"]
    for c in report.checks:
        lines.append(f"{c.status.upper():4}  {c.id:24} {c.runtime_ms:>7} ms  expected {c.expected}; got {c.actual}")
    lines.append("overall: " + ("pass" if report.passed else "fail"))
    _emit(args, report.to_json(), lines)
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kron", description="Gabriel-Roiter measures on the n-Kronecker quiver.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=3, help="number of arrows (>= 3)")
    common.add_argument("--json", action="store_true", help="canonical JSON output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("roots", parents=[common], help="positive roots up to a length")
    p.add_argument("--max-length", type=int, default=8)
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("orbit", parents=[common], help="tau-powers of a dimension vector")
    p.add_argument("--dim", type=_dim, required=True, help="a,b")
    p.add_argument("--k", type=_k_range, default=range(-2, 3), help="K or LO..HI (default -2..2)")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("measure", parents=[common], help="closed-form measure of tau^-i X[j], dim X = (1,c)")
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--i", type=int, default=0)
    p.add_argument("--j", type=int, default=1)
    p.set_defaults(func=cmd_measure)

    p = sub.add_parser("oracle", parents=[common], help="measure of an explicit representation over F_p")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--builtin", choices=BUILTINS)
    src.add_argument("--file", help="representation JSON")
    p.add_argument("--dim", type=_dim, help="random indecomposable of this dimension")
    p.add_argument("--c", type=int, default=1, help="sink dimension for --builtin OneC")
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--method", choices=sorted(METHODS), default="auto")
    p.add_argument("--budget-lattice", type=int, default=DEFAULT_LATTICE_BUDGET)
    p.add_argument("--budget-end", type=int, default=DEFAULT_END_BUDGET)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("grid", parents=[common], help="regular component grid for n = 3")
    p.add_argument("--anchor", type=_dim, default=DimVec(1, 1), help="1,1 or 1,2")
    p.add_argument("--radius", type=int, default=2, help="tau radius; columns |x| <= 2*radius")
    p.add_argument("--ql-max", type=int, default=5)
    p.set_defaults(func=cmd_grid)

    p = sub.add_parser("verify", parents=[common], help="run a check suite")
    p.add_argument("--suite", default="fib")
    p.add_argument("--seed", type=int, default=1)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"kron: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (SchemaError, OSError, json.JSONDecodeError) as exc:
        print(f"kron: bad input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except PreconditionError as exc:
        print(f"kron: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except KronError as exc:
        print(f"kron: {exc}", file=sys.stderr)
        return EXIT_MATH


if __name__ == "__main__":
    sys.exit(main())
