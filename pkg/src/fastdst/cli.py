"""Batch command-line front end.

Subcommands
-----------
transform    apply a transform to a signal file (one float per line)
verify       run the oracle-equivalence, factor-product, orthogonality,
             and exact-count suites
count-table  emit the operation-count table as CSV
graph        emit the signal flow graph of one transform as DOT text
bench        time plan construction and execution, compare against the
             dense oracle

Exit codes: 0 success, 1 verification failure, 2 usage/size/parse error.
Requested data goes to stdout (or ``--output``); diagnostics and
operation counts go to stderr.
"""

from __future__ import annotations

import argparse
import math
import sys
import time

import numpy as np

from . import __version__
from .counts import count_table, formula_counts, recurrence_counts
from .errors import FastDstError
from .flowgraph import build_flowgraph, export_dot
from .oracle import build_matrix, factor_product, materialize_factors, matvec
from .signalio import read_signal, write_signal
from .transforms import (
    ScaleMode,
    TransformKind,
    TransformPlan,
    dst_scaled,
    dst_unitary,
    idst_unitary,
    unitary_scale_count,
    validate_length,
)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fastdst",
        description="Recursive discrete sine transforms (types I-IV) with exact operation counting.",
    )
    parser.add_argument("--version", action="version", version=f"fastdst {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("transform", help="transform a signal file")
    p.add_argument("--kind", required=True, choices=["1", "2", "3", "4"],
                   help="transform type (type 1 needs length 2^t - 1, others 2^t)")
    p.add_argument("--scale", default="scaled", choices=["scaled", "unitary"])
    p.add_argument("--inverse", action="store_true",
                   help="apply the exact inverse of the selected transform")
    p.add_argument("--input", required=True, metavar="PATH")
    p.add_argument("--output", required=True, metavar="PATH")

    p = sub.add_parser("verify", help="run the verification suites")
    p.add_argument("--t-max", type=int, required=True, help="largest level t (order 2^t), 1..12")

    p = sub.add_parser("count-table", help="emit the count table as CSV")
    p.add_argument("--t-max", type=int, required=True, help="largest level t, 1..20")
    p.add_argument("--output", metavar="PATH", help="CSV file (default: stdout)")

    p = sub.add_parser("graph", help="emit a signal flow graph as DOT")
    p.add_argument("--kind", required=True, choices=["1", "2", "3", "4"])
    p.add_argument("--n", type=int, required=True, help="transform order, a power of two")
    p.add_argument("--bit-reversed", action="store_true",
                   help="omit the trailing output permutations")
    p.add_argument("--output", metavar="PATH", help="DOT file (default: stdout)")

    p = sub.add_parser("bench", help="time plans and executions")
    p.add_argument("--kind", default="2", choices=["1", "2", "3", "4"])
    p.add_argument("--t-max", type=int, required=True, help="largest level t, 1..12")
    p.add_argument("--reps", type=int, required=True, help="repetitions per size, >= 1")
    return parser


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)


def _cmd_transform(args) -> int:
    kind = TransformKind.parse(args.kind)
    x = read_signal(args.input)
    n = validate_length(kind, x.shape[0])
    plan = TransformPlan(kind, n)
    run_kind = kind.inverse if args.inverse else kind
    y, ops = plan.execute(x, run_kind)
    scale_note = ""
    if args.scale == "unitary":
        y = y * plan.unit_scale
        scale_note = f" (+{unitary_scale_count(n).mults} scaling mults, reported separately)"
    elif args.inverse:
        # inverse of the sqrt(n)-scaled map: run the inverse kind, divide by n
        y = y * (1.0 / n)
        scale_note = f" (+{len(y)} scaling mults, reported separately)"
    write_signal(args.output, y)
    print(f"ops: adds={ops.adds} mults={ops.mults}{scale_note}", file=sys.stderr)
    return 0


def _suite_oracle_equivalence(t_max: int, rng) -> list[str]:
    failures = []
    for kind in TransformKind:
        for t in range(1, t_max + 1):
            n = 1 << t
            m = kind.signal_length(n)
            mat = build_matrix(kind, n)
            plan = TransformPlan(kind, n)
            tol = 1e-10 * math.sqrt(n)
            worst = 0.0
            for _ in range(25):
                x = rng.uniform(-1.0, 1.0, m)
                y, _ = dst_scaled(kind, x, plan)
                worst = max(worst, float(np.max(np.abs(y - matvec(mat, x)))))
            if worst > tol:
                failures.append(f"{kind.name} n={n} max-error={worst:.3e} tol={tol:.3e}")
    return failures


def _suite_factor_product(t_max: int) -> list[str]:
    failures = []
    for kind in TransformKind:
        for t in range(1, t_max + 1):
            n = 1 << t
            if n > 256:
                break
            product = factor_product(materialize_factors(kind, n))
            err = float(np.max(np.abs(product - build_matrix(kind, n))))
            if err > 1e-12:
                failures.append(f"{kind.name} n={n} max-error={err:.3e}")
    return failures


def _suite_orthogonality(t_max: int, rng) -> list[str]:
    failures = []
    for kind in TransformKind:
        for t in range(1, t_max + 1):
            n = 1 << t
            if n <= 256:
                mat = build_matrix(kind, n, ScaleMode.UNITARY)
                err = float(np.max(np.abs(mat @ mat.T - np.eye(mat.shape[0]))))
                if err > 1e-12:
                    failures.append(f"{kind.name} n={n} orthogonality error={err:.3e}")
            m = kind.signal_length(n)
            plan = TransformPlan(kind, n)
            x = rng.uniform(-1.0, 1.0, m)
            back = idst_unitary(kind, dst_unitary(kind, x, plan), plan)
            err = float(np.max(np.abs(back - x)))
            if err > 1e-10:
                failures.append(f"{kind.name} n={n} round-trip error={err:.3e}")
    return failures


def _suite_exact_counts(t_max: int, rng) -> list[str]:
    failures = []
    for kind in TransformKind:
        for t in range(1, t_max + 1):
            n = 1 << t
            m = kind.signal_length(n)
            plan = TransformPlan(kind, n)
            _, measured = dst_scaled(kind, rng.uniform(-1.0, 1.0, m), plan)
            expected = formula_counts(kind, n)
            recur = recurrence_counts(kind, n)
            if measured.as_tuple() != expected.as_tuple():
                failures.append(
                    f"{kind.name} n={n} measured={measured.as_tuple()} "
                    f"formula={expected.as_tuple()}"
                )
            if recur.as_tuple() != expected.as_tuple():
                failures.append(
                    f"{kind.name} n={n} recurrence={recur.as_tuple()} "
                    f"formula={expected.as_tuple()}"
                )
            if plan.counts(kind).as_tuple() != expected.as_tuple():
                failures.append(
                    f"{kind.name} n={n} plan={plan.counts(kind).as_tuple()} "
                    f"formula={expected.as_tuple()}"
                )
    return failures


def _cmd_verify(args) -> int:
    if not 1 <= args.t_max <= 12:
        print("verify: --t-max must be between 1 and 12", file=sys.stderr)
        return 2
    rng = np.random.default_rng(20240817)
    suites = [
        ("oracle-equivalence", lambda: _suite_oracle_equivalence(args.t_max, rng)),
        ("factor-product", lambda: _suite_factor_product(args.t_max)),
        ("orthogonality", lambda: _suite_orthogonality(args.t_max, rng)),
        ("exact-counts", lambda: _suite_exact_counts(args.t_max, rng)),
    ]
    any_failed = False
    for name, run in suites:
        failures = run()
        if failures:
            any_failed = True
            print(f"{name}: FAIL ({len(failures)} cases)")
            for failure in failures:
                print(f"  {failure}", file=sys.stderr)
        else:
            print(f"{name}: PASS")
    return 1 if any_failed else 0


def _cmd_count_table(args) -> int:
    rows = count_table(args.t_max)
    lines = ["kind,n,adds,mults,nlogn"]
    lines += [f"{r.kind.name},{r.n},{r.adds},{r.mults},{r.nlogn}" for r in rows]
    _emit("\n".join(lines) + "\n", args.output)
    return 0


def _cmd_graph(args) -> int:
    graph = build_flowgraph(TransformKind.parse(args.kind), args.n,
                            bit_reversed=args.bit_reversed)
    _emit(export_dot(graph), args.output)
    return 0


def _best_time(fn, reps: int) -> float:
    best = math.inf
    for _ in range(reps):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def _cmd_bench(args) -> int:
    if args.reps < 1:
        print("bench: --reps must be >= 1", file=sys.stderr)
        return 2
    if not 1 <= args.t_max <= 12:
        print("bench: --t-max must be between 1 and 12", file=sys.stderr)
        return 2
    kind = TransformKind.parse(args.kind)
    rng = np.random.default_rng(7)
    print("kind,n,plan_us,exec_ns,throughput_Msamples_s,oracle_matvec_ns,reuse_speedup")
    exec_times: dict[int, float] = {}
    failures = []
    for t in range(1, args.t_max + 1):
        n = 1 << t
        m = kind.signal_length(n)
        x = rng.standard_normal(m)
        plan_time = _best_time(lambda: TransformPlan(kind, n), max(1, min(args.reps, 5)))
        plan = TransformPlan(kind, n)
        plan.execute(x)  # warm the compiled kernel
        exec_time = _best_time(lambda: plan.execute(x), args.reps)
        exec_times[n] = exec_time
        reuse = (plan_time + exec_time) / exec_time
        oracle_ns = ""
        if n >= 512:
            mat = build_matrix(kind, n)
            matvec(mat, x)
            oracle_time = _best_time(lambda: matvec(mat, x), args.reps)
            oracle_ns = f"{oracle_time * 1e9:.0f}"
            if exec_time >= oracle_time:
                failures.append(
                    f"n={n}: recursive ({exec_time*1e9:.0f} ns) not faster than "
                    f"dense oracle ({oracle_time*1e9:.0f} ns)"
                )
            if n // 2 in exec_times and n // 2 >= 512:
                growth = exec_time / exec_times[n // 2]
                if growth > 3.6:
                    failures.append(
                        f"n={n}: growth factor {growth:.2f} vs n={n//2} is not subquadratic"
                    )
        throughput = m / exec_time / 1e6
        print(
            f"{kind.name},{n},{plan_time*1e6:.1f},{exec_time*1e9:.0f},"
            f"{throughput:.1f},{oracle_ns},{reuse:.2f}"
        )
        if reuse < 1.0:
            failures.append(f"n={n}: plan-reuse speedup {reuse:.2f} < 1")
    if failures:
        for failure in failures:
            print(f"bench: {failure}", file=sys.stderr)
        return 1
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "transform":
            return _cmd_transform(args)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "count-table":
            return _cmd_count_table(args)
        if args.command == "graph":
            return _cmd_graph(args)
        return _cmd_bench(args)
    except FastDstError as exc:
        print(f"fastdst: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"fastdst: {exc}", file=sys.stderr)
        return 2


def entry() -> None:  # console-script entry point
    sys.exit(main())


if __name__ == "__main__":
    entry()
