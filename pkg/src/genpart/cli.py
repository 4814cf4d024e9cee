"""Command-line surface: construction, verification, table reproduction and
instance transformation with stable, scriptable output.

Exit codes: 0 success/pass, 1 verification failure, 2 usage or input error,
3 inconclusive (search budget exhausted).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import demand, oracle
from .partitions import (
    GenerationPlan,
    GreedyTrace,
    Partition,
    build_size_table,
    generator_size,
    greedy_generate,
    make_partition,
    minimal_generator,
    size_upper_bound,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3


def _emit(obj) -> None:
    print(json.dumps(obj))


def _plan_obj(plan: GenerationPlan) -> dict:
    return {
        "source": list(plan.source.parts),
        "target": list(plan.target.parts),
        "groups": [list(group) for group in plan.groups],
    }


def _plan_text(plan: GenerationPlan) -> str:
    rendered = []
    for value, group in zip(plan.target.parts, plan.group_values()):
        rendered.append(f"{value} = {'+'.join(str(p) for p in group)}")
    return "; ".join(rendered)


def _report_obj(report: oracle.VerificationReport) -> dict:
    return {
        "subject": list(report.subject.parts),
        "n": report.n,
        "k": report.k,
        "mode": report.mode,
        "ok": report.ok,
        "counterexample": (
            list(report.counterexample.parts) if report.counterexample else None
        ),
        "partitions_checked": report.partitions_checked,
        "nodes_expanded": report.nodes_expanded,
    }


def cmd_gen(args) -> int:
    partition = minimal_generator(args.n, args.k)
    if args.format == "json":
        _emit({"n": args.n, "k": args.k, "parts": list(partition.parts)})
    else:
        print(partition)
    return EXIT_OK


def cmd_size(args) -> int:
    size = generator_size(args.n, args.k)
    if args.format == "json":
        obj = {"n": args.n, "k": args.k, "size": size}
        if args.bound:
            obj["bound"] = size_upper_bound(args.n, args.k)
        _emit(obj)
    elif args.bound:
        print(f"{size} (bound {size_upper_bound(args.n, args.k)})")
    else:
        print(size)
    return EXIT_OK


def cmd_table(args) -> int:
    table = build_size_table(args.n_max, args.k_max)
    if args.format == "json":
        _emit(
            {
                "n_max": table.n_max,
                "k_max": table.k_max,
                "entries": [list(row) for row in table.entries],
            }
        )
        return EXIT_OK
    width = max(
        len(str(table.n_max)), max(len(str(v)) for row in table.entries for v in row)
    )
    label_width = max(3, len(str(table.k_max)))
    corner = "k\\n"
    header = " ".join(f"{n:>{width}}" for n in range(1, table.n_max + 1))
    print(f"{corner:>{label_width}} {header}")
    for k, row in enumerate(table.entries, start=1):
        cells = " ".join(f"{v:>{width}}" for v in row)
        print(f"{k:>{label_width}} {cells}")
    return EXIT_OK


def cmd_verify(args) -> int:
    subject = make_partition(args.parts)
    report = oracle.generates_all(subject, args.n, args.k, args.mode, args.max_nodes)
    if args.format == "json":
        _emit(_report_obj(report))
    elif report.ok:
        print(
            f"pass: generates all partitions of {report.n} with at most "
            f"{report.k} parts ({report.partitions_checked} checked)"
        )
    else:
        print(f"fail: cannot generate {report.counterexample}")
    return EXIT_OK if report.ok else EXIT_FAIL


def _trace_text(trace: GreedyTrace, mu: Partition) -> str:
    part = mu.parts[trace.failed_at]
    remaining = " ".join(str(r) for r in trace.remaining)
    return f"greedy: part {part} fits nowhere (remaining {remaining})"


def cmd_witness(args) -> int:
    mu = make_partition(args.parts)
    gamma = make_partition(args.target)
    result = greedy_generate(mu, gamma)
    plan = result.plan
    greedy_failed = plan is None
    if greedy_failed:
        plan = oracle.generates_exact(
            mu, gamma, oracle.SearchStats(max_nodes=args.max_nodes)
        )
    if args.format == "json":
        _emit(
            {
                "greedy_ok": not greedy_failed,
                "failed_part_index": result.trace.failed_at,
                "plan": _plan_obj(plan) if plan else None,
            }
        )
    else:
        if greedy_failed:
            print(_trace_text(result.trace, mu))
        if plan is not None:
            print(_plan_text(plan))
        else:
            print("exact: no plan")
    return EXIT_OK if plan is not None else EXIT_FAIL


def cmd_split(args) -> int:
    if args.tsplib:
        if args.k is None:
            raise ValueError("--k is required with --tsplib")
        depot, instance = demand.read_tsplib(args.input, args.k)
    else:
        depot = None
        instance = demand.read_instance(args.input)
        if args.k is not None and args.k != instance.fulfiller_count:
            instance = demand.InstanceSpec(instance.customers, args.k)
    expanded = demand.expand_instance(instance)
    if depot is not None:
        expanded = demand.with_passthrough(expanded, [depot])
    demand.write_expanded(expanded, args.output)
    summary = {
        "output": args.output,
        "customers": len(expanded.customers),
        "copies": len(expanded.copies),
        "bound": demand.expansion_bound(instance),
    }
    if args.format == "json":
        _emit(summary)
    else:
        print(
            f"wrote {summary['output']}: {summary['customers']} customers -> "
            f"{summary['copies']} copies (bound {summary['bound']})"
        )
    return EXIT_OK


def cmd_recover(args) -> int:
    expanded = demand.read_expanded(args.expanded)
    assignment = demand.read_copy_assignment(args.assignment)
    recovered = demand.recover_solution(expanded, assignment)
    rows = sorted(recovered.entries.items())
    if args.format == "json":
        _emit(
            {
                "assignments": [
                    {"customer": c, "fulfiller": f, "amount": amount}
                    for (c, f), amount in rows
                ]
            }
        )
    else:
        for (customer, fulfiller), amount in rows:
            print(f"{customer} {fulfiller} {amount}")
    return EXIT_OK


def _add_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format", choices=("text", "json"), default="text",
        help="output format (default text)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="genpart",
        description=(
            "Build minimum-size generating partitions, verify them "
            "exhaustively, and expand split-demand instances."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="print the minimal generating partition")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    _add_format(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("size", help="print the generator size")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--bound", action="store_true", help="also print the upper bound")
    _add_format(p)
    p.set_defaults(func=cmd_size)

    p = sub.add_parser("table", help="print the grid of generator sizes")
    p.add_argument("--n-max", type=int, default=20)
    p.add_argument("--k-max", type=int, default=10)
    _add_format(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="check a partition against every target")
    p.add_argument("parts", type=int, nargs="+")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--mode", choices=(oracle.MODE_GREEDY, oracle.MODE_EXACT),
                   default=oracle.MODE_GREEDY)
    p.add_argument("--max-nodes", type=int, default=None)
    _add_format(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("witness", help="show how a partition assembles a target")
    p.add_argument("parts", type=int, nargs="+")
    p.add_argument("--target", type=int, nargs="+", required=True)
    p.add_argument("--max-nodes", type=int, default=None)
    _add_format(p)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("split", help="expand an instance file into demand copies")
    p.add_argument("input")
    p.add_argument("output")
    p.add_argument("--k", type=int, default=None,
                   help="fulfiller count (overrides the file; required with --tsplib)")
    p.add_argument("--tsplib", action="store_true",
                   help="read a TSPLIB-style file instead of the native format")
    _add_format(p)
    p.set_defaults(func=cmd_split)

    p = sub.add_parser("recover", help="aggregate a copy assignment per customer")
    p.add_argument("expanded")
    p.add_argument("assignment")
    _add_format(p)
    p.set_defaults(func=cmd_recover)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except oracle.SearchBudgetExceeded as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
