"""Command-line interface.

Subcommands: eci, construct, formula, verify, enumerate.  Exit status 0
when everything computed and every verdict is PASS, 1 when any check
returns FAIL, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import Callable

from . import formulas, reports, verification
from .enumeration import (MAX_GENERATED_N, count_connected, default_jobs,
                          enumerate_connected)
from .families import make, parse_spec
from .graph6 import Graph6Error, encode_graph6, iter_graph6
from .graphs import DisconnectedError, Graph, diameter, eci, vertex_metrics
from .reports import ReportRecord

USAGE_ERROR = 2


class CliError(Exception):
    """Usage or input error; maps to exit status 2."""


def _open_graph_stream(path: str):
    if path == "-":
        return sys.stdin
    try:
        return open(path, "r", encoding="ascii")
    except OSError as exc:
        raise CliError(str(exc)) from None


def _needs_n9_gate(n: int, include_n9: bool) -> None:
    if n > MAX_GENERATED_N:
        raise CliError(f"internal generation is capped at n = {MAX_GENERATED_N}; "
                       f"ingest graph6 for larger orders")
    if n == 9 and not include_n9:
        raise CliError("order-9 scans take minutes; pass --include-n9 to run them")


def _progress_printer(enabled: bool) -> Callable[[int, int, int], None] | None:
    if not enabled:
        return None

    def show(level: int, done: int, total: int) -> None:
        if total >= 2000:
            sys.stderr.write(f"\rexpanding to {level} vertices: {done}/{total} parents")
            sys.stderr.flush()
            if done == total:
                sys.stderr.write("\n")

    return show


def _graph_record(lineno: int, g6: str, g: Graph) -> ReportRecord:
    try:
        metrics = vertex_metrics(g)
        outputs = {
            "n": g.n,
            "m": g.m,
            "diameter": max(v.ecc for v in metrics),
            "eci": sum(v.weight for v in metrics),
            "vertices": [
                {"v": i, "degree": vm.degree, "ecc": vm.ecc, "weight": vm.weight}
                for i, vm in enumerate(metrics)
            ],
        }
        return ReportRecord("eci", {"line": lineno, "g6": g6}, outputs)
    except DisconnectedError:
        raise CliError(f"line {lineno}: graph is disconnected") from None


def _cmd_eci(args) -> list[ReportRecord]:
    stream = _open_graph_stream(args.g6)
    records = []
    try:
        for lineno, g in iter_graph6(stream):
            records.append(_graph_record(lineno, encode_graph6(g), g))
    finally:
        if stream is not sys.stdin:
            stream.close()
    return records


def _cmd_construct(args) -> list[ReportRecord]:
    try:
        spec = parse_spec(args.family)
        g = make(spec)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    outputs = {
        "n": g.n,
        "m": g.m,
        "diameter": diameter(g),
        "eci": eci(g),
    }
    if args.emit_g6:
        outputs["g6"] = encode_graph6(g)
    return [ReportRecord("construct", {"family": str(spec)}, outputs)]


_FORMULAS = {
    "eci-extremal": (("n", "d", "k"), formulas.eci_extremal_closed),
    "f": (("n", "d"), formulas.max_eci_for_diameter),
    "max-eci-diameter": (("n", "d"), formulas.max_eci_for_diameter),
    "optimal-k": (("n", "d"), lambda n, d: sorted(formulas.optimal_k_set(n, d))),
    "extremal-class": (("n", "d"),
                       lambda n, d: [str(s) for s in formulas.extremal_class(n, d).members]),
    "diameter2-max": (("n",), formulas.diameter2_max),
    "path-eci": (("n",), formulas.path_eci),
    "lollipop-gap": (("n", "d"), formulas.lollipop_gap),
    "g": (("n",), formulas.max_eci_for_order),
    "max-eci-order": (("n",), formulas.max_eci_for_order),
    "best-diameter": (("n",), formulas.best_diameter),
    "best-for-order": (("n",),
                       lambda n: {"value": formulas.best_for_order(n).value,
                                  "members": [str(s) for s in formulas.best_for_order(n).members],
                                  "notes": list(formulas.best_for_order(n).notes)}),
    "conjecture-params": (("n", "m"),
                          lambda n, m: dict(formulas.conjecture_params(n, m)._asdict())),
    "extremal-size": (("n", "d", "k"), formulas.extremal_size),
}


def _cmd_formula(args) -> list[ReportRecord]:
    if args.name not in _FORMULAS:
        raise CliError(f"unknown formula {args.name!r}; choose from "
                       f"{', '.join(sorted(_FORMULAS))}")
    wanted, fn = _FORMULAS[args.name]
    values = []
    for param in wanted:
        got = getattr(args, param)
        if got is None:
            raise CliError(f"formula {args.name} needs --{param}")
        values.append(got)
    try:
        result = fn(*values)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    return [ReportRecord("formula", {"name": args.name,
                                     **dict(zip(wanted, values))},
                         {"value": result})]


def _cmd_enumerate(args) -> list[ReportRecord]:
    _needs_n9_gate(args.n, args.include_n9)
    progress = _progress_printer(args.n >= 9)
    if args.emit_g6:
        for g in enumerate_connected(args.n, diameter=args.diameter,
                                     size=args.size, jobs=args.jobs,
                                     progress=progress):
            sys.stdout.write(encode_graph6(g) + "\n")
        return []
    count = count_connected(args.n, diameter=args.diameter, size=args.size,
                            jobs=args.jobs, progress=progress)
    inputs: dict = {"n": args.n}
    if args.diameter is not None:
        inputs["diameter"] = args.diameter
    if args.size is not None:
        inputs["size"] = args.size
    return [ReportRecord("enumerate", inputs, {"count": count})]


def _verify_orders(args, low: int, high: int) -> list[int]:
    if args.n is None:
        raise CliError("verify needs --n")
    last = args.to if args.to is not None else args.n
    if last < args.n:
        raise CliError("--to must not be below --n")
    if args.n < low or last > high:
        raise CliError(f"this check covers orders {low}..{high}")
    orders = list(range(args.n, last + 1))
    for n in orders:
        _needs_n9_gate(n, args.include_n9)
    return orders


def _cmd_verify(args) -> list[ReportRecord]:
    progress = _progress_printer(args.include_n9)
    records: list[ReportRecord] = []
    if args.check == "theorem2":
        for n in _verify_orders(args, 4, 9):
            records.append(reports.from_extremal(
                verification.check_diameter2(n, args.jobs, progress)))
    elif args.check == "theorem5":
        for n in _verify_orders(args, 4, 9):
            ds = [args.d] if args.d is not None else list(range(3, n))
            for d in ds:
                if not 3 <= d <= n - 1:
                    raise CliError(f"need 3 <= d <= n-1, got d={d} for n={n}")
                records.append(reports.from_extremal(
                    verification.check_theorem5(n, d, args.jobs, progress)))
    elif args.check == "table1":
        for n in _verify_orders(args, 3, 9):
            records.append(reports.from_extremal(
                verification.check_table1(n, args.jobs, progress)))
    elif args.check == "corollaries":
        n_max = args.n if args.n is not None else 60
        try:
            records.append(reports.from_check(verification.check_corollaries(n_max)))
        except ValueError as exc:
            raise CliError(str(exc)) from None
    elif args.check == "lollipop":
        n_max = args.n if args.n is not None else 60
        try:
            records.append(reports.from_check(
                verification.check_lollipop_claims(n_max)))
        except ValueError as exc:
            raise CliError(str(exc)) from None
    elif args.check == "conjecture":
        if args.n is None:
            raise CliError("verify conjecture needs --n")
        _needs_n9_gate(args.n, args.include_n9)
        if args.all_m:
            sizes = list(verification.conjecture_sizes(args.n))
        elif args.m is not None:
            sizes = [args.m]
        else:
            raise CliError("verify conjecture needs --m or --all-m")
        for m in sizes:
            try:
                records.append(reports.from_conjecture(
                    verification.check_conjecture(args.n, m, args.jobs, progress)))
            except ValueError as exc:
                raise CliError(str(exc)) from None
    elif args.check == "lemma1":
        if args.g6 is not None:
            stream = _open_graph_stream(args.g6)
            try:
                for lineno, g in iter_graph6(stream):
                    try:
                        records.append(reports.from_lemma1(verification.check_lemma1(g)))
                    except ValueError as exc:
                        raise CliError(f"line {lineno}: {exc}") from None
            finally:
                if stream is not sys.stdin:
                    stream.close()
        elif args.n is not None:
            _needs_n9_gate(args.n, args.include_n9)
            records.append(reports.from_lemma1_sweep(
                verification.check_lemma1_order(args.n, args.jobs, progress)))
        else:
            raise CliError("verify lemma1 needs --n or --g6")
    return records


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ecix",
        description="Eccentric connectivity index: formulas, extremal "
                    "families, and exhaustive verification.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"),
                        default="text", help="report format (default text)")
    common.add_argument("--jobs", type=int, default=None,
                        help="parallel enumeration shards (default: all cores)")
    common.add_argument("--seed", type=int, default=None,
                        help="seed for randomized sweeps (reserved)")
    common.add_argument("--include-n9", action="store_true",
                        help="allow minutes-scale order-9 scans")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eci", parents=[common],
                       help="metrics for graph6 input graphs")
    p.add_argument("--g6", default="-", help="graph6 file, or - for stdin")

    p = sub.add_parser("construct", parents=[common],
                       help="build a named family graph")
    p.add_argument("--family", required=True,
                   help="e.g. extremal(8,4,2), matching_deleted(6), h2")
    p.add_argument("--emit-g6", action="store_true")

    p = sub.add_parser("formula", parents=[common],
                       help="evaluate a closed-form function")
    p.add_argument("name", help=", ".join(sorted(_FORMULAS)))
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--m", type=int)

    p = sub.add_parser("verify", parents=[common],
                       help="run an exhaustive check")
    p.add_argument("check", choices=("theorem2", "theorem5", "table1",
                                     "corollaries", "lollipop", "conjecture",
                                     "lemma1"))
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--to", type=int, help="sweep orders n..TO")
    p.add_argument("--m", type=int)
    p.add_argument("--all-m", action="store_true",
                   help="every feasible size at this order")
    p.add_argument("--g6", help="graph6 file, or - for stdin (lemma1)")

    p = sub.add_parser("enumerate", parents=[common],
                       help="connected graphs of a given order")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--diameter", type=int)
    p.add_argument("--size", type=int)
    p.add_argument("--emit-g6", action="store_true",
                   help="print one graph6 line per class")
    p.add_argument("--count", action="store_true",
                   help="print only the class count (default)")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code not in (0, None) else 0
    if args.jobs is None:
        args.jobs = default_jobs()
    if args.jobs < 1:
        print("error: --jobs must be at least 1", file=sys.stderr)
        return USAGE_ERROR
    try:
        if args.command == "eci":
            records = _cmd_eci(args)
        elif args.command == "construct":
            records = _cmd_construct(args)
        elif args.command == "formula":
            records = _cmd_formula(args)
        elif args.command == "verify":
            records = _cmd_verify(args)
        else:
            records = _cmd_enumerate(args)
    except (CliError, Graph6Error, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    reports.emit(records, args.format, sys.stdout.write)
    if any(rec.verdict == "FAIL" for rec in records):
        return 1
    return 0


def console_main() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    console_main()
