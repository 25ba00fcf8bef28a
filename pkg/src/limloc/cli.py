"""Command line interface: ``limloc <command> [flags]``.

Exit codes: 0 success, 1 strategy-proofness witness found, 2 usage error,
3 malformed instance file, 4 invalid instance, 5 arity mismatch,
6 infeasible mechanism output, 7 any other computation error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from limloc.core import TieBreak, format_rational, parse_rational
from limloc.errors import (
    ArityMismatch,
    InfeasibleMechanismOutput,
    InstanceSyntaxError,
    InvalidInstance,
    LimlocError,
)
from limloc.instance_io import read_instance
from limloc.mechanisms import parse_mechanism, run
from limloc.objectives import Objective
from limloc.optimum import optimal
from limloc.report import Report, ReportRow, emit_report
from limloc.tables import compute_tables, render_tables, tables_report
from limloc.verify import (
    RatioAtLeast,
    SearchConfig,
    adversarial_search,
    certify_lower_bound,
    check_strategy_proof,
    format_ratio,
    measure_ratio,
)
from limloc.verify.certificates import Theorem

EXIT_WITNESS = 1
EXIT_USAGE = 2
EXIT_SYNTAX = 3
EXIT_INVALID = 4
EXIT_ARITY = 5
EXIT_INFEASIBLE = 6
EXIT_OTHER = 7


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except InstanceSyntaxError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _counts(text: str) -> tuple[int, ...]:
    try:
        counts = tuple(int(c) for c in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or comma-separated integers, got {text!r}") from None
    if not counts or min(counts) < 1:
        raise argparse.ArgumentTypeError("agent counts must be positive")
    return counts


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="limloc", description="Strategy-proof facility location at limited locations.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, *, mech=False, objective=False, instance=False, fmt=False):
        if mech:
            sp.add_argument("--mech", required=True, help="median*, leftmost*, rightmost*, midornearest*, "
                            "genmedian*:<z1,...>, endpoint*, median, mean*")
            sp.add_argument("--tie", choices=["left", "right"], default="left",
                            help="tie-break rule of the single-facility starred mechanisms")
        if objective:
            sp.add_argument("--objective", required=True, type=Objective.parse,
                            help="total-dist, max-dist, util, egal, soc-sat, min-sat")
        if instance:
            sp.add_argument("--instance", required=True, help="instance JSON file, or - for stdin")
        if fmt:
            sp.add_argument("--format", choices=["text", "csv", "json"], default="text")

    common(sub.add_parser("run", help="place facilities with a mechanism"), mech=True, instance=True)
    common(sub.add_parser("optimal", help="exact optimum inside the region"), objective=True, instance=True)
    common(sub.add_parser("ratio", help="mechanism value, optimum and exact ratio"),
           mech=True, objective=True, instance=True, fmt=True)
    common(sub.add_parser("sp-check", help="search structural misreports for a profitable deviation"),
           mech=True, instance=True)

    sp = sub.add_parser("search", help="adversarial approximation-ratio search")
    common(sp, mech=True, objective=True, fmt=True)
    sp.add_argument("--n", type=_counts, default=(1, 2, 3, 4, 5, 6), help="agent count(s), e.g. 3 or 2,3,4")
    sp.add_argument("--budget", type=int, default=200)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--denominator", type=int, default=24)

    sp = sub.add_parser("certify", help="replay a lower-bound construction against a mechanism")
    common(sp, mech=True)
    sp.add_argument("--theorem", required=True, type=Theorem.parse, help=", ".join(t.value for t in Theorem))
    sp.add_argument("--eps", type=_rational, default=Fraction(1, 100))
    sp.add_argument("--k", type=int, default=10)

    sp = sub.add_parser("tables", help="summary ratio tables from the structured families")
    sp.add_argument("--n", type=int, default=10)
    sp.add_argument("--eps", type=_rational, default=Fraction(1, 100))
    sp.add_argument("--k", type=int, default=10)
    sp.add_argument("--format", choices=["text", "csv", "json"], default="text")
    return p


def _mechanism(args):
    return parse_mechanism(args.mech, TieBreak(args.tie))


def _cmd_run(args, out):
    inst = read_instance(args.instance)
    placement = run(_mechanism(args), inst)
    print(str(placement) + ("" if placement.feasible else " (infeasible)"), file=out)
    return 0


def _cmd_optimal(args, out):
    inst = read_instance(args.instance)
    res = optimal(inst, args.objective)
    print(f"placement={res.placement} value={format_rational(res.value)}", file=out)
    return 0


def _emit_witness(mech_name, witness, fmt, out, instance_id):
    if fmt == "text":
        print(
            f"mech={format_rational(witness.mechanism_value)} opt={format_rational(witness.optimal.value)} "
            f"ratio={format_ratio(witness.ratio)}",
            file=out,
        )
    else:
        out.write(emit_report(Report([ReportRow.from_witness(mech_name, witness, instance_id)]), fmt))


def _cmd_ratio(args, out):
    inst = read_instance(args.instance)
    mech = _mechanism(args)
    w = measure_ratio(mech, inst, args.objective)
    _emit_witness(mech.name, w, args.format, out, Path(args.instance).stem)
    return 0


def _cmd_sp_check(args, out):
    inst = read_instance(args.instance)
    w = check_strategy_proof(_mechanism(args), inst)
    if w is None:
        print("strategy-proof over candidate set", file=out)
        return 0
    print(
        f"witness: agent={w.agent_index} true={format_rational(w.true_location)} "
        f"misreport={format_rational(w.misreport)} before={format_rational(w.distance_before)} "
        f"after={format_rational(w.distance_after)}",
        file=out,
    )
    return EXIT_WITNESS


def _cmd_search(args, out):
    mech = _mechanism(args)
    config = SearchConfig(
        agent_counts=args.n, coordinate_denominator=args.denominator, budget=args.budget, seed=args.seed
    )
    w = adversarial_search(mech, args.objective, config)
    _emit_witness(mech.name, w, args.format, out, w.label)
    if args.format == "text":
        print(f"instance={w.label} agents={{{', '.join(map(format_rational, w.instance.agents))}}} "
              f"region={w.instance.region}", file=out)
    return 0


def _cmd_certify(args, out):
    mech = _mechanism(args)
    res = certify_lower_bound(args.theorem, mech, args.eps, args.k)
    if isinstance(res.outcome, RatioAtLeast):
        w = res.outcome.witness
        print(
            f"RatioAtLeast {format_ratio(res.outcome.ratio)} "
            f"(mech={format_rational(w.mechanism_value)} opt={format_rational(w.optimal.value)})",
            file=out,
        )
    else:
        sw = res.outcome.witness
        print(
            f"SPViolation agent={sw.agent_index} true={format_rational(sw.true_location)} "
            f"misreport={format_rational(sw.misreport)}",
            file=out,
        )
    for inst, placement in res.transcript:
        print(f"  agents={{{', '.join(map(format_rational, inst.agents))}}} region={inst.region} -> {placement}",
              file=out)
    return 0


def _cmd_tables(args, out):
    tables = compute_tables(args.n, args.eps, args.k)
    if args.format == "text":
        out.write(render_tables(tables))
    else:
        out.write(emit_report(tables_report(tables), args.format))
    return 0


COMMANDS = {
    "run": _cmd_run,
    "optimal": _cmd_optimal,
    "ratio": _cmd_ratio,
    "sp-check": _cmd_sp_check,
    "search": _cmd_search,
    "certify": _cmd_certify,
    "tables": _cmd_tables,
}


def run_command(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else 0
    try:
        return COMMANDS[args.command](args, out)
    except (LimlocError, ValueError, OSError) as exc:
        print(f"limloc: error: {exc}", file=err)
        return _exit_code(exc)


def _exit_code(exc: Exception) -> int:
    for cls, code in (
        (InstanceSyntaxError, EXIT_SYNTAX),
        (InvalidInstance, EXIT_INVALID),
        (ArityMismatch, EXIT_ARITY),
        (InfeasibleMechanismOutput, EXIT_INFEASIBLE),
    ):
        if isinstance(exc, cls):
            return code
    return EXIT_OTHER


def main() -> None:
    sys.exit(run_command())
