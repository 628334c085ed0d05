"""``hedgeres`` command line.

Exit codes: 0 for compare/eval, 10 unsat, 20 sat, 30 budget or cap hit,
2 for usage, parse and I/O errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .algebra import AlgebraConfig, compare, parse_algebra
from .errors import EnumerationLimitExceeded, HedgeresError
from .ground_oracle import (
    Interpretation,
    Satisfiable,
    check_sat,
    eval_formula,
    ground_clause_set,
)
from .normalize import clausify_problem
from .saturate import BudgetExhausted, Refuted, SearchBudget, saturate
from .syntax import format_statement, read_problem

EXIT_OK = 0
EXIT_UNSAT = 10
EXIT_SAT = 20
EXIT_UNKNOWN = 30
EXIT_ERROR = 2

_EXIT = {"unsat": EXIT_UNSAT, "sat": EXIT_SAT, "unknown": EXIT_UNKNOWN}


class _Style:
    def __init__(self, stream):
        self.on = stream.isatty() and not os.environ.get("HEDGERES_NO_COLOR")

    def __call__(self, text, code):
        return f"\033[{code}m{text}\033[0m" if self.on else text

    def status(self, status):
        code = {"unsat": "1;32", "sat": "1;33", "unknown": "1;31"}[status]
        return self(status.upper(), code)


def _positive(text):
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return n


def _natural(text):
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError("must be a non-negative integer")
    return n


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hedgeres", description="Resolution for linguistic-valued first-order logic.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--algebra", metavar="FILE", help=".hal file with the truth algebra")
    common.add_argument("--format", choices=("text", "json"), default="text")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compare", parents=[common], help="order two truth terms")
    c.add_argument("left")
    c.add_argument("right")

    r = sub.add_parser("refute", parents=[common], help="search for a refutation")
    r.add_argument("problem")
    r.add_argument("--strategy", choices=("first", "best"), default="first")
    r.add_argument("--max-clauses", type=_positive, default=10000)
    r.add_argument("--max-depth", type=_positive, default=100)
    r.add_argument("--proof", metavar="PATH", help="write the JSON proof here when refuted")

    o = sub.add_parser("oracle", parents=[common], help="decide satisfiability by enumeration")
    o.add_argument("problem")
    o.add_argument("--truth-depth", type=_natural, default=2)
    o.add_argument("--herbrand-level", type=_natural, default=0)
    o.add_argument("--mode", choices=("strict", "weak"), default="strict")

    e = sub.add_parser("eval", parents=[common], help="evaluate statements under an interpretation")
    e.add_argument("problem")
    e.add_argument("interpretation", help="interpretation JSON file")
    return p


def _algebra(args) -> AlgebraConfig:
    if args.algebra:
        return parse_algebra(Path(args.algebra).read_text(encoding="utf-8"))
    return AlgebraConfig.default()


def _problem(args):
    return read_problem(Path(args.problem).read_text(encoding="utf-8"), _algebra(args))


def cmd_compare(args, out) -> int:
    alg = _algebra(args)
    rel = compare(alg.term(args.left), alg.term(args.right)).symbol
    if args.format == "json":
        print(json.dumps({"left": args.left, "right": args.right, "order": rel}), file=out)
    else:
        print(rel, file=out)
    return EXIT_OK


def cmd_refute(args, out) -> int:
    clauses = clausify_problem(_problem(args))
    budget = SearchBudget(args.max_clauses, args.max_depth, args.strategy)
    result = saturate(clauses, budget)
    if isinstance(result, Refuted):
        report = result.proof.to_json("unsat")
        report["generated"] = result.generated
        if args.proof:
            Path(args.proof).write_text(json.dumps(report, indent=2) + "\n", encoding="utf-8")
    else:
        report = {"result": result.status, "generated": result.generated}
    if args.format == "json":
        print(json.dumps(report, indent=2), file=out)
    else:
        style = _Style(out)
        line = style.status(result.status)
        if isinstance(result, Refuted):
            line += f" reliability {style(str(result.reliability), '1')}"
        elif isinstance(result, BudgetExhausted):
            line += " (budget exhausted)"
        print(f"{line}  [{result.generated} clauses derived]", file=out)
        if isinstance(result, Refuted):
            print(result.proof.render(), file=out)
    return _EXIT[result.status]


def cmd_oracle(args, out) -> int:
    problem = _problem(args)
    ground = ground_clause_set(clausify_problem(problem), args.herbrand_level)
    try:
        result = check_sat(ground, args.truth_depth, args.mode, algebra=problem.algebra)
    except EnumerationLimitExceeded as exc:
        status, report = "unknown", {"result": "unknown", "reason": str(exc)}
    else:
        status = "sat" if isinstance(result, Satisfiable) else "unsat"
        report = {"result": status, "ground_clauses": len(ground), "checked": result.checked}
        if isinstance(result, Satisfiable):
            report["witness"] = result.interpretation.to_json()
    if args.format == "json":
        print(json.dumps(report, indent=2), file=out)
    else:
        print(_Style(out).status(status) + f"  [{len(ground)} ground clauses, mode {args.mode}]", file=out)
        if "witness" in report:
            for atom, value in report["witness"]["atoms"].items():
                print(f"  {atom} = {value}", file=out)
        if "reason" in report:
            print(f"  {report['reason']}", file=out)
    return _EXIT[status]


def cmd_eval(args, out) -> int:
    problem = _problem(args)
    data = json.loads(Path(args.interpretation).read_text(encoding="utf-8"))
    interp = Interpretation.from_json(data, problem.algebra)
    rows = [(format_statement(s), eval_formula(s, interp)) for s in problem.statements]
    if args.format == "json":
        print(json.dumps([{"statement": s, "value": str(v)} for s, v in rows], indent=2), file=out)
    else:
        for s, v in rows:
            print(f"{v}\t{s}", file=out)
    return EXIT_OK


_COMMANDS = {"compare": cmd_compare, "refute": cmd_refute, "oracle": cmd_oracle, "eval": cmd_eval}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_ERROR
    try:
        return _COMMANDS[args.command](args, out)
    except (HedgeresError, OSError, ValueError) as exc:
        print(f"hedgeres: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
