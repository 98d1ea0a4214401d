"""Command-line front end: ``circiso <command> [options]``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
import warnings
from typing import Optional, Sequence

from . import __version__
from .commands import render_text, run_command
from .errors import BudgetExceeded, CircIsoError, TheoremViolation
from .grid import load_grid, run_grid
from .oracle import DEFAULT_NODE_BUDGET
from .orbits import DEFAULT_DEPTH
from .textio import dumps

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def _int_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.replace(" ", "").split(",") if v]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET, help="oracle node budget")
    common.add_argument("--depth", type=int, default=DEFAULT_DEPTH, help="composite search depth")
    common.add_argument("--seed", type=int, default=None, help="reserved; all algorithms are deterministic")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(
        prog="circiso",
        description="Isomorphism of circulant graphs: Adam's maps, Type-2 theta maps and an exact oracle.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("classify", parents=[common], help="classify the isomorphism between two graphs")
    p.add_argument("g1")
    p.add_argument("g2")

    p = sub.add_parser("orbit", parents=[common], help="Adam's orbit of a graph")
    p.add_argument("graph")

    p = sub.add_parser("t2group", parents=[common], help="Type-2 group w.r.t. r")
    p.add_argument("graph")
    p.add_argument("--r", type=int, required=True)

    p = sub.add_parser("theta-table", parents=[common], help="theta images of the connection set")
    p.add_argument("graph")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--all-t", action="store_true", help="list every t in [0, n/m) instead of one period")

    for name, help_text in (("family", "members of an n*p^3 family"), ("verify-family", "check a family")):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("--p", type=int, required=True)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--x", type=int, required=True)
        p.add_argument("--y", type=int, default=0)
        p.add_argument("--multiples", type=_int_list, default=None, help="replace p by p*p_j, e.g. 1,2")
        p.add_argument("--allow-common-factor", action="store_true", help="skip the gcd(p_j) = 1 check")

    p = sub.add_parser("annexure", parents=[common], help="all Type-2 groups for order n*p^3")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("ci-scan", parents=[common], help="look for non-Adam's isomorphs of a graph")
    p.add_argument("graph")
    p.add_argument("--max-candidates", type=int, default=100_000)

    p = sub.add_parser("oracle", parents=[common], help="exact isomorphism test")
    p.add_argument("--g1", required=True)
    p.add_argument("--g2", required=True)

    p = sub.add_parser("conjecture-probe", parents=[common], help="substitute q*m for m and report verdicts")
    p.add_argument("--pattern", action="append", dest="patterns", help="built-in pattern name (repeatable)")
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--R", type=_int_list, help="jumps of the first graph without m")
    p.add_argument("--S", type=_int_list, help="jumps of the second graph without m")
    p.add_argument("--q", type=_int_list, help="multipliers to try (default: all admissible)")

    p = sub.add_parser("grid", parents=[common], help="run a JSON list of commands")
    p.add_argument("file")
    p.add_argument("--threads", type=int, default=None)
    return parser


def _command_args(ns: argparse.Namespace) -> dict:
    cmd = ns.command
    if cmd == "classify":
        return {"g1": ns.g1, "g2": ns.g2, "depth": ns.depth, "budget": ns.budget}
    if cmd == "orbit":
        return {"graph": ns.graph}
    if cmd == "t2group":
        return {"graph": ns.graph, "r": ns.r}
    if cmd == "theta-table":
        return {"graph": ns.graph, "r": ns.r, "all_t": ns.all_t}
    if cmd in ("family", "verify-family"):
        args = {"p": ns.p, "n": ns.n, "x": ns.x, "y": ns.y}
        if ns.multiples:
            args["multiples"] = ns.multiples
            args["coprime"] = not ns.allow_common_factor
        return args
    if cmd == "annexure":
        return {"p": ns.p, "n": ns.n}
    if cmd == "ci-scan":
        return {"graph": ns.graph, "max_candidates": ns.max_candidates, "budget": ns.budget}
    if cmd == "oracle":
        return {"g1": ns.g1, "g2": ns.g2, "budget": ns.budget}
    if cmd == "conjecture-probe":
        return {
            "patterns": ns.patterns,
            "n": ns.n,
            "m": ns.m,
            "R": ns.R,
            "S": ns.S,
            "q": ns.q,
            "depth": ns.depth,
            "budget": ns.budget,
        }
    raise AssertionError(cmd)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    logging.basicConfig(level=logging.DEBUG if ns.verbose else logging.WARNING, stream=sys.stderr)
    warnings.simplefilter("always")

    try:
        if ns.command == "grid":
            reports = run_grid(load_grid(ns.file), ns.threads)
            if ns.format == "json":
                sys.stdout.write(dumps([r.to_json() for r in reports]))
            else:
                for r in reports:
                    sys.stdout.write(f"== {r.command} {json.dumps(r.inputs, sort_keys=True)}\n")
                    sys.stdout.write(render_text(r))
            failed = any(isinstance(r.result, dict) and "error" in r.result for r in reports)
            return EXIT_FAILURE if failed else EXIT_OK
        report = run_command(ns.command, _command_args(ns))
    except (TheoremViolation, BudgetExceeded) as exc:
        print(f"circiso: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    except (CircIsoError, OSError, ValueError) as exc:
        print(f"circiso: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE

    sys.stdout.write(report.dumps() if ns.format == "json" else render_text(report))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
