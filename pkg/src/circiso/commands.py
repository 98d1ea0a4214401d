"""Command implementations shared by the CLI and the grid driver.

Every command takes a plain dict of arguments and returns a Report whose
``result`` is JSON-ready.  ``render_text`` turns a report into the
human-readable form printed by ``--format text``.
"""

from __future__ import annotations

from typing import Any, Callable

from .errors import InvalidParams
from .families import (
    ExtendedParams,
    FamilyParams,
    annexure_listing,
    family_all,
    verify_family,
)
from .oracle import DEFAULT_NODE_BUDGET, brute_force_isomorphic
from .orbits import DEFAULT_DEPTH, adams_orbit, ci_scan, classify_pair, type2_group
from .probe import BUILTIN_PATTERNS, Pattern, format_probe, probe_pattern
from .textio import Report, parse_graph
from .transforms import format_theta_table, theta_table
from .zmod import render_full


def _graph(args: dict, key: str = "graph"):
    if key not in args:
        raise InvalidParams(f"missing argument {key!r}")
    return parse_graph(str(args[key]))


def _family_params(args: dict):
    try:
        base = FamilyParams(int(args["p"]), int(args["n"]), int(args["x"]), int(args.get("y", 0)))
    except KeyError as exc:
        raise InvalidParams(f"missing argument {exc.args[0]!r}") from None
    multiples = args.get("multiples")
    if multiples:
        return ExtendedParams(base, tuple(int(v) for v in multiples), coprime=bool(args.get("coprime", True)))
    return base


def cmd_classify(args: dict) -> Report:
    g1, g2 = _graph(args, "g1"), _graph(args, "g2")
    depth = int(args.get("depth", DEFAULT_DEPTH))
    budget = int(args.get("budget", DEFAULT_NODE_BUDGET))
    verdict = classify_pair(g1, g2, depth=depth, node_budget=budget)
    inputs = {"g1": str(g1), "g2": str(g2), "depth": depth, "budget": budget}
    return Report("classify", inputs, {**verdict.to_json(), "text": str(verdict)})


def cmd_orbit(args: dict) -> Report:
    g = _graph(args)
    return Report("orbit", {"graph": str(g)}, adams_orbit(g).to_json())


def cmd_t2group(args: dict) -> Report:
    g = _graph(args)
    r = int(args["r"])
    return Report("t2group", {"graph": str(g), "r": r}, type2_group(g, r).to_json())


def cmd_theta_table(args: dict) -> Report:
    g = _graph(args)
    r = int(args["r"])
    all_t = bool(args.get("all_t", False))
    return Report("theta-table", {"graph": str(g), "r": r, "all_t": all_t}, theta_table(g, r, all_t))


def cmd_family(args: dict) -> Report:
    fp = _family_params(args)
    members = family_all(fp)
    result = {
        "params": fp.to_json(),
        "order": members[0].n,
        "members": [str(g) for g in members],
        "full_sets": [render_full(g) for g in members],
    }
    return Report("family", fp.to_json(), result)


def cmd_verify_family(args: dict) -> Report:
    fp = _family_params(args)
    return Report("verify-family", fp.to_json(), verify_family(fp).to_json())


def cmd_annexure(args: dict) -> Report:
    p, n = int(args["p"]), int(args["n"])
    result = {"text": annexure_listing(p, n), "blocks": annexure_listing(p, n, fmt="json")}
    return Report("annexure", {"p": p, "n": n}, result)


def cmd_ci_scan(args: dict) -> Report:
    g = _graph(args)
    max_candidates = int(args.get("max_candidates", 100_000))
    budget = int(args.get("budget", DEFAULT_NODE_BUDGET))
    inputs = {"graph": str(g), "max_candidates": max_candidates, "budget": budget}
    return Report("ci-scan", inputs, ci_scan(g, max_candidates, budget))


def cmd_oracle(args: dict) -> Report:
    g1, g2 = _graph(args, "g1"), _graph(args, "g2")
    budget = int(args.get("budget", DEFAULT_NODE_BUDGET))
    res = brute_force_isomorphic(g1, g2, budget)
    return Report("oracle", {"g1": str(g1), "g2": str(g2), "budget": budget}, res.to_json())


def _probe_patterns(args: dict) -> list[Pattern]:
    if args.get("R") is not None or args.get("S") is not None:
        try:
            n, m = int(args["n"]), int(args["m"])
            R = tuple(int(v) for v in args["R"])
            S = tuple(int(v) for v in args["S"])
        except KeyError as exc:
            raise InvalidParams(f"custom probe needs n, m, R and S; missing {exc.args[0]!r}") from None
        return [Pattern(args.get("name") or f"n{n}-m{m}", n, m, R, S)]
    names = args.get("patterns") or [p.name for p in BUILTIN_PATTERNS]
    known = {p.name: p for p in BUILTIN_PATTERNS}
    unknown = [name for name in names if name not in known]
    if unknown:
        raise InvalidParams(f"unknown pattern(s) {unknown}; known: {sorted(known)}")
    return [known[name] for name in names]


def cmd_conjecture_probe(args: dict) -> Report:
    patterns = _probe_patterns(args)
    qs = args.get("q")
    qs = [int(q) for q in qs] if qs else None
    depth = int(args.get("depth", DEFAULT_DEPTH))
    budget = int(args.get("budget", DEFAULT_NODE_BUDGET))
    results = [probe_pattern(p, qs, depth, budget) for p in patterns]
    inputs = {
        "patterns": [{"name": p.name, "n": p.n, "m": p.m, "R": list(p.R), "S": list(p.S)} for p in patterns],
        "q": qs,
        "depth": depth,
        "budget": budget,
    }
    return Report("conjecture-probe", inputs, results)


COMMANDS: dict[str, Callable[[dict], Report]] = {
    "classify": cmd_classify,
    "orbit": cmd_orbit,
    "t2group": cmd_t2group,
    "theta-table": cmd_theta_table,
    "family": cmd_family,
    "verify-family": cmd_verify_family,
    "annexure": cmd_annexure,
    "ci-scan": cmd_ci_scan,
    "oracle": cmd_oracle,
    "conjecture-probe": cmd_conjecture_probe,
}


def run_command(name: str, args: dict) -> Report:
    try:
        fn = COMMANDS[name]
    except KeyError:
        raise InvalidParams(f"unknown command {name!r}") from None
    return fn(args)


def _text_classify(res: dict) -> str:
    return res["text"] + "\n"


def _text_orbit(res: dict) -> str:
    lines = [f"Adam's orbit of {res['base']}: {res['size']} member(s)"]
    lines += [f"  {m['graph']}  a={m['a']}" for m in res["members"]]
    return "\n".join(lines) + "\n"


def _text_t2group(res: dict) -> str:
    lines = [f"T2 group of {res['base']} w.r.t. r={res['r']}: order {res['order']} (t1={res['t1']})"]
    lines += [f"  t={m['t']}  {m['graph']}" for m in res["members"]]
    return "\n".join(lines) + "\n"


def _text_family(res: dict) -> str:
    return "\n".join(res["full_sets"]) + "\n"


def _text_verify(res: dict) -> str:
    lines = [f"{' '.join(res['members'])}"]
    lines += [f"  {name}: {'ok' if ok else 'FAILED'}" for name, ok in res["checks"].items()]
    return "\n".join(lines) + "\n"


def _text_ci(res: dict) -> str:
    lines = [
        f"{res['graph']}: {res['candidates']} candidate set(s), Adam's orbit size {res['adams_orbit_size']}",
        f"  CI property {'holds' if res['ci_holds'] else 'fails'}",
    ]
    lines += [f"  non-Adam's isomorph: {g}" for g in res["violations"]]
    lines += [f"  undecided: {g}" for g in res["unknown"]]
    return "\n".join(lines) + "\n"


def _text_oracle(res: dict) -> str:
    out = f"{res['outcome']} ({res['nodes']} nodes)"
    if res["certificate"] is not None:
        out += "\n" + " ".join(map(str, res["certificate"]))
    return out + "\n"


_TEXT: dict[str, Callable[[Any], str]] = {
    "classify": _text_classify,
    "orbit": _text_orbit,
    "t2group": _text_t2group,
    "theta-table": format_theta_table,
    "family": _text_family,
    "verify-family": _text_verify,
    "annexure": lambda res: res["text"],
    "ci-scan": _text_ci,
    "oracle": _text_oracle,
    "conjecture-probe": format_probe,
}


def render_text(report: Report) -> str:
    if isinstance(report.result, dict) and "error" in report.result:
        err = report.result["error"]
        return f"{report.command}: {err['type']}: {err['message']}\n"
    return _TEXT[report.command](report.result)
