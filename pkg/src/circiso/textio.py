"""Canonical text form of graphs, deterministic reports and golden diffs."""

from __future__ import annotations

import difflib
import json
import os
import warnings
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Union

from . import __version__
from .errors import MissingGolden, ParseError
from .zmod import CirculantGraph, expand_full, reflexive_reduce


class DuplicateJumpWarning(UserWarning):
    pass


def parse_graph(text: str) -> CirculantGraph:
    """Parse ``C<n>(<j1>,<j2>,...)``; jumps may be any residues and are reduced.

    ``C_54(...)`` and ``C_{54}(...)`` are accepted too.
    """
    s = text
    i = 0

    def skip_ws():
        nonlocal i
        while i < len(s) and s[i].isspace():
            i += 1

    def number() -> int:
        nonlocal i
        start = i
        if i < len(s) and s[i] in "+-":
            i += 1
        while i < len(s) and s[i].isdigit():
            i += 1
        if i == start or not s[start:i].lstrip("+-"):
            raise ParseError("expected an integer", text, start)
        return int(s[start:i])

    skip_ws()
    if i >= len(s) or s[i] not in "Cc":
        raise ParseError("expected 'C'", text, i)
    i += 1
    if i < len(s) and s[i] == "_":
        i += 1
    braced = i < len(s) and s[i] == "{"
    if braced:
        i += 1
    n = number()
    if braced:
        if i >= len(s) or s[i] != "}":
            raise ParseError("expected '}'", text, i)
        i += 1
    skip_ws()
    if i >= len(s) or s[i] != "(":
        raise ParseError("expected '('", text, i)
    i += 1
    values = []
    while True:
        skip_ws()
        values.append(number())
        skip_ws()
        if i < len(s) and s[i] == ",":
            i += 1
            continue
        if i < len(s) and s[i] == ")":
            i += 1
            break
        raise ParseError("expected ',' or ')'", text, i)
    skip_ws()
    if i != len(s):
        raise ParseError("trailing characters", text, i)
    if n < 3:
        raise ParseError(f"order {n} is below 3", text, 1)
    reduced = reflexive_reduce(values, n)
    # writing out the whole symmetric set is normal, anything else is a duplicate
    written_full = sorted(v % n for v in values) == sorted(expand_full(reduced, n))
    if len(values) != len(reduced) and not written_full:
        warnings.warn(f"duplicate jumps collapsed in {text!r}", DuplicateJumpWarning, stacklevel=2)
    return CirculantGraph(n, reduced)


def render_graph(g: CirculantGraph) -> str:
    return str(g)


@dataclass
class Report:
    command: str
    inputs: dict
    result: Any
    provenance: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.provenance:
            self.provenance = {"tool": "circiso", "version": __version__, "parameters": dict(self.inputs)}

    def to_json(self) -> dict:
        return {
            "command": self.command,
            "inputs": self.inputs,
            "result": self.result,
            "provenance": self.provenance,
        }

    def dumps(self) -> str:
        return dumps(self.to_json())


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def normalize_text(text: str) -> list[str]:
    """Collapse runs of whitespace and drop blank lines."""
    out = []
    for line in text.splitlines():
        line = " ".join(line.split())
        if line:
            out.append(line)
    return out


def golden_compare(report: Union[Report, str], golden: Union[str, os.PathLike]) -> list[str]:
    """Unified diff between a report (or rendered text) and a golden file.

    JSON reports are compared on their ``result`` payload; text is compared
    line by line after whitespace normalisation.  An empty list means a match.
    """
    path = Path(golden)
    if not path.exists():
        raise MissingGolden(str(path))
    expected = path.read_text()
    if isinstance(report, Report):
        if path.suffix == ".json":
            actual = dumps(report.result)
            expected = dumps(json.loads(expected))
        else:
            actual = report.result if isinstance(report.result, str) else dumps(report.result)
    else:
        actual = report
    diff = difflib.unified_diff(
        normalize_text(expected), normalize_text(actual), fromfile=str(path), tofile="actual", lineterm=""
    )
    return list(diff)
