"""Batch driver: run a list of commands, possibly in parallel, with stable output."""

from __future__ import annotations

import json
import os
from concurrent.futures import ThreadPoolExecutor
from typing import Iterable, Optional

from .commands import run_command
from .errors import CircIsoError, InvalidParams
from .textio import Report

THREADS_ENV = "CIRC_ISO_THREADS"


def thread_cap(requested: Optional[int] = None) -> int:
    """Worker count: the request (default: CPU count) capped by CIRC_ISO_THREADS."""
    n = requested or os.cpu_count() or 1
    env = os.environ.get(THREADS_ENV)
    if env:
        try:
            cap = int(env)
        except ValueError:
            raise InvalidParams(f"{THREADS_ENV}={env!r} is not an integer") from None
        if cap >= 1:
            n = min(n, cap)
    return max(1, n)


def entry_key(entry: dict) -> str:
    return json.dumps({"command": entry.get("command"), "args": entry.get("args", {})}, sort_keys=True)


def _run_entry(entry: dict) -> Report:
    command = str(entry.get("command"))
    args = dict(entry.get("args") or {})
    try:
        return run_command(command, args)
    except (CircIsoError, ValueError, KeyError, TypeError) as exc:
        error = {"type": type(exc).__name__, "message": str(exc)}
        if getattr(exc, "check", None):
            error["check"] = exc.check
        return Report(command, args, {"error": error})


def run_grid(entries: Iterable[dict], threads: Optional[int] = None) -> list[Report]:
    """Execute every entry and return reports sorted by canonical input key.

    An entry is ``{"command": <name>, "args": {...}}``.  Failures are kept
    in the corresponding report as ``{"error": {...}}``.
    """
    entries = sorted(entries, key=entry_key)
    if not entries:
        return []
    workers = min(thread_cap(threads), len(entries))
    if workers == 1:
        return [_run_entry(e) for e in entries]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_run_entry, entries))


def load_grid(path: str) -> list[dict]:
    """A grid file is a JSON list of entries, or {"entries": [...]}."""
    with open(path) as fh:
        data = json.load(fh)
    if isinstance(data, dict):
        data = data.get("entries", [])
    if not isinstance(data, list) or not all(isinstance(e, dict) for e in data):
        raise InvalidParams(f"{path}: expected a list of command entries")
    return data
