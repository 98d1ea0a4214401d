"""Experiment: replace the jump m by a multiple q*m and watch what survives.

Given jump sets R and S such that C_n(R + {m}) and C_n(S + {m}) are Type-2
isomorphic w.r.t. m, the probe builds C_n(R + {q*m}) and C_n(S + {q*m})
and records whether a theta map w.r.t. m still carries one onto the other,
whether they are Adam's images of each other, and what the classifier says.
Nothing here is asserted; the output is evidence only.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Optional

from .errors import InvalidParams
from .oracle import DEFAULT_NODE_BUDGET
from .orbits import DEFAULT_DEPTH, adams_orbit, classify_pair
from .transforms import ThetaParams, adams_witness, theta_graph
from .zmod import CirculantGraph


@dataclass(frozen=True)
class Pattern:
    name: str
    n: int
    m: int
    R: tuple[int, ...]
    S: tuple[int, ...]

    def __post_init__(self):
        if self.m < 2 or self.n % self.m:
            raise InvalidParams(f"m = {self.m} must be a divisor >= 2 of n = {self.n}")
        for v in self.R + self.S:
            if v % self.m == 0:
                raise InvalidParams(f"jump {v} is a multiple of m = {self.m}")


# The Type-2 pairs behind the worked examples, with the r = m jump removed.
BUILTIN_PATTERNS = (
    Pattern("n48-m2", 48, 2, (1, 23), (11, 13)),
    Pattern("n54-m3", 54, 3, (1, 17, 19), (7, 11, 25)),
    Pattern("n108-m3-a", 108, 3, (5, 31, 41), (7, 29, 43)),
    Pattern("n108-m3-b", 108, 3, (4, 32, 40), (16, 20, 52)),
)


def _theta_shift(g1: CirculantGraph, g2: CirculantGraph, m: int) -> Optional[int]:
    """Smallest t >= 1 with theta_{n,m,t}(g1) == g2, ignoring membership of m."""
    for t in range(1, ThetaParams(g1.n, m, 0).cycle):
        if theta_graph(g1, m, t) == g2:
            return t
    return None


def _pair_report(g1, g2, m, depth, node_budget) -> dict:
    t = _theta_shift(g1, g2, m)
    a = adams_witness(g1, g2)
    verdict = classify_pair(g1, g2, depth=depth, node_budget=node_budget)
    return {
        "g1": str(g1),
        "g2": str(g2),
        "theta_t": t,
        "adams_a": a,
        "type2_wrt_m": t is not None and g2 not in adams_orbit(g1),
        "verdict": verdict.to_json(),
        "verdict_text": str(verdict),
    }


def default_multipliers(pat: Pattern) -> list[int]:
    """q >= 2 with q*m <= n/2 and gcd(n, q*m) > m."""
    out = []
    for q in range(2, pat.n // (2 * pat.m) + 1):
        if gcd(pat.n, q * pat.m) > pat.m:
            out.append(q)
    return out


def probe_pattern(
    pat: Pattern,
    multipliers: Optional[list[int]] = None,
    depth: int = DEFAULT_DEPTH,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> dict:
    n, m = pat.n, pat.m
    base1 = CirculantGraph.from_residues(n, pat.R + (m,))
    base2 = CirculantGraph.from_residues(n, pat.S + (m,))
    rows = []
    for q in multipliers if multipliers is not None else default_multipliers(pat):
        qm = q * m
        g = gcd(n, qm)
        if qm > n // 2 or g <= m:
            raise InvalidParams(f"q = {q}: need q*m <= n/2 and gcd(n, q*m) > m")
        m1 = g // m
        g1 = CirculantGraph.from_residues(n, pat.R + (qm,))
        g2 = CirculantGraph.from_residues(n, pat.S + (qm,))
        row = {"q": q, "qm": qm, "m1": m1, "gcd_m_m1": gcd(m, m1)}
        row.update(_pair_report(g1, g2, m, depth, node_budget))
        # the expected pattern: Type-2 w.r.t. m survives iff gcd(m, m1) == 1
        row["expected_type2"] = row["gcd_m_m1"] == 1
        row["agrees"] = row["expected_type2"] == row["type2_wrt_m"]
        rows.append(row)
    return {
        "pattern": pat.name,
        "n": n,
        "m": m,
        "base": _pair_report(base1, base2, m, depth, node_budget),
        "substitutions": rows,
        "all_agree": all(row["agrees"] for row in rows),
    }


def format_probe(results: list[dict]) -> str:
    lines = []
    for res in results:
        b = res["base"]
        lines.append(f"{res['pattern']}: {b['g1']} ~ {b['g2']}  base: {b['verdict_text']}")
        for row in res["substitutions"]:
            theta = "-" if row["theta_t"] is None else row["theta_t"]
            lines.append(
                f"  q={row['q']} qm={row['qm']} m1={row['m1']} gcd(m,m1)={row['gcd_m_m1']}  "
                f"{row['g1']} vs {row['g2']}  theta_t={theta}  "
                f"type2_wrt_m={row['type2_wrt_m']}  verdict={row['verdict_text']}"
                + ("" if row["agrees"] else "  [unexpected]")
            )
    return "\n".join(lines) + "\n"
