"""Orbit and group computations, and pairwise classification of circulants."""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import gcd
from typing import Optional

from .errors import BudgetExceeded, InvalidR, NoMultipleOfM, OrderMismatch, TheoremViolation
from .oracle import DEFAULT_NODE_BUDGET, EXCEEDED, YES, brute_force_isomorphic
from .transforms import (
    ThetaParams,
    adams_image,
    adams_witness,
    theta_graph,
    theta_period,
)
from .verdicts import ADAMS, COMPOSITE, NOT_ISOMORPHIC, TYPE2, UNKNOWN, IsoVerdict, Step
from .zmod import CirculantGraph, gcd_profile, same_spectrum, units

log = logging.getLogger(__name__)

DEFAULT_DEPTH = 3


@dataclass(frozen=True)
class AdamsOrbit:
    base: CirculantGraph
    witness: dict  # member -> smallest unit multiplier

    @property
    def members(self) -> list[CirculantGraph]:
        return sorted(self.witness)

    def __contains__(self, g: CirculantGraph) -> bool:
        return g in self.witness

    def __len__(self) -> int:
        return len(self.witness)

    def to_json(self) -> dict:
        return {
            "base": str(self.base),
            "size": len(self),
            "members": [{"graph": str(g), "a": self.witness[g]} for g in self.members],
        }


@lru_cache(maxsize=1024)
def adams_orbit(g: CirculantGraph) -> AdamsOrbit:
    witness: dict[CirculantGraph, int] = {}
    for a in units(g.n):
        witness.setdefault(adams_image(g, a), a)
    return AdamsOrbit(g, witness)


def _check_r(g: CirculantGraph, r: int) -> int:
    m = gcd(g.n, r)
    if m == 1:
        raise InvalidR(f"gcd({g.n}, {r}) = 1")
    return m


def v_orbit(g: CirculantGraph, r: int) -> list[tuple[int, CirculantGraph]]:
    """Circulant theta images of g over one period of the image sequence."""
    _check_r(g, r)
    out = []
    for t in range(theta_period(g, r)):
        h = theta_graph(g, r, t)
        if h is not None:
            out.append((t, h))
    return out


@dataclass(frozen=True)
class Type2Group:
    base: CirculantGraph
    r: int
    t1: Optional[int]
    period: int
    members: tuple[CirculantGraph, ...]
    v_size: int  # number of distinct theta images of the base, circulant or not
    v_circulant: int

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def shifts(self) -> list[int]:
        if self.t1 is None:
            return [0]
        return [(j * self.t1) % self.period for j in range(self.order)]

    def to_json(self) -> dict:
        return {
            "base": str(self.base),
            "r": self.r,
            "t1": self.t1,
            "order": self.order,
            "members": [{"t": t, "graph": str(g)} for t, g in zip(self.shifts, self.members)],
            "v_size": self.v_size,
            "v_circulant": self.v_circulant,
            "t2_equals_v": self.order == self.v_circulant,
        }


def type2_group(g: CirculantGraph, r: int) -> Type2Group:
    """The Type-2 group of g with respect to r.

    Members are theta images at multiples of the smallest shift t1 giving a
    circulant graph that is not an Adam's image of g.  Fewer than three
    jumps, or no such shift, gives the trivial group.
    """
    m = _check_r(g, r)
    if not any(j % m == 0 for j in g.jumps):
        raise NoMultipleOfM(f"no jump of {g} is a multiple of {m}")
    period = theta_period(g, r)
    images = v_orbit(g, r)
    orbit = adams_orbit(g)
    t1 = None
    if len(g.jumps) >= 3:
        for t, h in images:
            if t > 0 and h not in orbit:
                t1 = t
                break
    if t1 is None:
        return Type2Group(g, r, None, period, (g,), period, len(images))
    order = period // gcd(period, t1)
    members = []
    for j in range(order):
        h = theta_graph(g, r, j * t1)
        if h is None:
            raise TheoremViolation("closure", f"theta_{j * t1}({g}) w.r.t. {r} is not circulant")
        if j and h in orbit:
            raise TheoremViolation("closure", f"{h} is both a Type-2 image and an Adam's image of {g}")
        members.append(h)
    if len(set(members)) != order:
        raise TheoremViolation("closure", f"repeated members in the Type-2 group of {g}")
    return Type2Group(g, r, t1, period, tuple(members), period, len(images))


def _type2_witness(g1: CirculantGraph, g2: CirculantGraph) -> Optional[tuple[int, int]]:
    """Smallest (r, t) with theta_{r,t}(g1) == g2, r a shared jump, gcd(n, r) > 1."""
    if len(g1.jumps) < 3 or len(g1.jumps) != len(g2.jumps):
        return None
    shared = sorted(set(g1.jumps) & set(g2.jumps))
    for r in shared:
        if gcd(g1.n, r) == 1:
            continue
        for t in range(1, ThetaParams(g1.n, r, 0).cycle):
            if theta_graph(g1, r, t) == g2:
                return r, t
    return None


def _theta_moves(g: CirculantGraph):
    for r in g.jumps:
        if gcd(g.n, r) == 1:
            continue
        for t in range(1, theta_period(g, r)):
            h = theta_graph(g, r, t)
            if h is not None and h != g:
                yield Step.theta(r, t), h


def composite_search(
    g1: CirculantGraph, g2: CirculantGraph, max_depth: int = DEFAULT_DEPTH
) -> Optional[list[Step]]:
    """Shortest move sequence from g1 to g2, or None within max_depth steps.

    Moves are theta images w.r.t. jumps of the current graph and Adam's
    multipliers; two Adam's moves never follow each other since their
    product is a single multiplier.  Theta moves are tried before Adam's
    moves, each in ascending parameter order.
    """
    if g1.n != g2.n:
        raise OrderMismatch(f"orders differ: {g1.n} vs {g2.n}")
    if max_depth < 1:
        raise ValueError("max_depth must be >= 1")
    if g1 == g2:
        return []
    seen = {g1}
    queue = deque([(g1, (), False)])
    while queue:
        g, path, after_adams = queue.popleft()
        if len(path) >= max_depth:
            continue
        moves = list(_theta_moves(g))
        if not after_adams:
            moves += [(Step.adams(a), h) for h, a in adams_orbit(g).witness.items() if a != 1]
        for step, h in moves:
            if h in seen:
                continue
            new_path = path + (step,)
            if h == g2:
                return list(new_path)
            seen.add(h)
            queue.append((h, new_path, step.kind == "Adams"))
    return None


def classify_pair(
    g1: CirculantGraph,
    g2: CirculantGraph,
    depth: int = DEFAULT_DEPTH,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> IsoVerdict:
    """Classify how (and whether) two circulants of the same order are isomorphic.

    Priority is Adams > Type2 > Composite; the oracle settles whatever the
    structured scans leave open.
    """
    if g1.n != g2.n:
        raise OrderMismatch(f"orders differ: {g1.n} vs {g2.n}")
    if (
        len(g1.jumps) != len(g2.jumps)
        or gcd_profile(g1) != gcd_profile(g2)
        or not same_spectrum(g1, g2)
    ):
        return IsoVerdict(NOT_ISOMORPHIC)
    a = adams_witness(g1, g2)
    if a is not None:
        return IsoVerdict(ADAMS, {"a": a}, (Step.adams(a),))
    rt = _type2_witness(g1, g2)
    if rt is not None:
        r, t = rt
        return IsoVerdict(TYPE2, {"r": r, "t": t}, (Step.theta(r, t),))
    path = composite_search(g1, g2, depth)
    if path is not None:
        return IsoVerdict(COMPOSITE, {"depth": len(path)}, tuple(path))
    res = brute_force_isomorphic(g1, g2, node_budget)
    if res.outcome == YES:
        return IsoVerdict(COMPOSITE, {"depth": None}, (), res.certificate)
    if res.outcome == EXCEEDED:
        return IsoVerdict(UNKNOWN, {"nodes": res.nodes})
    return IsoVerdict(NOT_ISOMORPHIC)


def _candidate_sets(g: CirculantGraph):
    """All jump sets of g's size with g's gcd profile."""
    n, k = g.n, len(g.jumps)
    profile = gcd_profile(g)
    pool = range(1, n // 2 + 1)
    by_gcd: dict[int, list[int]] = {}
    for r in pool:
        by_gcd.setdefault(gcd(n, r), []).append(r)
    need: dict[int, int] = {}
    for d in profile:
        need[d] = need.get(d, 0) + 1
    parts = [list(combinations(by_gcd.get(d, []), c)) for d, c in sorted(need.items())]
    return parts, k


def count_candidates(g: CirculantGraph) -> int:
    parts, _ = _candidate_sets(g)
    total = 1
    for p in parts:
        total *= len(p)
    return total


def ci_scan(
    g: CirculantGraph,
    budget: int = 100_000,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> dict:
    """Search for graphs isomorphic to g that are not Adam's images of it.

    ``budget`` caps the number of candidate jump sets examined.
    """
    total = count_candidates(g)
    if total > budget:
        raise BudgetExceeded(f"{total} candidate jump sets exceed budget {budget}")
    parts, _ = _candidate_sets(g)
    orbit = adams_orbit(g)
    witnesses = []
    unknown = []
    checked = 0

    def product(idx: int, acc: tuple[int, ...]):
        if idx == len(parts):
            yield tuple(sorted(acc))
            return
        for combo in parts[idx]:
            yield from product(idx + 1, acc + combo)

    for jumps in product(0, ()):
        h = CirculantGraph(g.n, jumps)
        if h in orbit:
            continue
        checked += 1
        if not same_spectrum(g, h):
            continue
        res = brute_force_isomorphic(g, h, node_budget)
        if res.outcome == YES:
            witnesses.append(h)
        elif res.outcome == EXCEEDED:
            unknown.append(h)
    witnesses.sort()
    return {
        "graph": str(g),
        "candidates": total,
        "adams_orbit_size": len(orbit),
        "checked": checked,
        "ci_holds": not witnesses and not unknown,
        "violations": [str(h) for h in witnesses],
        "unknown": [str(h) for h in sorted(unknown)],
    }
