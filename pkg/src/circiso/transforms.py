"""Adam's multiplier maps and the Type-2 (theta) transformation."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Optional

from .errors import InvalidR, NotAUnit
from .zmod import CirculantGraph, check_modulus, is_symmetric, units


def adams_image(g: CirculantGraph, a: int) -> CirculantGraph:
    """C_n(aR), reflexively reduced."""
    if gcd(g.n, a) != 1:
        raise NotAUnit(f"{a} is not a unit mod {g.n}")
    return CirculantGraph.from_residues(g.n, (a * r for r in g.jumps))


@dataclass(frozen=True)
class ThetaParams:
    """Parameters of x -> x + j*t*m where x = q*m + j and m = gcd(n, r).

    ``t`` is normalised into ``[0, n/m)`` on construction.
    """

    n: int
    r: int
    t: int

    def __post_init__(self):
        n = check_modulus(self.n)
        m = gcd(n, self.r)
        if m == 1:
            raise InvalidR(f"gcd({n}, {self.r}) = 1")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "t", self.t % (n // m))

    @property
    def m(self) -> int:
        return gcd(self.n, self.r)

    @property
    def cycle(self) -> int:
        """n/m, the number of distinct shifts t."""
        return self.n // self.m


def theta_residue(x: int, p: ThetaParams) -> int:
    m = p.m
    return (x + (x % m) * p.t * m) % p.n


def theta_map(p: ThetaParams) -> list[int]:
    """The whole vertex permutation v_x -> u_{theta(x)}."""
    return [theta_residue(x, p) for x in range(p.n)]


def theta_set(s: Iterable[int], p: ThetaParams) -> frozenset[int]:
    return frozenset(theta_residue(x, p) for x in s)


def theta_graph(g: CirculantGraph, r: int, t: int) -> Optional[CirculantGraph]:
    """Image of g under theta w.r.t. r, or None if the image is not circulant."""
    p = ThetaParams(g.n, r, t)
    image = theta_set(g.full_set, p)
    if not is_symmetric(image, g.n):
        return None
    return CirculantGraph.from_residues(g.n, image)


def theta_period(g: CirculantGraph, r: int) -> int:
    """Smallest t >= 1 with theta_t(full set) == full set; divides n/m."""
    cycle = ThetaParams(g.n, r, 0).cycle
    full = g.full_set
    for t in range(1, cycle + 1):
        if cycle % t == 0 and theta_set(full, ThetaParams(g.n, r, t)) == full:
            return t
    return cycle  # unreachable: t = cycle is the identity


def adams_witness(g1: CirculantGraph, g2: CirculantGraph) -> Optional[int]:
    """Smallest unit a with adams_image(g1, a) == g2, or None."""
    if g1.n != g2.n or len(g1.jumps) != len(g2.jumps):
        return None
    for a in units(g1.n):
        if adams_image(g1, a) == g2:
            return a
    return None


def theta_table(g: CirculantGraph, r: int, all_t: bool = False) -> dict:
    """Row-by-row theta images of the full connection set of g.

    By default rows run over one period of the image sequence, which is
    the range over which distinct images occur; ``all_t`` extends to n/m.
    Each row is labelled Identity (t = 0), Type-1 (circulant and an
    Adam's image of g), Type-2 (circulant, not an Adam's image) or NS.
    """
    n = g.n
    base = ThetaParams(n, r, 0)
    columns = sorted(g.full_set)
    period = theta_period(g, r)
    last = base.cycle if all_t else period
    rows = []
    for t in range(last):
        p = ThetaParams(n, r, t)
        images = [theta_residue(x, p) for x in columns]
        if t == 0:
            label = "Identity"
        elif not is_symmetric(images, n):
            label = "NS"
        else:
            h = CirculantGraph.from_residues(n, images)
            label = "Type-1" if adams_witness(g, h) is not None else "Type-2"
        rows.append({"t": t, "images": images, "type": label})
    flags = []
    if r % n not in g.full_set:
        flags.append("r-not-in-R")
    if len(g.jumps) < 3:
        flags.append("fewer-than-3-jumps")
    return {
        "graph": str(g),
        "n": n,
        "r": r,
        "m": base.m,
        "period": period,
        "columns": columns,
        "rows": rows,
        "flags": flags,
    }


def format_theta_table(table: dict) -> str:
    lines = ["t | " + " ".join(map(str, table["columns"])) + " | type"]
    for row in table["rows"]:
        lines.append(f"{row['t']} | " + " ".join(map(str, row["images"])) + f" | {row['type']}")
    return "\n".join(lines) + "\n"
