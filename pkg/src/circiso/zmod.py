"""Residue arithmetic mod n, connection sets and the circulant graph type.

Jump sets are plain sorted tuples of ints in ``[1, n // 2]``; full
connection sets are frozensets closed under negation mod n.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Iterable

import numpy as np

from .errors import InvalidModulus, ZeroJump

SPECTRUM_TOL = 1e-9


def check_modulus(n: int) -> int:
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool) or n < 3:
        raise InvalidModulus(f"modulus must be an integer >= 3, got {n!r}")
    return int(n)


def reflexive_reduce(values: Iterable[int], n: int) -> tuple[int, ...]:
    """Reduce each value mod n and fold anything above n/2 onto n - value.

    The result is deduplicated and sorted ascending.
    """
    n = check_modulus(n)
    out = set()
    for v in values:
        r = int(v) % n
        if r == 0:
            raise ZeroJump(f"value {v} is 0 mod {n}")
        out.add(min(r, n - r))
    return tuple(sorted(out))


def expand_full(jumps: Iterable[int], n: int) -> frozenset[int]:
    """The symmetric residue set {r, n - r} generated by a jump set."""
    n = check_modulus(n)
    return frozenset(x for r in jumps for x in (r % n, (n - r) % n))


def is_symmetric(residues: Iterable[int], n: int) -> bool:
    s = set(residues)
    return s == {(n - x) % n for x in s}


def periodic_cycle_length(n: int, r: int) -> int:
    """Length of each cycle generated by repeatedly adding r; there are gcd(n, r) of them."""
    n = check_modulus(n)
    if not 1 <= r <= n - 1:
        raise ValueError(f"r must lie in [1, {n - 1}], got {r}")
    return n // gcd(n, r)


@lru_cache(maxsize=256)
def _units(n: int) -> tuple[int, ...]:
    return tuple(x for x in range(1, n) if gcd(n, x) == 1)


def units(n: int) -> list[int]:
    """Multiplicative units of Z_n, ascending."""
    if n < 2:
        raise InvalidModulus(f"modulus must be >= 2, got {n}")
    return list(_units(int(n)))


def inverse_unit(a: int, n: int) -> int:
    return pow(a, -1, n)


@dataclass(frozen=True, order=True)
class CirculantGraph:
    """C_n(R) with R stored in canonical (reduced, ascending) form.

    Two graphs compare equal exactly when their order and canonical jump
    sets agree.
    """

    n: int
    jumps: tuple[int, ...]

    def __post_init__(self):
        n = check_modulus(self.n)
        jumps = tuple(int(j) for j in self.jumps)
        if not jumps:
            raise ValueError("jump set must be nonempty")
        if any(not 1 <= j <= n // 2 for j in jumps):
            raise ValueError(f"jumps must lie in [1, {n // 2}]: {jumps}")
        if any(a >= b for a, b in zip(jumps, jumps[1:])):
            raise ValueError(f"jumps must be strictly increasing: {jumps}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "jumps", jumps)

    @classmethod
    def from_residues(cls, n: int, values: Iterable[int]) -> CirculantGraph:
        return cls(n, reflexive_reduce(values, n))

    @property
    def full_set(self) -> frozenset[int]:
        return expand_full(self.jumps, self.n)

    @property
    def degree(self) -> int:
        return len(self.full_set)

    @property
    def is_connected(self) -> bool:
        g = self.n
        for r in self.jumps:
            g = gcd(g, r)
        return g == 1

    def neighbors(self, v: int) -> list[int]:
        return sorted((v + s) % self.n for s in self.full_set)

    def adjacency_sets(self) -> list[frozenset[int]]:
        full = self.full_set
        n = self.n
        return [frozenset((v + s) % n for s in full) for v in range(n)]

    def has_edge(self, u: int, v: int) -> bool:
        return (v - u) % self.n in self.full_set

    def edges(self) -> list[tuple[int, int]]:
        """Each undirected edge once, as (u, v) with u < v."""
        out = set()
        for u in range(self.n):
            for s in self.full_set:
                v = (u + s) % self.n
                out.add((min(u, v), max(u, v)))
        return sorted(out)

    def to_json(self) -> dict:
        return {"n": self.n, "jumps": list(self.jumps)}

    @classmethod
    def from_json(cls, data: dict) -> CirculantGraph:
        return cls.from_residues(int(data["n"]), data["jumps"])

    def __str__(self) -> str:
        return f"C{self.n}({','.join(map(str, self.jumps))})"


def render_full(g: CirculantGraph) -> str:
    """Text form listing the whole symmetric connection set."""
    return f"C{g.n}({','.join(map(str, sorted(g.full_set)))})"


def gcd_profile(g: CirculantGraph) -> tuple[int, ...]:
    return tuple(sorted(gcd(g.n, r) for r in g.jumps))


@lru_cache(maxsize=4096)
def _spectrum(n: int, full: frozenset[int]) -> tuple[float, ...]:
    k = np.arange(n)[:, None]
    s = np.array(sorted(full))[None, :]
    vals = np.cos(2.0 * np.pi * k * s / n).sum(axis=1)
    vals = np.round(vals, 9) + 0.0
    return tuple(float(v) for v in sorted(vals, reverse=True))


def spectrum_invariant(g: CirculantGraph) -> tuple[float, ...]:
    """Adjacency eigenvalues, descending, rounded to 1e-9."""
    return _spectrum(g.n, g.full_set)


def same_spectrum(g1: CirculantGraph, g2: CirculantGraph, tol: float = SPECTRUM_TOL) -> bool:
    if g1.n != g2.n:
        return False
    a = np.array(spectrum_invariant(g1))
    b = np.array(spectrum_invariant(g2))
    # rounding can split values that straddle a 1e-9 boundary
    return bool(np.all(np.abs(a - b) <= 2 * tol))
