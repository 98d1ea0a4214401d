"""Parametric families of Type-2 isomorphic circulants of order n*p^3."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from math import gcd
from typing import Union

from .errors import BadIndex, DegenerateSet, GcdNotOne, InvalidParams, TheoremViolation
from .orbits import adams_orbit, type2_group
from .transforms import theta_graph
from .zmod import CirculantGraph, gcd_profile, render_full, same_spectrum


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p**0.5) + 1))


@dataclass(frozen=True)
class FamilyParams:
    p: int
    n: int
    x: int
    y: int = 0

    def __post_init__(self):
        p, n, x, y = self.p, self.n, self.x, self.y
        if not is_prime(p):
            raise InvalidParams(f"p = {p} is not prime")
        if n < 1:
            raise InvalidParams(f"n = {n} must be positive")
        if not 1 <= x <= p - 1:
            raise InvalidParams(f"x = {x} outside [1, {p - 1}]")
        if not 0 <= y <= n * p - 1:
            raise InvalidParams(f"y = {y} outside [0, {n * p - 1}]")
        if not 1 <= x + y * p <= n * p * p - 1:
            raise InvalidParams(f"x + y*p = {x + y * p} outside [1, {n * p * p - 1}]")

    @property
    def order(self) -> int:
        return self.n * self.p**3

    @property
    def offset(self) -> int:
        """x + y*p, the smallest member of the first base class."""
        return self.x + self.y * self.p

    def to_json(self) -> dict:
        return {"p": self.p, "n": self.n, "x": self.x, "y": self.y}


@dataclass(frozen=True)
class ExtendedParams:
    """Family parameters with the block {p, N - p} replaced by p*p_j, N - p*p_j.

    ``coprime=False`` skips the gcd(p_1, ..., p_k) == 1 requirement, which
    the substitution experiments (p replaced by q*p) need.
    """

    base: FamilyParams
    multiples: tuple[int, ...] = field(default=(1,))
    coprime: bool = True

    def __post_init__(self):
        mult = tuple(int(v) for v in self.multiples)
        if not mult:
            raise InvalidParams("at least one multiple is required")
        if any(v < 1 for v in mult) or any(a >= b for a, b in zip(mult, mult[1:])):
            raise InvalidParams(f"multiples must be positive and strictly increasing: {mult}")
        if self.coprime and reduce(gcd, mult) != 1:
            raise GcdNotOne(f"gcd{mult} != 1")
        object.__setattr__(self, "multiples", mult)

    def to_json(self) -> dict:
        return {**self.base.to_json(), "multiples": list(self.multiples)}


Params = Union[FamilyParams, ExtendedParams]


def _split(fp: Params) -> tuple[FamilyParams, tuple[int, ...]]:
    if isinstance(fp, ExtendedParams):
        return fp.base, fp.multiples
    return fp, (1,)


def family_base_jump(fp: FamilyParams, i: int) -> int:
    """d_i = (i-1)*x*p*n + x + y*p, reduced mod n*p^3."""
    if not 1 <= i <= fp.p:
        raise BadIndex(f"member index {i} outside [1, {fp.p}]")
    return ((i - 1) * fp.x * fp.p * fp.n + fp.offset) % fp.order


def family_residues(fp: Params, i: int) -> list[int]:
    """The full (symmetric) residue set of member i, in generation order."""
    base, mult = _split(fp)
    N = base.order
    block = base.n * base.p**2
    d = family_base_jump(base, i)
    classes = [d]
    for k in range(1, base.p):
        classes += [(k * block - d) % N, (k * block + d) % N]
    classes.append((N - d) % N)
    fixed = []
    for v in mult:
        fixed += [(base.p * v) % N, (N - base.p * v) % N]
    if len(set(classes)) != 2 * base.p:
        raise DegenerateSet(f"the classes of d_{i} = {d} collide mod {N}")
    if any(c % base.p == 0 for c in classes) or set(classes) & set(fixed):
        raise DegenerateSet(f"a class of d_{i} = {d} meets a multiple of {base.p}")
    if 0 in fixed:
        raise DegenerateSet(f"a multiple of {base.p} vanishes mod {N}")
    return sorted(set(fixed)) + classes


def family_set(fp: Params, i: int) -> CirculantGraph:
    base, _ = _split(fp)
    return CirculantGraph.from_residues(base.order, family_residues(fp, i))


def extended_family_set(ep: ExtendedParams, i: int) -> CirculantGraph:
    return family_set(ep, i)


def family_all(fp: Params) -> list[CirculantGraph]:
    base, _ = _split(fp)
    members = [family_set(fp, i) for i in range(1, base.p + 1)]
    if len(set(members)) != base.p:
        raise DegenerateSet(f"family members are not distinct for {fp}")
    return members


def complement_params(fp: FamilyParams) -> FamilyParams:
    """Parameters whose offset is n*p^2 minus the original offset.

    Both parameter sets generate the same members in the same order.
    """
    target = fp.n * fp.p**2 - fp.offset
    x = target % fp.p
    return FamilyParams(fp.p, fp.n, x, (target - x) // fp.p)


def is_self_complementary(fp: FamilyParams) -> bool:
    return 2 * fp.offset == fp.n * fp.p**2


@dataclass
class FamilyReport:
    params: dict
    members: list[CirculantGraph]
    checks: dict

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        return {
            "params": self.params,
            "order": self.members[0].n,
            "members": [str(g) for g in self.members],
            "checks": dict(self.checks),
            "ok": self.ok,
        }


def verify_family(fp: Params) -> FamilyReport:
    """Check the family's Type-2 structure; raises TheoremViolation on failure."""
    base, _ = _split(fp)
    p, n = base.p, base.n
    members = family_all(fp)
    checks = {}

    for i in range(p):
        for j in range(p):
            got = theta_graph(members[i], p, j * n)
            want = members[(i + j) % p]
            if got != want:
                raise TheoremViolation(
                    "theta_cycling", f"theta_(p={p}, t={j * n})({members[i]}) = {got}, expected {want}"
                )
    checks["theta_cycling"] = True

    for i, g in enumerate(members):
        orbit = adams_orbit(g)
        for j, h in enumerate(members):
            if i != j and h in orbit:
                raise TheoremViolation(
                    "non_adams", f"{h} = {orbit.witness[h]} * {g} is an Adam's image"
                )
    checks["non_adams"] = True

    group = type2_group(members[0], p)
    if group.order != p:
        raise TheoremViolation("group_order", f"Type-2 group of {members[0]} has order {group.order} != {p}")
    if set(group.members) != set(members):
        raise TheoremViolation("group_members", "Type-2 group differs from the generated family")
    checks["group_order"] = True
    checks["group_members"] = True

    profile = gcd_profile(members[0])
    for g in members[1:]:
        if gcd_profile(g) != profile:
            raise TheoremViolation("invariants", f"gcd profile of {g} differs from {members[0]}")
        if not same_spectrum(members[0], g):
            raise TheoremViolation("invariants", f"spectrum of {g} differs from {members[0]}")
    checks["invariants"] = True

    return FamilyReport(fp.to_json(), members, checks)


def annexure_params(p: int, n: int) -> list[FamilyParams]:
    """Parameter tuples listed for (p, n): y ascending in [0, n-1], x ascending."""
    return [FamilyParams(p, n, x, y) for y in range(n) for x in range(1, p)]


def block_header(fp: FamilyParams) -> str:
    N = fp.order
    return (
        f"T2_{{{N},{fp.p}}}(C_{{{N}}}(R^{{{N},{fp.offset}}}_i)), "
        f"p = {fp.p}, x = {fp.x}, y = {fp.y} and n = {fp.n}."
    )


def annexure_listing(p: int, n: int, fmt: str = "text") -> Union[str, list]:
    """Blocks of Type-2 groups for order n*p^3, members as full residue sets."""
    if not is_prime(p):
        raise InvalidParams(f"p = {p} is not prime")
    blocks = []
    for fp in annexure_params(p, n):
        members = family_all(fp)
        blocks.append((fp, members))
    if fmt == "json":
        return [
            {
                "params": fp.to_json(),
                "header": block_header(fp),
                "members": [str(g) for g in members],
                "full_sets": [render_full(g) for g in members],
            }
            for fp, members in blocks
        ]
    lines = []
    for fp, members in blocks:
        lines.append(block_header(fp))
        lines.extend(render_full(g) for g in members)
    return "\n".join(lines) + "\n"
